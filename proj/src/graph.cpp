#include "turan/graph.hpp"

#include <string>

#include "turan/error.hpp"

namespace turan {

void AdjacencyGraph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw Error(ErrorKind::OutOfRange, "self-loop at vertex " + std::to_string(u));
    if (u >= size() || v >= size()) throw Error(ErrorKind::OutOfRange, "vertex index out of range");
    rows_[u].set(v);
    rows_[v].set(u);
}

std::uint64_t AdjacencyGraph::edge_count() const {
    std::uint64_t total = 0;
    for (const auto& r : rows_) total += r.count();
    return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> AdjacencyGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u)
        for (auto v : rows_[u].indices())
            if (v > u) out.emplace_back(u, v);
    return out;
}

std::pair<Element, Element> canonical_rep(Element a, Element b, const Subgroup& h) {
    const auto& f = h.field();
    if (f.encode(a) == 0 && f.encode(b) == 0) throw Error(ErrorKind::ZeroPair, "(0,0) has no class");
    std::pair best{f.q(), f.q()};
    for (auto x : h.elements()) {
        std::pair cand{f.mul_raw(x.value(), a.value()), f.mul_raw(x.value(), b.value())};
        if (cand < best) best = cand;
    }
    return {f.wrap(best.first), f.wrap(best.second)};
}

FurediGraph FurediGraph::build(const Field& field, std::uint32_t t, std::size_t max_vertices) {
    FurediGraph g(Subgroup::make(field, t));
    const std::uint64_t q = field.q();
    const std::uint64_t n = (q * q - 1) / t;
    if (n > max_vertices)
        throw Error(ErrorKind::SizeLimitExceeded,
                    "G(" + std::to_string(q) + "," + std::to_string(t) + ") has " + std::to_string(n) +
                        " vertices, limit " + std::to_string(max_vertices));

    // Scanning pairs in (enc(a), enc(b)) order, the first unseen member of each
    // orbit is its minimum.
    Bitset seen(q * q);
    const auto& hs = g.subgroup_.elements();
    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) {
            if ((a == 0 && b == 0) || seen.test(std::uint64_t{a} * q + b)) continue;
            for (auto h : hs)
                seen.set(std::uint64_t{field.mul_raw(h.value(), a)} * q + field.mul_raw(h.value(), b));
            g.vertices_.push_back(Vertex{field.wrap(a), field.wrap(b), g.vertices_.size()});
        }
    }

    const auto& sub = g.subgroup_;
    g.adj_ = AdjacencyGraph(g.vertices_.size());
    for (std::size_t u = 0; u < g.vertices_.size(); ++u) {
        const auto au = g.vertices_[u].a.value();
        const auto bu = g.vertices_[u].b.value();
        if (sub.contains_raw(field.add_raw(field.mul_raw(au, au), field.mul_raw(bu, bu)))) ++g.loops_;
        for (std::size_t v = u + 1; v < g.vertices_.size(); ++v) {
            const auto s = field.add_raw(field.mul_raw(au, g.vertices_[v].a.value()),
                                         field.mul_raw(bu, g.vertices_[v].b.value()));
            if (sub.contains_raw(s)) g.adj_.add_edge(u, v);
        }
    }
    return g;
}

std::uint64_t count_edges(const FurediGraph& g) { return g.adjacency().edge_count(); }

std::map<std::size_t, std::size_t> degree_histogram(const AdjacencyGraph& g) {
    std::map<std::size_t, std::size_t> hist;
    for (std::size_t u = 0; u < g.size(); ++u) ++hist[g.degree(u)];
    return hist;
}

std::uint64_t expected_edge_count_g2(std::uint64_t q) {
    const auto pk = prime_power(q);
    if (!pk) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (q > 4096) throw Error(ErrorKind::OutOfRange, "q too large for 64-bit edge count");
    const std::uint64_t q2 = q * q;
    const std::uint64_t twice = q2 * q2 * q - q2 * q2 + q2 * q - 2 * q2 + (pk->first == 2 ? 0 : 1);
    return twice / 2;
}

std::uint64_t expected_vertex_count_general(std::uint64_t q, std::uint32_t r, std::uint64_t t) {
    if (r < 2) throw Error(ErrorKind::OutOfRange, "r must be at least 2");
    std::uint64_t top = 1;
    for (std::uint32_t i = 0; i + 1 < r; ++i) top *= q;
    return (top + 1) * (q - 1) / t;
}

}  // namespace turan
