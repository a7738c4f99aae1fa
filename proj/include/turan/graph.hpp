#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "turan/bitset.hpp"
#include "turan/field.hpp"

namespace turan {

inline constexpr std::size_t kDefaultMaxVertices = std::size_t{1} << 14;

/// Simple undirected graph on vertices 0..n-1 with one bitset row per vertex.
class AdjacencyGraph {
public:
    AdjacencyGraph() = default;
    explicit AdjacencyGraph(std::size_t n) : rows_(n, Bitset(n)) {}

    std::size_t size() const noexcept { return rows_.size(); }

    /// Self-loops are rejected; the graph stays simple.
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    const Bitset& row(std::size_t u) const { return rows_[u]; }
    std::size_t degree(std::size_t u) const { return rows_[u].count(); }

    std::uint64_t edge_count() const;
    /// Edges (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    friend bool operator==(const AdjacencyGraph&, const AdjacencyGraph&) = default;

private:
    std::vector<Bitset> rows_;
};

/// Canonical representative <a, b> of an H-orbit of nonzero pairs.
struct Vertex {
    Element a;
    Element b;
    std::size_t index = 0;
};

/// Orbit member (h*a, h*b), h in H, that is smallest by (enc(a), enc(b)).
std::pair<Element, Element> canonical_rep(Element a, Element b, const Subgroup& h);

/// G(q, t): vertices are H-orbits of nonzero pairs of GF(q)^2, and <a,b> ~ <x,y>
/// iff a*x + b*y lies in the order-t subgroup H. Self-incidences are dropped.
class FurediGraph {
public:
    static FurediGraph build(const Field& field, std::uint32_t t,
                             std::size_t max_vertices = kDefaultMaxVertices);

    const Field& field() const noexcept { return subgroup_.field(); }
    const Subgroup& subgroup() const noexcept { return subgroup_; }
    std::uint32_t t() const noexcept { return subgroup_.order(); }
    std::size_t size() const noexcept { return vertices_.size(); }

    /// Sorted by (enc(a), enc(b)).
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const AdjacencyGraph& adjacency() const noexcept { return adj_; }
    std::size_t loop_count() const noexcept { return loops_; }

private:
    explicit FurediGraph(Subgroup h) : subgroup_(std::move(h)) {}

    Subgroup subgroup_;
    std::vector<Vertex> vertices_;
    AdjacencyGraph adj_;
    std::size_t loops_ = 0;
};

std::uint64_t count_edges(const FurediGraph& g);
std::map<std::size_t, std::size_t> degree_histogram(const AdjacencyGraph& g);

/// Closed-form |E(G(q^2, q+1))|; the formula depends on the parity of the characteristic.
std::uint64_t expected_edge_count_g2(std::uint64_t q);

/// (q^(r-1) + 1)(q - 1) / t: vertex count of G(q^(r-1), t(q^(r-2) + ... + 1)).
std::uint64_t expected_vertex_count_general(std::uint64_t q, std::uint32_t r, std::uint64_t t = 1);

// ---------------------------------------------------------------------------
// Text graph file
//
//   # furedi p=<p> k=<k> q=<q> t=<t> n=<n> m=<m> loops=<loops>
//   # vertices: <n> lines of "idx enc_a enc_b" follow
//   <idx> <enc_a> <enc_b>          (n lines)
//   <u> <v>                        (m lines, u < v, sorted, 0-indexed)

struct GraphFile {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint64_t q = 0;
    std::uint32_t t = 0;
    std::size_t loops = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> vertices;  // (enc_a, enc_b)
    AdjacencyGraph adj;

    friend bool operator==(const GraphFile&, const GraphFile&) = default;
};

GraphFile describe(const FurediGraph& g);

void write_graph(std::ostream& out, const GraphFile& g);
GraphFile read_graph(std::istream& in);
/// DIMACS edge format: "p edge n m" then "e u v" (1-indexed).
void write_dimacs(std::ostream& out, const GraphFile& g);

void export_graph(const GraphFile& g, const std::filesystem::path& path, bool dimacs = false);
GraphFile import_graph(const std::filesystem::path& path);

}  // namespace turan
