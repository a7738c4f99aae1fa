#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "turan/error.hpp"
#include "turan/verify.hpp"

namespace turan {

namespace {

struct TaskResult {
    long best = -1;
    std::vector<std::size_t> witness;
    std::uint64_t scanned = 0;
};

// All a-subsets whose smallest element is `first`, in lexicographic order.
class SubsetTask {
public:
    SubsetTask(const AdjacencyGraph& g, std::uint32_t a)
        : g_(g), a_(a), inter_(a, Bitset(g.size())), chosen_(a) {}

    TaskResult run(std::size_t first) {
        result_ = {};
        chosen_[0] = first;
        inter_[0] = g_.row(first);
        if (a_ == 1) {
            result_.best = static_cast<long>(inter_[0].count());
            result_.witness = {first};
            result_.scanned = 1;
        } else {
            extend(1);
        }
        return std::move(result_);
    }

private:
    void extend(std::uint32_t depth) {
        const std::size_t n = g_.size();
        const std::size_t still_needed = a_ - depth - 1;
        for (std::size_t v = chosen_[depth - 1] + 1; v + still_needed < n; ++v) {
            const auto c = static_cast<long>(inter_[depth].assign_and(inter_[depth - 1], g_.row(v)));
            chosen_[depth] = v;
            if (depth + 1 == a_) {
                ++result_.scanned;
                if (c > result_.best) {
                    result_.best = c;
                    result_.witness = chosen_;
                }
            } else if (c > result_.best) {
                extend(depth + 1);
            }
        }
    }

    const AdjacencyGraph& g_;
    std::uint32_t a_;
    std::vector<Bitset> inter_;
    std::vector<std::size_t> chosen_;
    TaskResult result_;
};

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t a) {
    if (a > n) return 0;
    a = std::min(a, n - a);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= a; ++i) {
        r = r * (n - a + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

std::size_t common_neighbor_count(const AdjacencyGraph& g, std::span<const std::size_t> subset) {
    if (subset.empty()) return g.size();
    Bitset acc = g.row(subset[0]);
    for (auto v : subset.subspan(1)) acc &= g.row(v);
    return acc.count();
}

CommonNeighborhood max_common_neighbors(const AdjacencyGraph& g, std::uint32_t a, const SearchOptions& opts) {
    const std::size_t n = g.size();
    if (a < 1 || a > n)
        throw Error(ErrorKind::BadArity, "subset size " + std::to_string(a) + " outside [1, " + std::to_string(n) + "]");
    const auto total = binomial(n, a);
    if (total > opts.budget)
        throw Error(ErrorKind::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(a) + ")=" +
                                                   std::to_string(total) + " exceeds budget " +
                                                   std::to_string(opts.budget));

    const std::size_t tasks = n - a + 1;
    std::vector<TaskResult> results(tasks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        SubsetTask task(g, a);
        for (auto i = next.fetch_add(1); i < tasks; i = next.fetch_add(1)) results[i] = task.run(i);
    };
    const auto workers = std::clamp<std::size_t>(opts.workers, 1, tasks);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    // Tasks are ordered by smallest element, so the first task attaining the
    // maximum holds the lexicographically smallest witness.
    CommonNeighborhood out;
    long best = -1;
    for (auto& r : results) {
        out.subsets_scanned += r.scanned;
        if (r.best > best) {
            best = r.best;
            out.witness = std::move(r.witness);
        }
    }
    out.max_common = static_cast<std::size_t>(best);
    return out;
}

FreenessCertificate certify_kab_free(const AdjacencyGraph& g, std::uint32_t a, std::uint32_t b,
                                     const SearchOptions& opts) {
    if (a > b) std::swap(a, b);
    if (a < 1) throw Error(ErrorKind::BadArity, "K_{a,b} needs a >= 1");
    FreenessCertificate c;
    c.a = a;
    c.b = b;
    c.n = g.size();
    c.m = g.edge_count();
    if (a > g.size()) {
        c.free = true;
        return c;
    }
    auto best = max_common_neighbors(g, a, opts);
    c.max_common = best.max_common;
    c.witness = std::move(best.witness);
    c.subsets_scanned = best.subsets_scanned;
    c.free = c.max_common + 1 <= b;
    return c;
}

FreenessCertificate certify_kab_free(const FurediGraph& g, std::uint32_t a, std::uint32_t b,
                                     const SearchOptions& opts) {
    auto c = certify_kab_free(g.adjacency(), a, b, opts);
    c.p = g.field().p();
    c.k = g.field().k();
    c.t = g.t();
    return c;
}

FreenessCertificate certify_kab_free(const GraphFile& g, std::uint32_t a, std::uint32_t b,
                                     const SearchOptions& opts) {
    auto c = certify_kab_free(g.adj, a, b, opts);
    c.p = g.p;
    c.k = g.k;
    c.t = g.t;
    return c;
}

std::string format_certificate(const FreenessCertificate& c) {
    std::ostringstream out;
    out << "kind=certificate p=" << c.p << " k=" << c.k << " t=" << c.t << " a=" << c.a << " b=" << c.b
        << " n=" << c.n << " m=" << c.m << " max_common=" << c.max_common
        << " verdict=" << (c.free ? "free" : "not_free") << " witness=";
    if (c.witness.empty()) out << '-';
    for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? "," : "") << c.witness[i];
    out << " subsets_scanned=" << c.subsets_scanned << " seed=-";
    return out.str();
}

}  // namespace turan
