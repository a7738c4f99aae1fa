#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turan/field.hpp"
#include "turan/graph.hpp"

namespace turan {

inline constexpr std::uint64_t kDefaultSubsetBudget = 5'000'000'000;
inline constexpr std::uint64_t kDefaultSystemBudget = 100'000'000;

struct SearchOptions {
    unsigned workers = 1;
    /// Upper limit on C(n, a); larger searches raise BudgetExceeded.
    std::uint64_t budget = kDefaultSubsetBudget;
};

/// Number of vertices adjacent to every member of `subset`.
std::size_t common_neighbor_count(const AdjacencyGraph& g, std::span<const std::size_t> subset);

/// C(n, a), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t a);

struct CommonNeighborhood {
    std::size_t max_common = 0;
    std::vector<std::size_t> witness;  // lexicographically smallest maximizer
    std::uint64_t subsets_scanned = 0;  // a-subsets whose full intersection was evaluated
};

/// Exact maximum of |N(v1) & ... & N(va)| over all a-subsets.
///
/// The search is split into one task per smallest subset index. Each task
/// abandons a prefix once its running intersection is no larger than the best
/// value seen in that task, so the result (witness and scan count included)
/// does not depend on the number of workers.
CommonNeighborhood max_common_neighbors(const AdjacencyGraph& g, std::uint32_t a, const SearchOptions& opts = {});

struct FreenessCertificate {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::size_t n = 0;
    std::uint64_t m = 0;
    std::size_t max_common = 0;
    std::vector<std::size_t> witness;
    std::uint64_t subsets_scanned = 0;
    bool free = false;

    // Provenance carried into the serialized record; zero when unknown.
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t t = 0;

    friend bool operator==(const FreenessCertificate&, const FreenessCertificate&) = default;
};

/// Decides K_{a,b}-freeness. (a, b) is normalized so that a <= b. The graph is
/// simple, so a common neighbor of an a-set never lies inside it, and some
/// a-set has >= b common neighbors iff K_{a,b} is a subgraph.
FreenessCertificate certify_kab_free(const AdjacencyGraph& g, std::uint32_t a, std::uint32_t b,
                                     const SearchOptions& opts = {});
FreenessCertificate certify_kab_free(const FurediGraph& g, std::uint32_t a, std::uint32_t b,
                                     const SearchOptions& opts = {});
FreenessCertificate certify_kab_free(const GraphFile& g, std::uint32_t a, std::uint32_t b,
                                     const SearchOptions& opts = {});

/// One line of key=value pairs: kind p k t a b n m max_common verdict witness subsets_scanned seed.
std::string format_certificate(const FreenessCertificate& c);

enum class LemmaId { L, AG };
enum class LemmaMode { Exhaustive, Sampled };

struct LemmaReport {
    LemmaId lemma = LemmaId::L;
    std::uint32_t p = 0;
    std::uint32_t k = 0;        // extension degree of the field searched
    std::uint64_t q = 0;        // base prime power
    std::uint32_t r = 0;        // 2 for lemma L
    std::uint32_t t = 0;        // |H| for lemma L, 0 for AG
    std::uint64_t max_solutions = 0;
    std::uint64_t bound = 0;
    bool exhaustive = true;
    std::uint64_t systems_scanned = 0;
    std::optional<std::uint64_t> seed;
    /// Encodings of the first system attaining max_solutions:
    /// (a, b) for L; (d_1..d_r, c_1..c_r) for AG.
    std::vector<std::uint32_t> witness;
    /// Lemma L only: brute-force counts matched the quadratic-root route on every system.
    bool quadratic_consistent = true;

    bool holds() const { return max_solutions <= bound && quadratic_consistent; }
};

/// For every a, b != 0 in GF(q^2) counts (x, y) in H x H, |H| = q+1, with
/// a*x + b*y = 1, and checks each count against the roots in H of
/// a*x^2 - (a^(q+1) - b^(q+1) + 1)*x + a^q that give y = (1 - a*x)/b in H.
/// `budget` caps the number of candidate evaluations, (q^2-1)^2 * ((q+1)^2 + q^2).
LemmaReport verify_lemma_L(std::uint64_t q, std::uint64_t budget = kDefaultSystemBudget);

struct LemmaAgOptions {
    LemmaMode mode = LemmaMode::Exhaustive;
    std::uint64_t samples = 2000;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultSystemBudget;
};

/// Maximum number of x in GF(q^r) with N(x + d_i) = c_i for all i, over
/// distinct d_1..d_r and c_i in GF(q). Each ordered d-tuple is evaluated
/// against every c-tuple at once by bucketing x on its vector of norms.
/// Sampled mode draws the d-tuples from a seeded stream.
LemmaReport verify_lemma_AG(std::uint64_t q, std::uint32_t r, const LemmaAgOptions& opts = {});

/// Direct count of x in F with N(x + d_i) = c_i for every i (norm to the
/// subfield of the given degree).
std::uint64_t count_norm_solutions(const Field& f, std::uint32_t subfield_degree, std::span<const Element> d,
                                   std::span<const Element> c);

std::string format_lemma(const LemmaReport& r);

struct SuiteEntry {
    std::string family;  // "k2t", "k33", "k3t", "krs" or "krst"
    std::uint64_t field_size = 0;
    std::uint32_t t = 0;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::optional<FreenessCertificate> certificate;
    std::string skipped;  // reason when no certificate was produced
};

struct SuiteResult {
    std::vector<SuiteEntry> graphs;
    std::vector<LemmaReport> lemmas;
    std::vector<std::string> skipped_lemmas;

    bool ok() const;
};

struct SuiteOptions {
    SearchOptions search;
    LemmaAgOptions lemma_ag;
    std::size_t max_vertices = kDefaultMaxVertices;
};

/// Builds every freeness instance of the construction at base prime power q
/// (t-dependent families only when t is given) and certifies the claimed
/// K_{a,b}; also runs both lemma oracles. Searches beyond budget are recorded
/// as skipped rather than failed.
SuiteResult theorem_suite(std::uint64_t q, std::optional<std::uint32_t> t, std::uint32_t r,
                          const SuiteOptions& opts = {});

std::string format_suite(const SuiteResult& s);

}  // namespace turan
