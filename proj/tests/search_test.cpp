#include <gtest/gtest.h>

#include <random>

#include "turan/error.hpp"
#include "turan/verify.hpp"

namespace turan {
namespace {

FurediGraph build(std::uint64_t q, std::uint32_t t) {
    auto pk = prime_power(q);
    return FurediGraph::build(Field::make(pk->first, pk->second), t);
}

AdjacencyGraph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
    AdjacencyGraph g(n);
    std::bernoulli_distribution edge(density);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

// Looks for disjoint A (|A| = a) and B (|B| = b) with every A-B pair adjacent,
// enumerating A and growing B one vertex at a time. Uses only adjacent().
bool naive_contains_kab(const AdjacencyGraph& g, std::size_t a, std::size_t b) {
    const std::size_t n = g.size();
    std::vector<std::size_t> A, B;
    std::vector<bool> in_a(n, false);
    auto grow_b = [&](auto&& self, std::size_t from) -> bool {
        if (B.size() == b) return true;
        for (std::size_t v = from; v < n; ++v) {
            if (in_a[v]) continue;
            bool joined = true;
            for (auto u : A) joined = joined && g.adjacent(u, v);
            if (!joined) continue;
            B.push_back(v);
            if (self(self, v + 1)) return true;
            B.pop_back();
        }
        return false;
    };
    auto grow_a = [&](auto&& self, std::size_t from) -> bool {
        if (A.size() == a) return grow_b(grow_b, 0);
        for (std::size_t v = from; v < n; ++v) {
            A.push_back(v);
            in_a[v] = true;
            if (self(self, v + 1)) return true;
            in_a[v] = false;
            A.pop_back();
        }
        return false;
    };
    return grow_a(grow_a, 0);
}

// Plain lexicographic scan over all a-subsets, no pruning.
std::pair<std::size_t, std::vector<std::size_t>> naive_max_common(const AdjacencyGraph& g, std::size_t a) {
    const std::size_t n = g.size();
    std::vector<std::size_t> s(a);
    for (std::size_t i = 0; i < a; ++i) s[i] = i;
    std::size_t best = 0;
    std::vector<std::size_t> wit;
    while (true) {
        std::size_t c = 0;
        for (std::size_t v = 0; v < n; ++v) {
            bool all = true;
            for (auto u : s) all = all && g.adjacent(u, v);
            c += all;
        }
        if (wit.empty() || c > best) {
            best = c;
            wit = s;
        }
        std::size_t i = a;
        while (i > 0 && s[i - 1] == n - a + i - 1) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t j = i; j < a; ++j) s[j] = s[j - 1] + 1;
    }
    return {best, wit};
}

TEST(MaxCommon, ArityOneIsMaxDegree) {
    auto g = build(9, 4);
    auto r = max_common_neighbors(g.adjacency(), 1);
    std::size_t max_degree = 0;
    for (std::size_t u = 0; u < g.size(); ++u) max_degree = std::max(max_degree, g.adjacency().degree(u));
    EXPECT_EQ(r.max_common, max_degree);
    EXPECT_EQ(r.witness, (std::vector<std::size_t>{5}));
    EXPECT_EQ(r.subsets_scanned, 20u);
}

// Frozen from tests/oracles/furedi_oracle.py.
TEST(MaxCommon, OracleValues) {
    struct Row {
        std::uint64_t q;
        std::uint32_t t, a;
        std::size_t max_common;
        std::vector<std::size_t> witness;
    };
    const std::vector<Row> rows = {
        {7, 3, 2, 3, {0, 2}},       {9, 4, 2, 4, {0, 2}},      {9, 4, 3, 2, {0, 2, 6}},
        {4, 3, 2, 3, {0, 1}},       {4, 3, 3, 2, {0, 1, 2}},   {5, 1, 3, 1, {0, 4, 13}},
        {27, 13, 2, 13, {0, 2}},    {27, 13, 3, 7, {0, 2, 31}}, {16, 5, 3, 2, {0, 3, 5}},
        {5, 2, 2, 2, {0, 2}},
    };
    for (const auto& row : rows) {
        auto r = max_common_neighbors(build(row.q, row.t).adjacency(), row.a);
        EXPECT_EQ(r.max_common, row.max_common) << "G(" << row.q << "," << row.t << ") a=" << row.a;
        EXPECT_EQ(r.witness, row.witness) << "G(" << row.q << "," << row.t << ") a=" << row.a;
    }
}

TEST(Certify, G9_4) {
    auto g = build(9, 4);
    auto c25 = certify_kab_free(g, 2, 5);
    EXPECT_TRUE(c25.free);
    EXPECT_EQ(c25.max_common, 4u);
    EXPECT_TRUE(certify_kab_free(g, 3, 3).free);
    auto c22 = certify_kab_free(g, 2, 2);
    EXPECT_FALSE(c22.free);
    ASSERT_EQ(c22.witness.size(), 2u);
    EXPECT_GE(common_neighbor_count(g.adjacency(), c22.witness), 2u);
    EXPECT_EQ(c22.p, 3u);
    EXPECT_EQ(c22.k, 2u);
    EXPECT_EQ(c22.t, 4u);
    EXPECT_EQ(c22.n, 20u);
    EXPECT_EQ(c22.m, 86u);
}

TEST(Certify, NormalizesArity) {
    auto g = build(7, 3);
    EXPECT_EQ(certify_kab_free(g, 4, 2), certify_kab_free(g, 2, 4));
    EXPECT_EQ(certify_kab_free(g, 4, 2).a, 2u);
}

TEST(Certify, Errors) {
    auto g = build(9, 4);
    EXPECT_THROW(certify_kab_free(g, 0, 3), Error);
    try {
        certify_kab_free(g, 0, 3);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadArity);
    }
    try {
        certify_kab_free(g, 3, 3, SearchOptions{1, 1000});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
    EXPECT_THROW(max_common_neighbors(g.adjacency(), 21), Error);
}

TEST(Certify, ArityLargerThanGraphIsFree) {
    AdjacencyGraph g(3);
    g.add_edge(0, 1);
    auto c = certify_kab_free(g, 4, 5);
    EXPECT_TRUE(c.free);
    EXPECT_EQ(c.subsets_scanned, 0u);
}

TEST(Certify, FormatRecord) {
    auto c = certify_kab_free(build(9, 4), 3, 3);
    EXPECT_EQ(format_certificate(c),
              "kind=certificate p=3 k=2 t=4 a=3 b=3 n=20 m=86 max_common=2 verdict=free witness=0,2,6 "
              "subsets_scanned=" + std::to_string(c.subsets_scanned) + " seed=-");
}

TEST(Binomial, Values) {
    EXPECT_EQ(binomial(56, 4), 367290u);
    EXPECT_EQ(binomial(300, 3), 4455100u);
    EXPECT_EQ(binomial(5, 7), 0u);
    EXPECT_EQ(binomial(10000, 5000), UINT64_MAX);
}

class RandomGraphs : public ::testing::Test {
protected:
    void SetUp() override {
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 20; ++i) {
            const std::size_t n = 8 + rng() % 23;
            const double density = 0.2 + 0.05 * static_cast<double>(rng() % 11);
            graphs.push_back(random_graph(rng, n, density));
        }
        graphs.push_back(build(4, 3).adjacency());
        graphs.push_back(build(9, 4).adjacency());
    }
    std::vector<AdjacencyGraph> graphs;
};

TEST_F(RandomGraphs, AgreesWithNaiveBipartiteSearch) {
    int free = 0, not_free = 0;
    for (const auto& g : graphs)
        for (std::uint32_t a : {2u, 3u})
            for (std::uint32_t b = 2; b <= 5; ++b) {
                const bool verdict = certify_kab_free(g, a, b).free;
                ASSERT_EQ(verdict, !naive_contains_kab(g, a, b)) << "n=" << g.size() << " a=" << a << " b=" << b;
                ++(verdict ? free : not_free);
            }
    // Both outcomes must be exercised.
    EXPECT_GT(free, 10);
    EXPECT_GT(not_free, 10);
}

TEST_F(RandomGraphs, MaxAndWitnessMatchUnprunedScan) {
    for (const auto& g : graphs)
        for (std::uint32_t a : {1u, 2u, 3u}) {
            auto fast = max_common_neighbors(g, a);
            auto [best, wit] = naive_max_common(g, a);
            ASSERT_EQ(fast.max_common, best);
            ASSERT_EQ(fast.witness, wit);
            ASSERT_EQ(common_neighbor_count(g, fast.witness), fast.max_common);
            ASSERT_LE(fast.subsets_scanned, binomial(g.size(), a));
        }
}

TEST_F(RandomGraphs, Monotone) {
    for (const auto& g : graphs)
        for (std::uint32_t a : {2u, 3u}) {
            bool was_free = false;
            for (std::uint32_t b = a; b <= 12; ++b) {
                const bool free = certify_kab_free(g, a, b).free;
                if (was_free) ASSERT_TRUE(free);
                was_free = free;
            }
        }
}

TEST_F(RandomGraphs, WorkerCountDoesNotChangeCertificates) {
    for (const auto& g : graphs)
        for (std::uint32_t a : {2u, 3u, 4u}) {
            auto one = certify_kab_free(g, a, 4, SearchOptions{1});
            for (unsigned w : {2u, 3u, 8u}) ASSERT_EQ(certify_kab_free(g, a, 4, SearchOptions{w}), one);
        }
}

TEST(Certify, ParallelDeterminismOnFurediGraphs) {
    for (auto [q, t, a] : std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>>{
             {49, 8, 3}, {27, 13, 4}, {25, 12, 3}}) {
        auto g = build(q, t);
        auto one = certify_kab_free(g, a, 9, SearchOptions{1});
        EXPECT_EQ(certify_kab_free(g, a, 9, SearchOptions{8}), one);
        EXPECT_EQ(format_certificate(certify_kab_free(g, a, 9, SearchOptions{4})), format_certificate(one));
    }
}

}  // namespace
}  // namespace turan
