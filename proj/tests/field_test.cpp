#include <gtest/gtest.h>

#include <random>
#include <set>

#include "turan/error.hpp"
#include "turan/field.hpp"

namespace turan {
namespace {

struct Shape {
    std::uint32_t p;
    std::uint32_t k;
};

const std::vector<Shape> kSmallFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1},
                                         {13, 1}, {2, 4}, {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6}};

template <class F>
void expect_error(ErrorKind kind, F&& f) {
    try {
        f();
        FAIL() << "expected " << to_string(kind);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

// Schoolbook product of coefficient vectors reduced mod (modulus, p); shares no
// code with the log/antilog tables.
std::vector<std::uint32_t> naive_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                     const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
    const std::size_t k = a.size();
    std::vector<std::uint64_t> prod(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    for (std::size_t d = 2 * k - 1; d >= k; --d) {
        const auto c = prod[d];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
    }
    return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(k)};
}

TEST(Field, Gf2) {
    auto f = Field::make(2, 1);
    EXPECT_EQ(f.q(), 2u);
    EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(f.encode(f.generator()), 1u);
}

TEST(Field, Gf9UsesXSquaredPlusOne) {
    auto f = Field::make(3, 2);
    EXPECT_EQ(f.q(), 9u);
    EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
    auto x = f.decode(3);
    EXPECT_EQ(f.encode(f.mul(x, x)), 2u);  // x^2 = -1
}

// Frozen from tests/oracles/furedi_oracle.py.
TEST(Field, CanonicalModulusAndGenerator) {
    struct Row {
        std::uint32_t p, k;
        std::vector<std::uint32_t> modulus;
        std::uint32_t generator;
    };
    const std::vector<Row> rows = {
        {2, 2, {1, 1, 1}, 2},    {2, 3, {1, 1, 0, 1}, 2}, {2, 4, {1, 1, 0, 0, 1}, 2}, {3, 1, {0, 1}, 2},
        {3, 2, {1, 0, 1}, 4},    {3, 3, {1, 2, 0, 1}, 3}, {5, 1, {0, 1}, 2},          {5, 2, {2, 0, 1}, 6},
        {7, 1, {0, 1}, 3},       {7, 2, {1, 0, 1}, 9},    {13, 1, {0, 1}, 2},
    };
    for (const auto& row : rows) {
        auto f = Field::make(row.p, row.k);
        EXPECT_EQ(f.modulus(), row.modulus) << row.p << "^" << row.k;
        EXPECT_EQ(f.encode(f.generator()), row.generator) << row.p << "^" << row.k;
    }
}

TEST(Field, Errors) {
    expect_error(ErrorKind::NotPrime, [] { Field::make(4, 1); });
    expect_error(ErrorKind::NotPrime, [] { Field::make(1, 3); });
    expect_error(ErrorKind::SizeLimitExceeded, [] { Field::make(2, 21); });
    expect_error(ErrorKind::SizeLimitExceeded, [] { Field::make(3, 3, 26); });
    EXPECT_NO_THROW(Field::make(3, 3, 27));
    auto f = Field::make(3, 2);
    expect_error(ErrorKind::OutOfRange, [&] { f.decode(9); });
    expect_error(ErrorKind::DivisionByZero, [&] { f.inv(f.zero()); });
    auto g = Field::make(3, 1);
    expect_error(ErrorKind::FieldMismatch, [&] { f.mul(f.one(), g.one()); });
    expect_error(ErrorKind::FieldMismatch, [&] { f.add(Element{}, f.one()); });
    expect_error(ErrorKind::InvalidSubfield, [&] { f.norm(f.one(), 3); });
    expect_error(ErrorKind::InvalidSubfield, [&] { f.norm(f.one(), 0); });
}

TEST(Field, EncodeDecode) {
    auto f = Field::make(3, 2);
    EXPECT_EQ(f.encode(f.zero()), 0u);
    EXPECT_EQ(f.coeffs(f.decode(5)), (std::vector<std::uint32_t>{2, 1}));
    for (std::uint32_t n = 0; n < f.q(); ++n) {
        EXPECT_EQ(f.encode(f.decode(n)), n);
        EXPECT_EQ(f.from_coeffs(f.coeffs(f.decode(n))), f.decode(n));
    }
}

TEST(Field, Gf9NormOfGenerator) {
    auto f = Field::make(3, 2);
    auto g = f.generator();
    auto g4 = f.mul(f.mul(g, g), f.mul(g, g));
    EXPECT_EQ(f.norm(g, 1), g4);
    EXPECT_EQ(f.encode(f.norm(g, 1)), 2u);
    EXPECT_EQ(f.mul(g4, g4), f.one());
    EXPECT_EQ(f.norm(f.zero(), 1), f.zero());
    EXPECT_EQ(f.norm(f.one(), 1), f.one());
}

TEST(FieldProperty, AxiomsExhaustiveUpTo64) {
    for (auto [p, k] : kSmallFields) {
        auto f = Field::make(p, k);
        const auto q = f.q();
        for (std::uint32_t a = 0; a < q; ++a) {
            auto x = f.decode(a);
            EXPECT_EQ(f.add(x, f.zero()), x);
            EXPECT_EQ(f.mul(x, f.one()), x);
            EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
            if (a != 0) EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
            for (std::uint32_t b = 0; b < q; ++b) {
                auto y = f.decode(b);
                ASSERT_EQ(f.add(x, y), f.add(y, x));
                ASSERT_EQ(f.mul(x, y), f.mul(y, x));
                ASSERT_EQ(f.sub(f.add(x, y), y), x);
                ASSERT_EQ(f.coeffs(f.mul(x, y)), naive_mul(f.coeffs(x), f.coeffs(y), f.modulus(), p))
                    << p << "^" << k << " " << a << "*" << b;
                for (std::uint32_t c = 0; c < q; c += (q > 32 ? 3 : 1)) {
                    auto z = f.decode(c);
                    ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                    ASSERT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                    ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        }
    }
}

TEST(FieldProperty, AxiomsSampledInLargerFields) {
    std::mt19937_64 rng(7);
    for (auto [p, k] : std::vector<Shape>{{3, 7}, {2, 16}, {1021, 1}, {31, 3}, {2, 20}}) {
        auto f = Field::make(p, k);
        auto pick = [&] { return f.decode(rng() % f.q()); };
        for (int i = 0; i < 2000; ++i) {
            auto x = pick(), y = pick(), z = pick();
            ASSERT_EQ(f.coeffs(f.mul(x, y)), naive_mul(f.coeffs(x), f.coeffs(y), f.modulus(), p));
            ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
            ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
            if (x != f.zero()) ASSERT_EQ(f.mul(x, f.inv(x)), f.one());
        }
    }
}

// The modulus is irreducible iff GF(p)[x]/(f) has no zero divisors; every
// monic f with a smaller coefficient encoding must have one.
TEST(FieldProperty, ModulusIsMinimalIrreducible) {
    for (auto [p, k] : std::vector<Shape>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 6}, {7, 2}}) {
        auto f = Field::make(p, k);
        const std::uint32_t q = f.q();
        auto has_zero_divisor = [&](const std::vector<std::uint32_t>& modulus) {
            std::vector<std::uint32_t> a(k), b(k);
            for (std::uint32_t x = 1; x < q; ++x)
                for (std::uint32_t y = x; y < q; ++y) {
                    for (std::uint32_t i = 0, u = x, v = y; i < k; ++i, u /= p, v /= p) {
                        a[i] = u % p;
                        b[i] = v % p;
                    }
                    auto prod = naive_mul(a, b, modulus, p);
                    if (std::all_of(prod.begin(), prod.end(), [](auto c) { return c == 0; })) return true;
                }
            return false;
        };
        std::uint32_t code = 0;
        for (std::uint32_t i = k; i-- > 0;) code = code * p + f.modulus()[i];
        EXPECT_FALSE(has_zero_divisor(f.modulus()));
        for (std::uint32_t c = 0; c < code; ++c) {
            std::vector<std::uint32_t> m(k + 1, 1);
            for (std::uint32_t i = 0, v = c; i < k; ++i, v /= p) m[i] = v % p;
            EXPECT_TRUE(has_zero_divisor(m)) << p << "^" << k << " code " << c;
        }
    }
}

TEST(FieldProperty, GeneratorHasFullOrderAndIsMinimal) {
    for (auto [p, k] : kSmallFields) {
        auto f = Field::make(p, k);
        const auto order = f.q() - 1;
        auto g = f.generator();
        EXPECT_EQ(f.pow(g, order), f.one());
        EXPECT_EQ(f.inv(f.one()), f.one());
        for (std::uint32_t d = 1; d < order; ++d)
            if (order % d == 0) EXPECT_NE(f.pow(g, d), f.one()) << p << "^" << k << " d=" << d;
        // No smaller nonzero element generates: its powers miss something.
        for (std::uint32_t c = 1; c < f.encode(g); ++c) {
            std::set<std::uint32_t> seen;
            auto x = f.one();
            for (std::uint32_t i = 0; i < order; ++i, x = f.mul(x, f.decode(c))) seen.insert(x.value());
            EXPECT_LT(seen.size(), order);
        }
    }
}

TEST(FieldProperty, NormMultiplicativeAndLandsInSubfield) {
    std::vector<Shape> shapes = kSmallFields;
    shapes.push_back({3, 4});  // q = 81
    for (auto [p, k] : shapes) {
        auto f = Field::make(p, k);
        for (std::uint32_t d = 1; d <= k; ++d) {
            if (k % d != 0) continue;
            std::uint64_t s = 1;
            for (std::uint32_t i = 0; i < d; ++i) s *= p;
            const auto sub = f.subfield_elements(d);
            ASSERT_EQ(sub.size(), s);
            std::set<std::uint32_t> sub_set;
            for (auto e : sub) sub_set.insert(e.value());
            for (std::uint32_t a = 0; a < f.q(); ++a) {
                auto x = f.decode(a);
                auto n = f.norm(x, d);
                // Route 2: product of Frobenius conjugates x * x^s * x^(s^2) * ...
                auto prod = f.one();
                auto conj = x;
                for (std::uint32_t i = 0; i < k / d; ++i) {
                    prod = f.mul(prod, conj);
                    conj = f.pow(conj, s);
                }
                ASSERT_EQ(n, prod);
                ASSERT_TRUE(sub_set.contains(n.value()));
                if (a != 0) ASSERT_EQ(f.pow(n, s - 1), f.one());
                if (f.q() <= 64)
                    for (std::uint32_t b = 0; b < f.q(); ++b) {
                        auto y = f.decode(b);
                        ASSERT_EQ(f.norm(f.mul(x, y), d), f.mul(n, f.norm(y, d)));
                    }
            }
        }
    }
}

TEST(Subgroup, Trivial) {
    auto f = Field::make(5, 1);
    auto h = Subgroup::make(f, 1);
    ASSERT_EQ(h.elements().size(), 1u);
    EXPECT_EQ(h.elements()[0], f.one());
}

TEST(Subgroup, Gf9OrderFourMatchesBruteForce) {
    auto f = Field::make(3, 2);
    auto h = Subgroup::make(f, 4);
    std::vector<Element> brute;
    for (std::uint32_t a = 1; a < 9; ++a)
        if (f.pow(f.decode(a), 4) == f.one()) brute.push_back(f.decode(a));
    EXPECT_EQ(h.elements(), brute);
    std::vector<std::uint32_t> encs;
    for (auto e : h.elements()) encs.push_back(e.value());
    EXPECT_EQ(encs, (std::vector<std::uint32_t>{1, 2, 3, 6}));
    for (std::uint32_t a = 0; a < 9; ++a)
        EXPECT_EQ(h.contains(f.decode(a)), std::find(brute.begin(), brute.end(), f.decode(a)) != brute.end());
}

TEST(Subgroup, OrderMustDivide) {
    auto f = Field::make(3, 2);
    expect_error(ErrorKind::OrderDoesNotDivide, [&] { Subgroup::make(f, 5); });
    expect_error(ErrorKind::OrderDoesNotDivide, [&] { Subgroup::make(f, 0); });
}

TEST(SubgroupProperty, ClosedUnderProductAndInverse) {
    for (auto [p, k] : kSmallFields) {
        auto f = Field::make(p, k);
        for (std::uint32_t t = 1; t < f.q(); ++t) {
            if ((f.q() - 1) % t != 0) continue;
            auto h = Subgroup::make(f, t);
            ASSERT_EQ(h.elements().size(), t);
            EXPECT_TRUE(h.contains(f.one()));
            for (auto x : h.elements()) {
                EXPECT_TRUE(h.contains(f.inv(x)));
                EXPECT_EQ(f.pow(x, t), f.one());
                for (auto y : h.elements()) EXPECT_TRUE(h.contains(f.mul(x, y)));
            }
        }
    }
}

TEST(FieldProperty, Deterministic) {
    for (auto [p, k] : kSmallFields) {
        auto a = Field::make(p, k);
        auto b = Field::make(p, k);
        EXPECT_EQ(a.modulus(), b.modulus());
        EXPECT_EQ(a.encode(a.generator()), b.encode(b.generator()));
        EXPECT_TRUE(a == b);
    }
}

TEST(PrimePower, Splits) {
    EXPECT_EQ(prime_power(49), (std::pair<std::uint32_t, std::uint32_t>{7, 2}));
    EXPECT_EQ(prime_power(2), (std::pair<std::uint32_t, std::uint32_t>{2, 1}));
    EXPECT_FALSE(prime_power(12));
    EXPECT_FALSE(prime_power(1));
    EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
}

}  // namespace
}  // namespace turan
