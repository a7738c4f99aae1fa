#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "turan/bitset.hpp"

namespace turan {

inline constexpr std::uint64_t kDefaultFieldSizeLimit = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

/// Splits q = p^k. Returns nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// An element of some GF(p^k), stored as its base-p encoding
/// sum coeffs[i] * p^i. The tag identifies the owning field shape (p, k) so
/// that mixing elements of different fields is detected.
class Element {
public:
    constexpr Element() = default;

    constexpr std::uint32_t value() const noexcept { return value_; }
    constexpr std::uint32_t tag() const noexcept { return tag_; }

    friend constexpr bool operator==(Element, Element) = default;

private:
    friend class Field;
    constexpr Element(std::uint32_t tag, std::uint32_t value) : tag_(tag), value_(value) {}

    std::uint32_t tag_ = 0;
    std::uint32_t value_ = 0;
};

/// GF(p^k) in a polynomial basis over GF(p).
///
/// The modulus is the monic irreducible of degree k whose non-leading
/// coefficient tuple has the smallest encoding; the generator is the primitive
/// element with the smallest encoding. Both depend only on (p, k), so two
/// fields built from the same parameters are interchangeable.
///
/// Copies share the (immutable) log/antilog tables and are safe to use from
/// several threads at once.
class Field {
public:
    static Field make(std::uint32_t p, std::uint32_t k,
                      std::uint64_t size_limit = kDefaultFieldSizeLimit);

    std::uint32_t p() const noexcept { return impl_->p; }
    std::uint32_t k() const noexcept { return impl_->k; }
    std::uint32_t q() const noexcept { return impl_->q; }
    std::uint32_t tag() const noexcept { return impl_->tag; }

    /// k+1 coefficients, constant term first, leading coefficient 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return impl_->modulus; }
    Element generator() const noexcept { return wrap(impl_->generator); }

    Element zero() const noexcept { return wrap(0); }
    Element one() const noexcept { return wrap(1); }

    Element decode(std::uint64_t n) const;
    std::uint64_t encode(Element x) const;
    std::vector<std::uint32_t> coeffs(Element x) const;
    Element from_coeffs(const std::vector<std::uint32_t>& coeffs) const;

    Element add(Element x, Element y) const;
    Element sub(Element x, Element y) const;
    Element mul(Element x, Element y) const;
    Element div(Element x, Element y) const;
    Element neg(Element x) const;
    Element inv(Element x) const;
    Element pow(Element x, std::uint64_t e) const;

    /// Norm to the subfield GF(p^subfield_degree): x^(1 + s + ... + s^(r-1))
    /// with s = p^subfield_degree and r = k / subfield_degree.
    Element norm(Element x, std::uint32_t subfield_degree) const;

    /// Elements of the subfield GF(p^subfield_degree), sorted by encoding.
    std::vector<Element> subfield_elements(std::uint32_t subfield_degree) const;

    /// Discrete log base the generator; x must be nonzero.
    std::uint32_t log(Element x) const;
    /// generator^i.
    Element exp(std::uint64_t i) const { return wrap(exp_raw(i % (q() - 1))); }

    bool operator==(const Field& other) const noexcept { return tag() == other.tag(); }

    // Unchecked arithmetic on encodings, for inner loops.
    std::uint32_t add_raw(std::uint32_t x, std::uint32_t y) const noexcept;
    std::uint32_t sub_raw(std::uint32_t x, std::uint32_t y) const noexcept;
    std::uint32_t neg_raw(std::uint32_t x) const noexcept;
    std::uint32_t mul_raw(std::uint32_t x, std::uint32_t y) const noexcept {
        if (x == 0 || y == 0) return 0;
        return impl_->exp[impl_->log[x] + impl_->log[y]];
    }
    std::uint32_t inv_raw(std::uint32_t x) const noexcept {
        auto l = impl_->log[x];
        return impl_->exp[l == 0 ? 0 : (q() - 1) - l];
    }
    std::uint32_t exp_raw(std::uint64_t i) const noexcept { return impl_->exp[i]; }
    std::uint32_t log_raw(std::uint32_t x) const noexcept { return impl_->log[x]; }
    std::uint32_t norm_raw(std::uint32_t x, std::uint32_t subfield_degree) const;

    Element wrap(std::uint32_t value) const noexcept { return Element(impl_->tag, value); }

private:
    struct Impl {
        std::uint32_t p = 0;
        std::uint32_t k = 0;
        std::uint32_t q = 0;
        std::uint32_t tag = 0;
        std::vector<std::uint32_t> modulus;
        std::uint32_t generator = 0;
        std::vector<std::uint32_t> digit_weight;  // p^i
        std::vector<std::uint32_t> exp;           // length 2(q-1): g^i, wrapped
        std::vector<std::uint32_t> log;           // log[0] unused
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    void check(Element x) const;

    std::shared_ptr<const Impl> impl_;
};

/// The unique multiplicative subgroup of order t of a field's cyclic unit group.
class Subgroup {
public:
    static Subgroup make(const Field& field, std::uint32_t order);

    const Field& field() const noexcept { return field_; }
    std::uint32_t order() const noexcept { return order_; }
    /// Sorted by encoding.
    const std::vector<Element>& elements() const noexcept { return elements_; }

    bool contains(Element x) const;
    bool contains_raw(std::uint32_t x) const noexcept { return membership_.test(x); }

private:
    Subgroup(Field field, std::uint32_t order) : field_(std::move(field)), order_(order) {}

    Field field_;
    std::uint32_t order_;
    std::vector<Element> elements_;
    Bitset membership_;
};

}  // namespace turan
