#include "turan/field.hpp"

#include <algorithm>
#include <string>

#include "turan/error.hpp"

namespace turan {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::NotPrimePower: return "NotPrimePower";
        case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::InvalidSubfield: return "InvalidSubfield";
        case ErrorKind::OrderDoesNotDivide: return "OrderDoesNotDivide";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::ZeroPair: return "ZeroPair";
        case ErrorKind::MalformedFile: return "MalformedFile";
        case ErrorKind::HeaderMismatch: return "HeaderMismatch";
        case ErrorKind::BadArity: return "BadArity";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto factors = prime_factors(q);
    if (factors.size() != 1 || factors[0] > UINT32_MAX) return std::nullopt;
    std::uint32_t k = 0;
    while (q > 1) {
        q /= factors[0];
        ++k;
    }
    return std::pair{static_cast<std::uint32_t>(factors[0]), k};
}

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients mod p, constant term first

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // p is prime: a^(p-2)
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// Remainder of f modulo g (g nonzero, trimmed).
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
    trim(f);
    const auto dg = g.size() - 1;
    const auto lead_inv = inv_mod(g.back(), p);
    while (f.size() > dg) {
        const auto shift = f.size() - 1 - dg;
        const auto factor = f.back() * lead_inv % p;
        for (std::size_t i = 0; i <= dg; ++i)
            f[shift + i] = (f[shift + i] + (p - factor) * g[i]) % p;
        trim(f);
    }
    return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), modulus, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& modulus, std::uint64_t p) {
    Poly result{1};
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, modulus, p);
        base = poly_mulmod(base, base, modulus, p);
        e >>= 1;
    }
    return result;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `code`.
Poly monic_from_code(std::uint64_t code, std::uint32_t degree, std::uint64_t p) {
    Poly f(degree + 1, 0);
    for (std::uint32_t i = 0; i < degree; ++i) {
        f[i] = code % p;
        code /= p;
    }
    f[degree] = 1;
    return f;
}

Poly poly_from_code(std::uint64_t code, std::uint32_t k, std::uint64_t p) {
    Poly f(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        f[i] = code % p;
        code /= p;
    }
    trim(f);
    return f;
}

std::uint64_t code_from_poly(const Poly& f, std::uint64_t p) {
    std::uint64_t code = 0;
    for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
    return code;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

bool irreducible(const Poly& f, std::uint32_t degree, std::uint64_t p) {
    // Trial division by every monic polynomial of degree <= degree/2.
    for (std::uint32_t d = 1; 2 * d <= degree; ++d) {
        const auto count = ipow(p, d);
        for (std::uint64_t code = 0; code < count; ++code)
            if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
    return true;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t k, std::uint64_t size_limit) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorKind::OutOfRange, "extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > size_limit || q > (std::uint64_t{1} << 24))
            throw Error(ErrorKind::SizeLimitExceeded,
                        std::to_string(p) + "^" + std::to_string(k) + " exceeds field size limit " +
                            std::to_string(size_limit));
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = k;
    impl->q = static_cast<std::uint32_t>(q);
    impl->tag = (p << 5) | k;
    impl->digit_weight.resize(k);
    for (std::uint32_t i = 0; i < k; ++i) impl->digit_weight[i] = static_cast<std::uint32_t>(ipow(p, i));

    Poly modulus;
    for (std::uint64_t code = 0; code < q; ++code) {
        auto candidate = monic_from_code(code, k, p);
        if (irreducible(candidate, k, p)) {
            modulus = std::move(candidate);
            break;
        }
    }
    impl->modulus.assign(modulus.begin(), modulus.end());

    const auto order = q - 1;
    const auto factors = prime_factors(order);
    std::uint64_t generator = 1;
    for (std::uint64_t code = 1; code < q; ++code) {
        auto g = poly_from_code(code, k, p);
        const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t l) {
            return poly_powmod(g, order / l, modulus, p) != Poly{1};
        });
        if (primitive) {
            generator = code;
            break;
        }
    }
    impl->generator = static_cast<std::uint32_t>(generator);

    impl->exp.resize(2 * order);
    impl->log.assign(q, 0);
    const auto g = poly_from_code(generator, k, p);
    Poly power{1};
    for (std::uint64_t i = 0; i < order; ++i) {
        const auto code = static_cast<std::uint32_t>(code_from_poly(power, p));
        impl->exp[i] = impl->exp[i + order] = code;
        impl->log[code] = static_cast<std::uint32_t>(i);
        power = poly_mulmod(power, g, modulus, p);
    }
    return Field(std::move(impl));
}

void Field::check(Element x) const {
    if (x.tag() != tag())
        throw Error(ErrorKind::FieldMismatch, "element does not belong to GF(" +
                                                  std::to_string(p()) + "^" + std::to_string(k()) + ")");
}

Element Field::decode(std::uint64_t n) const {
    if (n >= q())
        throw Error(ErrorKind::OutOfRange, std::to_string(n) + " is not below q=" + std::to_string(q()));
    return wrap(static_cast<std::uint32_t>(n));
}

std::uint64_t Field::encode(Element x) const {
    check(x);
    return x.value();
}

std::vector<std::uint32_t> Field::coeffs(Element x) const {
    check(x);
    std::vector<std::uint32_t> out(k());
    auto v = x.value();
    for (auto& c : out) {
        c = v % p();
        v /= p();
    }
    return out;
}

Element Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != k()) throw Error(ErrorKind::OutOfRange, "expected " + std::to_string(k()) + " coefficients");
    std::uint64_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p()) throw Error(ErrorKind::OutOfRange, "coefficient not reduced mod p");
        v = v * p() + coeffs[i];
    }
    return wrap(static_cast<std::uint32_t>(v));
}

std::uint32_t Field::add_raw(std::uint32_t x, std::uint32_t y) const noexcept {
    const auto p = impl_->p;
    if (p == 2) return x ^ y;
    if (impl_->k == 1) return (x + y) % p;
    std::uint32_t out = 0;
    for (auto w : impl_->digit_weight) {
        out += ((x % p + y % p) % p) * w;
        x /= p;
        y /= p;
    }
    return out;
}

std::uint32_t Field::neg_raw(std::uint32_t x) const noexcept {
    const auto p = impl_->p;
    if (p == 2) return x;
    if (impl_->k == 1) return (p - x) % p;
    std::uint32_t out = 0;
    for (auto w : impl_->digit_weight) {
        out += ((p - x % p) % p) * w;
        x /= p;
    }
    return out;
}

std::uint32_t Field::sub_raw(std::uint32_t x, std::uint32_t y) const noexcept { return add_raw(x, neg_raw(y)); }

Element Field::add(Element x, Element y) const {
    check(x);
    check(y);
    return wrap(add_raw(x.value(), y.value()));
}

Element Field::sub(Element x, Element y) const {
    check(x);
    check(y);
    return wrap(sub_raw(x.value(), y.value()));
}

Element Field::neg(Element x) const {
    check(x);
    return wrap(neg_raw(x.value()));
}

Element Field::mul(Element x, Element y) const {
    check(x);
    check(y);
    return wrap(mul_raw(x.value(), y.value()));
}

Element Field::inv(Element x) const {
    check(x);
    if (x.value() == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return wrap(inv_raw(x.value()));
}

Element Field::div(Element x, Element y) const {
    check(x);
    return mul(x, inv(y));
}

Element Field::pow(Element x, std::uint64_t e) const {
    check(x);
    if (e == 0) return one();
    if (x.value() == 0) return zero();
    const std::uint64_t order = q() - 1;
    return wrap(exp_raw((static_cast<std::uint64_t>(log_raw(x.value())) * (e % order)) % order));
}

std::uint32_t Field::log(Element x) const {
    check(x);
    if (x.value() == 0) throw Error(ErrorKind::DivisionByZero, "logarithm of zero");
    return log_raw(x.value());
}

std::uint32_t Field::norm_raw(std::uint32_t x, std::uint32_t subfield_degree) const {
    if (subfield_degree == 0 || k() % subfield_degree != 0)
        throw Error(ErrorKind::InvalidSubfield,
                    std::to_string(subfield_degree) + " does not divide k=" + std::to_string(k()));
    if (x == 0) return 0;
    const std::uint64_t order = q() - 1;
    const std::uint64_t s = ipow(p(), subfield_degree);
    const std::uint64_t e = order / (s - 1);
    return exp_raw((static_cast<std::uint64_t>(log_raw(x)) * e) % order);
}

Element Field::norm(Element x, std::uint32_t subfield_degree) const {
    check(x);
    return wrap(norm_raw(x.value(), subfield_degree));
}

std::vector<Element> Field::subfield_elements(std::uint32_t subfield_degree) const {
    if (subfield_degree == 0 || k() % subfield_degree != 0)
        throw Error(ErrorKind::InvalidSubfield,
                    std::to_string(subfield_degree) + " does not divide k=" + std::to_string(k()));
    const std::uint64_t order = q() - 1;
    const std::uint64_t s = ipow(p(), subfield_degree);
    const std::uint64_t step = order / (s - 1);
    std::vector<Element> out{zero()};
    for (std::uint64_t i = 0; i < s - 1; ++i) out.push_back(wrap(exp_raw(i * step)));
    std::sort(out.begin(), out.end(), [](Element a, Element b) { return a.value() < b.value(); });
    return out;
}

Subgroup Subgroup::make(const Field& field, std::uint32_t order) {
    const std::uint32_t units = field.q() - 1;
    if (order == 0 || units % order != 0)
        throw Error(ErrorKind::OrderDoesNotDivide,
                    std::to_string(order) + " does not divide q-1=" + std::to_string(units));
    Subgroup h(field, order);
    h.membership_ = Bitset(field.q());
    const std::uint64_t step = units / order;
    for (std::uint64_t i = 0; i < order; ++i) {
        const auto v = field.exp_raw(i * step);
        h.elements_.push_back(field.wrap(v));
        h.membership_.set(v);
    }
    std::sort(h.elements_.begin(), h.elements_.end(),
              [](Element a, Element b) { return a.value() < b.value(); });
    return h;
}

bool Subgroup::contains(Element x) const {
    if (x.tag() != field_.tag()) throw Error(ErrorKind::FieldMismatch, "element from a different field");
    return membership_.test(x.value());
}

}  // namespace turan
