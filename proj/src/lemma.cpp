#include <random>
#include <sstream>
#include <string>

#include "turan/error.hpp"
#include "turan/verify.hpp"

namespace turan {

namespace {

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
    auto pk = prime_power(q);
    if (!pk) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    return *pk;
}

std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) {
    unsigned __int128 r = static_cast<unsigned __int128>(x) * y;
    return r > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(r);
}

}  // namespace

LemmaReport verify_lemma_L(std::uint64_t q, std::uint64_t budget) {
    const auto [p, j] = split_prime_power(q);
    const auto f = Field::make(p, 2 * j);
    const auto h = Subgroup::make(f, static_cast<std::uint32_t>(q + 1));
    const std::uint32_t big_q = f.q();

    const std::uint64_t systems = std::uint64_t{big_q - 1} * (big_q - 1);
    const std::uint64_t work = saturating_mul(systems, (q + 1) * (q + 1) + big_q);
    if (work > budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "lemma L at q=" + std::to_string(q) + " needs " + std::to_string(work) + " evaluations");

    LemmaReport rep;
    rep.lemma = LemmaId::L;
    rep.p = p;
    rep.k = 2 * j;
    rep.q = q;
    rep.r = 2;
    rep.t = h.order();
    rep.bound = 2;
    rep.exhaustive = true;
    rep.systems_scanned = systems;

    const std::uint32_t one = 1;
    bool have_witness = false;
    for (std::uint32_t a = 1; a < big_q; ++a) {
        const auto a_q = f.pow(f.wrap(a), q).value();
        const auto a_q1 = f.mul_raw(a_q, a);
        for (std::uint32_t b = 1; b < big_q; ++b) {
            std::uint64_t brute = 0;
            for (auto x : h.elements())
                for (auto y : h.elements())
                    if (f.add_raw(f.mul_raw(a, x.value()), f.mul_raw(b, y.value())) == one) ++brute;

            // a x^2 - (a^(q+1) - b^(q+1) + 1) x + a^q, roots found by scanning F.
            const auto b_q1 = f.pow(f.wrap(b), q + 1).value();
            const auto lin = f.add_raw(f.sub_raw(a_q1, b_q1), one);
            const auto b_inv = f.inv_raw(b);
            std::uint64_t roots = 0;
            std::uint64_t from_quadratic = 0;
            for (std::uint32_t x = 0; x < big_q; ++x) {
                const auto val = f.add_raw(f.sub_raw(f.mul_raw(a, f.mul_raw(x, x)), f.mul_raw(lin, x)), a_q);
                if (val != 0) continue;
                ++roots;
                if (!h.contains_raw(x)) continue;
                const auto y = f.mul_raw(f.sub_raw(one, f.mul_raw(a, x)), b_inv);
                if (h.contains_raw(y)) ++from_quadratic;
            }
            if (roots > 2 || from_quadratic != brute) rep.quadratic_consistent = false;
            if (!have_witness || brute > rep.max_solutions) {
                have_witness = true;
                rep.max_solutions = brute;
                rep.witness = {a, b};
            }
        }
    }
    return rep;
}

std::uint64_t count_norm_solutions(const Field& f, std::uint32_t subfield_degree, std::span<const Element> d,
                                   std::span<const Element> c) {
    if (d.size() != c.size()) throw Error(ErrorKind::OutOfRange, "d and c must have equal length");
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        bool all = true;
        for (std::size_t i = 0; i < d.size() && all; ++i)
            all = f.norm(f.add(f.wrap(x), d[i]), subfield_degree) == c[i];
        if (all) ++count;
    }
    return count;
}

LemmaReport verify_lemma_AG(std::uint64_t q, std::uint32_t r, const LemmaAgOptions& opts) {
    if (r < 1) throw Error(ErrorKind::OutOfRange, "r must be positive");
    const auto [p, j] = split_prime_power(q);
    const auto f = Field::make(p, j * r);
    const std::uint32_t big_q = f.q();

    std::uint64_t d_tuples = 1;
    for (std::uint32_t i = 0; i < r; ++i) d_tuples = saturating_mul(d_tuples, big_q > i ? big_q - i : 0);
    const std::uint64_t c_tuples = big_q;  // q^r
    const std::uint64_t evaluated = opts.mode == LemmaMode::Exhaustive ? d_tuples : opts.samples;
    const auto systems = saturating_mul(evaluated, c_tuples);
    if (systems > opts.budget)
        throw Error(ErrorKind::BudgetExceeded, "lemma AG at q=" + std::to_string(q) + " r=" + std::to_string(r) +
                                                   " needs " + std::to_string(systems) + " systems, budget " +
                                                   std::to_string(opts.budget));
    if (d_tuples == 0) throw Error(ErrorKind::OutOfRange, "field too small for distinct d_1..d_r");

    LemmaReport rep;
    rep.lemma = LemmaId::AG;
    rep.p = p;
    rep.k = j * r;
    rep.q = q;
    rep.r = r;
    rep.exhaustive = opts.mode == LemmaMode::Exhaustive;
    rep.systems_scanned = systems;
    if (!rep.exhaustive) rep.seed = opts.seed;
    rep.bound = 1;
    for (std::uint32_t i = 2; i <= r; ++i) rep.bound *= i;

    // Norms land in GF(q); index them 0..q-1 so a norm vector is a base-q key < q^r.
    const auto sub = f.subfield_elements(j);
    std::vector<std::uint32_t> sub_index(big_q, 0);
    for (std::uint32_t i = 0; i < sub.size(); ++i) sub_index[sub[i].value()] = i;
    std::vector<std::uint32_t> norm_index(big_q);
    for (std::uint32_t x = 0; x < big_q; ++x) norm_index[x] = sub_index[f.norm_raw(x, j)];

    std::vector<std::uint32_t> counts(big_q, 0);
    std::vector<std::uint32_t> keys(big_q);
    std::vector<std::uint32_t> d(r);
    bool have_witness = false;

    auto evaluate = [&] {
        for (std::uint32_t x = 0; x < big_q; ++x) {
            std::uint32_t key = 0;
            for (std::uint32_t i = r; i-- > 0;) key = key * static_cast<std::uint32_t>(q) + norm_index[f.add_raw(x, d[i])];
            keys[x] = key;
            ++counts[key];
        }
        std::uint32_t best = 0, best_key = 0;
        for (auto key : keys)
            if (counts[key] > best || (counts[key] == best && key < best_key)) {
                best = counts[key];
                best_key = key;
            }
        for (auto key : keys) counts[key] = 0;
        if (!have_witness || best > rep.max_solutions) {
            have_witness = true;
            rep.max_solutions = best;
            rep.witness.assign(d.begin(), d.end());
            for (std::uint32_t i = 0; i < r; ++i) {
                rep.witness.push_back(sub[best_key % q].value());
                best_key /= static_cast<std::uint32_t>(q);
            }
        }
    };

    if (rep.exhaustive) {
        std::vector<bool> used(big_q, false);
        auto recurse = [&](auto&& self, std::uint32_t depth) -> void {
            if (depth == r) {
                evaluate();
                return;
            }
            for (std::uint32_t v = 0; v < big_q; ++v) {
                if (used[v]) continue;
                used[v] = true;
                d[depth] = v;
                self(self, depth + 1);
                used[v] = false;
            }
        };
        recurse(recurse, 0);
    } else {
        std::mt19937_64 rng(opts.seed);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % big_q;
        auto draw = [&] {
            std::uint64_t v;
            do v = rng();
            while (v >= limit);
            return static_cast<std::uint32_t>(v % big_q);
        };
        for (std::uint64_t s = 0; s < opts.samples; ++s) {
            for (std::uint32_t i = 0; i < r; ++i) {
                bool fresh;
                do {
                    d[i] = draw();
                    fresh = true;
                    for (std::uint32_t k = 0; k < i; ++k) fresh = fresh && d[k] != d[i];
                } while (!fresh);
            }
            evaluate();
        }
    }
    return rep;
}

std::string format_lemma(const LemmaReport& r) {
    std::ostringstream out;
    out << "kind=" << (r.lemma == LemmaId::L ? "lemma_L" : "lemma_AG") << " p=" << r.p << " k=" << r.k << " q=" << r.q
        << " r=" << r.r << " t=" << r.t << " max_solutions=" << r.max_solutions << " bound=" << r.bound
        << " verdict=" << (r.holds() ? "holds" : "violated") << " exhaustive=" << (r.exhaustive ? "true" : "false");
    if (r.lemma == LemmaId::L) out << " quadratic_check=" << (r.quadratic_consistent ? "agree" : "disagree");
    out << " witness=";
    if (r.witness.empty()) out << '-';
    for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? "," : "") << r.witness[i];
    out << " systems_scanned=" << r.systems_scanned << " seed=";
    if (r.seed)
        out << *r.seed;
    else
        out << '-';
    return out.str();
}

}  // namespace turan
