#include <sstream>
#include <string>

#include "turan/error.hpp"
#include "turan/verify.hpp"

namespace turan {

namespace {

std::uint64_t factorial(std::uint32_t n) {
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= n; ++i) f *= i;
    return f;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

struct Instance {
    std::string family;
    std::uint32_t power;  // field is GF(q^power)
    std::uint64_t t;
    std::uint32_t a;
    std::uint64_t b;
};

}  // namespace

bool SuiteResult::ok() const {
    for (const auto& g : graphs)
        if (g.certificate && !g.certificate->free) return false;
    for (const auto& l : lemmas)
        if (!l.holds()) return false;
    return true;
}

SuiteResult theorem_suite(std::uint64_t q, std::optional<std::uint32_t> t, std::uint32_t r, const SuiteOptions& opts) {
    const auto pk = prime_power(q);
    if (!pk) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (r < 2) throw Error(ErrorKind::HypothesisViolated, "r must be at least 2");
    if (t && (*t == 0 || (q - 1) % *t != 0))
        throw Error(ErrorKind::HypothesisViolated, "t=" + std::to_string(*t) + " does not divide q-1=" + std::to_string(q - 1));

    // q^(r-2) + ... + q + 1
    const std::uint64_t geometric = (ipow(q, r - 1) - 1) / (q - 1);
    std::vector<Instance> instances;
    if (t) instances.push_back({"k2t", 1, *t, 2, std::uint64_t{*t} + 1});
    instances.push_back({"k33", 2, q + 1, 3, 3});
    if (t) instances.push_back({"k3t", 2, *t * (q + 1), 3, 2 * std::uint64_t{*t} * *t + 1});
    instances.push_back({"krs", r - 1, geometric, r, factorial(r - 1) + 1});
    if (t) instances.push_back({"krst", r - 1, *t * geometric, r, ipow(*t, r - 1) * factorial(r - 1) + 1});

    SuiteResult result;
    for (const auto& inst : instances) {
        SuiteEntry e;
        e.family = inst.family;
        e.field_size = ipow(q, inst.power);
        e.t = static_cast<std::uint32_t>(inst.t);
        e.a = inst.a;
        e.b = static_cast<std::uint32_t>(inst.b);
        try {
            const auto field = Field::make(pk->first, pk->second * inst.power);
            const auto g = FurediGraph::build(field, e.t, opts.max_vertices);
            e.certificate = certify_kab_free(g, e.a, e.b, opts.search);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::BudgetExceeded && err.kind() != ErrorKind::SizeLimitExceeded) throw;
            e.skipped = err.what();
        }
        result.graphs.push_back(std::move(e));
    }

    try {
        result.lemmas.push_back(verify_lemma_L(q, opts.lemma_ag.budget));
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::BudgetExceeded && err.kind() != ErrorKind::SizeLimitExceeded) throw;
        result.skipped_lemmas.push_back(std::string("lemma_L: ") + err.what());
    }
    try {
        try {
            auto exhaustive = opts.lemma_ag;
            exhaustive.mode = LemmaMode::Exhaustive;
            result.lemmas.push_back(verify_lemma_AG(q, r, exhaustive));
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::BudgetExceeded) throw;
            auto sampled = opts.lemma_ag;
            sampled.mode = LemmaMode::Sampled;
            result.lemmas.push_back(verify_lemma_AG(q, r, sampled));
        }
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::BudgetExceeded && err.kind() != ErrorKind::SizeLimitExceeded) throw;
        result.skipped_lemmas.push_back(std::string("lemma_AG: ") + err.what());
    }
    return result;
}

std::string format_suite(const SuiteResult& s) {
    std::ostringstream out;
    for (const auto& g : s.graphs) {
        out << "# " << g.family << ": G(" << g.field_size << "," << g.t << ") vs K_{" << g.a << "," << g.b
            << "}";
        if (g.certificate)
            out << "\n" << format_certificate(*g.certificate) << "\n";
        else
            out << " skipped: " << g.skipped << "\n";
    }
    for (const auto& l : s.lemmas) out << format_lemma(l) << "\n";
    for (const auto& l : s.skipped_lemmas) out << "# skipped " << l << "\n";
    out << "# result: " << (s.ok() ? "ok" : "FAILED") << "\n";
    return out.str();
}

}  // namespace turan
