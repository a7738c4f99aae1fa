#include "turan/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "turan/error.hpp"

namespace turan {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Io:
        case ErrorKind::MalformedFile:
        case ErrorKind::HeaderMismatch:
            return 3;
        default:
            return 2;
    }
}

}  // namespace

std::optional<Family> parse_family(const std::string& name) {
    if (name == "k33") return Family::K33;
    if (name == "k2t") return Family::K2t;
    if (name == "general") return Family::General;
    return std::nullopt;
}

BoundsRow bounds_row(Family family, std::uint64_t q, std::uint32_t t, std::uint32_t r, std::size_t max_vertices) {
    if (family == Family::K33) {
        t = 1;
        r = 3;
    } else if (family == Family::K2t) {
        r = 2;
    }
    const auto pk = prime_power(q);
    if (!pk) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (r < 2) throw Error(ErrorKind::HypothesisViolated, "r must be at least 2");
    if (t == 0 || (q - 1) % t != 0)
        throw Error(ErrorKind::HypothesisViolated, "t=" + std::to_string(t) + " does not divide q-1=" + std::to_string(q - 1));

    const std::uint64_t geometric = (ipow(q, r - 1) - 1) / (q - 1);
    const auto field = Field::make(pk->first, pk->second * (r - 1));
    const auto g = FurediGraph::build(field, static_cast<std::uint32_t>(t * geometric), max_vertices);

    BoundsRow row;
    row.q = q;
    row.t = t;
    row.r = r;
    row.n = g.size();
    row.m = count_edges(g);
    row.a = r;
    std::uint64_t fact = 1;
    for (std::uint32_t i = 2; i < r; ++i) fact *= i;
    row.b = ipow(t, r - 1) * fact + 1;
    row.ratio = static_cast<double>(row.m) / std::pow(static_cast<double>(row.n), 2.0 - 1.0 / r);
    row.target = 0.5 * std::pow(static_cast<double>(t), static_cast<double>(r - 1) / r);
    return row;
}

std::string format_fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string format_table(const std::vector<BoundsRow>& rows) {
    std::ostringstream out;
    out << std::setw(6) << "q" << std::setw(5) << "t" << std::setw(4) << "r" << std::setw(9) << "n" << std::setw(11)
        << "m" << std::setw(4) << "a" << std::setw(7) << "b" << std::setw(11) << "ratio" << std::setw(11) << "target"
        << "\n";
    for (const auto& row : rows)
        out << std::setw(6) << row.q << std::setw(5) << row.t << std::setw(4) << row.r << std::setw(9) << row.n
            << std::setw(11) << row.m << std::setw(4) << row.a << std::setw(7) << row.b << std::setw(11)
            << format_fixed6(row.ratio) << std::setw(11) << format_fixed6(row.target) << "\n";
    return out.str();
}

std::string format_csv(const std::vector<BoundsRow>& rows) {
    std::ostringstream out;
    out << "q,t,r,n,m,a,b,ratio,target\n";
    for (const auto& row : rows)
        out << row.q << ',' << row.t << ',' << row.r << ',' << row.n << ',' << row.m << ',' << row.a << ',' << row.b
            << ',' << format_fixed6(row.ratio) << ',' << format_fixed6(row.target) << "\n";
    return out.str();
}

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const auto field = Field::make(args.p, args.k);
        const auto g = FurediGraph::build(field, args.t);
        if (args.out) export_graph(describe(g), *args.out, args.dimacs);
        out << "n=" << g.size() << " m=" << count_edges(g) << " loops=" << g.loop_count() << "\n";
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const auto g = import_graph(args.graph);
        const auto cert = certify_kab_free(g, args.a, args.b, args.search);
        out << format_certificate(cert) << "\n";
        return cert.free ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

int cmd_lemma(const LemmaArgs& args, std::ostream& out, std::ostream& err) {
    try {
        LemmaReport rep;
        if (args.which == "l")
            rep = verify_lemma_L(args.q, args.ag.budget);
        else if (args.which == "ag")
            rep = verify_lemma_AG(args.q, args.r, args.ag);
        else {
            err << "error: unknown lemma '" << args.which << "' (expected l or ag)\n";
            return 2;
        }
        out << format_lemma(rep) << "\n";
        return rep.holds() ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
    const auto family = parse_family(args.family);
    if (!family) {
        err << "error: unknown family '" << args.family << "' (expected k33, k2t or general)\n";
        return 2;
    }
    if (args.qs.empty()) {
        err << "error: empty q list\n";
        return 2;
    }
    std::vector<BoundsRow> rows;
    bool failed = false;
    for (auto q : args.qs) {
        try {
            rows.push_back(bounds_row(*family, q, args.t, args.r));
        } catch (const Error& e) {
            err << "error: q=" << q << ": " << e.what() << "\n";
            failed = true;
        }
    }
    if (args.csv) {
        out << format_csv(rows);
    } else {
        out << format_table(rows);
        bool monotone = true;
        for (std::size_t i = 1; i < rows.size(); ++i)
            monotone = monotone && std::abs(rows[i].ratio - rows[i].target) <= std::abs(rows[i - 1].ratio - rows[i - 1].target);
        if (!rows.empty()) out << "# gap |ratio - target| non-increasing: " << (monotone ? "yes" : "no") << "\n";
    }
    return failed ? 1 : 0;
}

int cmd_suite(const SuiteArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const auto result = theorem_suite(args.q, args.t, args.r, args.options);
        out << format_suite(result);
        return result.ok() ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

}  // namespace turan
