#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/verify.hpp"

namespace turan {

enum class Family {
    K33,      // G(q^2, q+1), forbidden K_{3,3}
    K2t,      // G(q, t), forbidden K_{2,t+1}
    General,  // G(q^(r-1), t(q^(r-2)+...+1)), forbidden K_{r, t^(r-1)(r-1)!+1}
};

std::optional<Family> parse_family(const std::string& name);

/// One row of a Turan lower-bound table: a built graph, the complete bipartite
/// graph it avoids, and m / n^(2-1/r) next to the constant t^((r-1)/r)/2.
struct BoundsRow {
    std::uint64_t q = 0;
    std::uint32_t t = 1;
    std::uint32_t r = 2;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint32_t a = 0;
    std::uint64_t b = 0;
    double ratio = 0;
    double target = 0;
};

/// Builds the family member at base prime power q. K33 ignores t and r;
/// K2t ignores r.
BoundsRow bounds_row(Family family, std::uint64_t q, std::uint32_t t, std::uint32_t r,
                     std::size_t max_vertices = kDefaultMaxVertices);

/// Fixed 6-decimal rendering (round-half-even on the exact binary value).
std::string format_fixed6(double x);

std::string format_table(const std::vector<BoundsRow>& rows);
/// Columns: q,t,r,n,m,a,b,ratio,target.
std::string format_csv(const std::vector<BoundsRow>& rows);

// ---------------------------------------------------------------------------
// Subcommands. Each writes records to `out`, diagnostics to `err`, and returns
// the process exit code.

struct BuildArgs {
    std::uint32_t p = 0;
    std::uint32_t k = 1;
    std::uint32_t t = 1;
    std::optional<std::filesystem::path> out;
    bool dimacs = false;
};
int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
    std::filesystem::path graph;
    std::uint32_t a = 2;
    std::uint32_t b = 2;
    SearchOptions search;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct LemmaArgs {
    std::string which;  // "l" or "ag"
    std::uint64_t q = 0;
    std::uint32_t r = 3;
    LemmaAgOptions ag;
};
int cmd_lemma(const LemmaArgs& args, std::ostream& out, std::ostream& err);

struct TableArgs {
    std::string family;
    std::vector<std::uint64_t> qs;
    std::uint32_t t = 1;
    std::uint32_t r = 3;
    bool csv = false;
};
int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err);

struct SuiteArgs {
    std::uint64_t q = 0;
    std::optional<std::uint32_t> t;
    std::uint32_t r = 3;
    SuiteOptions options;
};
int cmd_suite(const SuiteArgs& args, std::ostream& out, std::ostream& err);

}  // namespace turan
