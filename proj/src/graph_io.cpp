#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "turan/error.hpp"
#include "turan/graph.hpp"

namespace turan {

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
    throw Error(ErrorKind::MalformedFile, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && s[i] == ' ') ++i;
        auto j = i;
        while (j < s.size() && s[j] != ' ') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) malformed(line, "expected unsigned integer, got '" + std::string(s) + "'");
    return v;
}

}  // namespace

GraphFile describe(const FurediGraph& g) {
    GraphFile out;
    out.p = g.field().p();
    out.k = g.field().k();
    out.q = g.field().q();
    out.t = g.t();
    out.loops = g.loop_count();
    out.vertices.reserve(g.size());
    for (const auto& v : g.vertices()) out.vertices.emplace_back(v.a.value(), v.b.value());
    out.adj = g.adjacency();
    return out;
}

void write_graph(std::ostream& out, const GraphFile& g) {
    const auto edges = g.adj.edges();
    out << "# furedi p=" << g.p << " k=" << g.k << " q=" << g.q << " t=" << g.t << " n=" << g.vertices.size()
        << " m=" << edges.size() << " loops=" << g.loops << '\n';
    out << "# vertices: " << g.vertices.size() << " lines of \"idx enc_a enc_b\" follow\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        out << i << ' ' << g.vertices[i].first << ' ' << g.vertices[i].second << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_dimacs(std::ostream& out, const GraphFile& g) {
    const auto edges = g.adj.edges();
    out << "c furedi p=" << g.p << " k=" << g.k << " q=" << g.q << " t=" << g.t << " loops=" << g.loops << '\n';
    out << "p edge " << g.vertices.size() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

GraphFile read_graph(std::istream& in) {
    GraphFile g;
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) malformed(1, "empty file");
    ++lineno;
    auto tokens = split(line);
    if (tokens.size() < 2 || tokens[0] != "#" || tokens[1] != "furedi") malformed(lineno, "missing '# furedi' header");
    std::map<std::string, std::uint64_t, std::less<>> header;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string_view::npos) malformed(lineno, "header field without '='");
        header[std::string(tokens[i].substr(0, eq))] = parse_uint(tokens[i].substr(eq + 1), lineno);
    }
    for (const char* key : {"p", "k", "q", "t", "n", "m", "loops"})
        if (!header.contains(key)) malformed(lineno, std::string("header lacks ") + key);
    g.p = static_cast<std::uint32_t>(header["p"]);
    g.k = static_cast<std::uint32_t>(header["k"]);
    g.q = header["q"];
    g.t = static_cast<std::uint32_t>(header["t"]);
    g.loops = header["loops"];
    const auto n = header["n"];
    const auto m = header["m"];
    if (n > (std::uint64_t{1} << 20))
        throw Error(ErrorKind::SizeLimitExceeded, "declared n=" + std::to_string(n) + " is too large");

    if (!std::getline(in, line)) malformed(lineno + 1, "missing vertex header");
    ++lineno;
    tokens = split(line);
    if (tokens.size() < 3 || tokens[0] != "#" || tokens[1] != "vertices:") malformed(lineno, "missing '# vertices:' line");
    if (parse_uint(tokens[2], lineno) != n)
        throw Error(ErrorKind::HeaderMismatch, "vertex line declares a different n than the header");

    g.adj = AdjacencyGraph(n);
    g.vertices.reserve(n);
    std::uint64_t edges = 0;
    std::pair<std::uint64_t, std::uint64_t> last{0, 0};
    while (std::getline(in, line)) {
        ++lineno;
        tokens = split(line);
        if (g.vertices.size() < n) {
            if (tokens.size() != 3) {
                throw Error(ErrorKind::HeaderMismatch, "line " + std::to_string(lineno) + ": expected " +
                                                           std::to_string(n) + " vertex lines");
            }
            if (parse_uint(tokens[0], lineno) != g.vertices.size()) malformed(lineno, "vertex index out of sequence");
            const auto a = parse_uint(tokens[1], lineno);
            const auto b = parse_uint(tokens[2], lineno);
            if (a >= g.q || b >= g.q) malformed(lineno, "vertex encoding not below q");
            g.vertices.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
            continue;
        }
        if (tokens.size() != 2) malformed(lineno, "expected edge line '<u> <v>'");
        std::pair e{parse_uint(tokens[0], lineno), parse_uint(tokens[1], lineno)};
        if (e.first >= e.second) malformed(lineno, "edge must satisfy u < v");
        if (e.second >= n) malformed(lineno, "edge endpoint out of range");
        if (edges > 0 && e == last) malformed(lineno, "duplicate edge");
        if (edges > 0 && e < last) malformed(lineno, "edges not sorted");
        g.adj.add_edge(e.first, e.second);
        last = e;
        ++edges;
    }
    if (g.vertices.size() != n)
        throw Error(ErrorKind::HeaderMismatch, "header declares n=" + std::to_string(n) + " but file has " +
                                                   std::to_string(g.vertices.size()) + " vertices");
    if (edges != m)
        throw Error(ErrorKind::HeaderMismatch,
                    "header declares m=" + std::to_string(m) + " but file has " + std::to_string(edges) + " edges");
    return g;
}

void export_graph(const GraphFile& g, const std::filesystem::path& path, bool dimacs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
    if (dimacs)
        write_dimacs(out, g);
    else
        write_graph(out, g);
    if (!out) throw Error(ErrorKind::Io, "write failed: " + path.string());
}

GraphFile import_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    return read_graph(in);
}

}  // namespace turan
