// Python view of the library. Field elements cross the boundary as their
// integer encodings (base-p digits of the polynomial coefficients).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "turan/error.hpp"
#include "turan/graph.hpp"
#include "turan/report.hpp"
#include "turan/verify.hpp"

namespace py = pybind11;
using namespace turan;

namespace {

std::vector<std::uint64_t> encodings(const Field& f, const std::vector<Element>& xs) {
    std::vector<std::uint64_t> out;
    out.reserve(xs.size());
    for (auto x : xs) out.push_back(f.encode(x));
    return out;
}

Field field_of(std::uint64_t q) {
    auto pk = prime_power(q);
    if (!pk) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    return Field::make(pk->first, pk->second);
}

SearchOptions search_options(unsigned workers, std::uint64_t budget) { return SearchOptions{workers, budget}; }

Family family_of(const std::string& name) {
    auto f = parse_family(name);
    if (!f) throw Error(ErrorKind::OutOfRange, "unknown family '" + name + "'");
    return *f;
}

using Unary = Element (Field::*)(Element) const;
using Binary = Element (Field::*)(Element, Element) const;

auto unary(Unary op) {
    return [op](const Field& f, std::uint64_t x) { return f.encode((f.*op)(f.decode(x))); };
}
auto binary(Binary op) {
    return [op](const Field& f, std::uint64_t x, std::uint64_t y) {
        return f.encode((f.*op)(f.decode(x), f.decode(y)));
    };
}

}  // namespace

PYBIND11_MODULE(_turan, m) {
    m.doc() = "Finite-field graph constructions with exhaustive K_{a,b}-freeness certificates";

    static py::object error_type = py::reinterpret_borrow<py::object>(
        py::exception<Error>(m, "TuranError", PyExc_ValueError));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = error_type(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    m.def("is_prime", &is_prime);
    m.def("prime_power", &prime_power, "(p, k) with q = p^k, or None");

    py::class_<Field>(m, "Field")
        .def(py::init([](std::uint32_t p, std::uint32_t k, std::uint64_t size_limit) {
                 return Field::make(p, k, size_limit);
             }),
             py::arg("p"), py::arg("k") = 1, py::arg("size_limit") = kDefaultFieldSizeLimit)
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("k", &Field::k)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("modulus", &Field::modulus, "coefficients, constant term first")
        .def_property_readonly("generator", [](const Field& f) { return f.encode(f.generator()); })
        .def("add", binary(&Field::add))
        .def("sub", binary(&Field::sub))
        .def("mul", binary(&Field::mul))
        .def("div", binary(&Field::div))
        .def("neg", unary(&Field::neg))
        .def("inv", unary(&Field::inv))
        .def("pow", [](const Field& f, std::uint64_t x, std::uint64_t e) { return f.encode(f.pow(f.decode(x), e)); })
        .def("norm", [](const Field& f, std::uint64_t x, std::uint32_t d) { return f.encode(f.norm(f.decode(x), d)); },
             py::arg("x"), py::arg("subfield_degree") = 1)
        .def("log", [](const Field& f, std::uint64_t x) { return f.log(f.decode(x)); })
        .def("exp", [](const Field& f, std::uint64_t i) { return f.encode(f.exp(i)); })
        .def("coeffs", [](const Field& f, std::uint64_t x) { return f.coeffs(f.decode(x)); })
        .def("from_coeffs", [](const Field& f, const std::vector<std::uint32_t>& c) { return f.encode(f.from_coeffs(c)); })
        .def("subfield_elements",
             [](const Field& f, std::uint32_t d) { return encodings(f, f.subfield_elements(d)); })
        .def("__repr__", [](const Field& f) { return "Field(p=" + std::to_string(f.p()) + ", k=" + std::to_string(f.k()) + ")"; });

    py::class_<Subgroup>(m, "Subgroup")
        .def(py::init(&Subgroup::make), py::arg("field"), py::arg("order"))
        .def_property_readonly("order", &Subgroup::order)
        .def_property_readonly("elements", [](const Subgroup& h) { return encodings(h.field(), h.elements()); })
        .def("__contains__", [](const Subgroup& h, std::uint64_t x) { return h.contains(h.field().decode(x)); });

    py::class_<FurediGraph>(m, "FurediGraph")
        .def_property_readonly("field", &FurediGraph::field)
        .def_property_readonly("t", &FurediGraph::t)
        .def_property_readonly("loop_count", &FurediGraph::loop_count)
        .def_property_readonly("vertices",
                               [](const FurediGraph& g) {
                                   std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
                                   for (const auto& v : g.vertices())
                                       out.emplace_back(g.field().encode(v.a), g.field().encode(v.b));
                                   return out;
                               })
        .def("__len__", &FurediGraph::size)
        .def("edges", [](const FurediGraph& g) { return g.adjacency().edges(); })
        .def("adjacent", [](const FurediGraph& g, std::size_t u, std::size_t v) {
            if (u >= g.size() || v >= g.size()) throw Error(ErrorKind::OutOfRange, "vertex index out of range");
            return g.adjacency().adjacent(u, v);
        })
        .def("degree_histogram", [](const FurediGraph& g) { return degree_histogram(g.adjacency()); })
        .def("__repr__", [](const FurediGraph& g) {
            return "FurediGraph(q=" + std::to_string(g.field().q()) + ", t=" + std::to_string(g.t()) +
                   ", n=" + std::to_string(g.size()) + ")";
        });

    py::class_<GraphFile>(m, "GraphFile")
        .def_readonly("p", &GraphFile::p)
        .def_readonly("k", &GraphFile::k)
        .def_readonly("q", &GraphFile::q)
        .def_readonly("t", &GraphFile::t)
        .def_readonly("loops", &GraphFile::loops)
        .def_readonly("vertices", &GraphFile::vertices)
        .def("__len__", [](const GraphFile& g) { return g.adj.size(); })
        .def("edges", [](const GraphFile& g) { return g.adj.edges(); })
        .def("__eq__", [](const GraphFile& a, const GraphFile& b) { return a == b; });

    m.def("build_graph",
          [](std::uint64_t q, std::uint32_t t, std::size_t max_vertices) {
              return FurediGraph::build(field_of(q), t, max_vertices);
          },
          py::arg("q"), py::arg("t"), py::arg("max_vertices") = kDefaultMaxVertices,
          "G(q, t) over GF(q) with the order-t multiplicative subgroup");
    m.def("count_edges", &count_edges);
    m.def("expected_edge_count_g2", &expected_edge_count_g2);
    m.def("expected_vertex_count_general", &expected_vertex_count_general, py::arg("q"), py::arg("r"),
          py::arg("t") = 1);
    m.def("describe", &describe);
    m.def("export_graph",
          [](const FurediGraph& g, const std::filesystem::path& path, bool dimacs) {
              export_graph(describe(g), path, dimacs);
          },
          py::arg("graph"), py::arg("path"), py::arg("dimacs") = false);
    m.def("import_graph", &import_graph);
    m.def("graph_text", [](const FurediGraph& g) {
        std::ostringstream s;
        write_graph(s, describe(g));
        return s.str();
    });

    py::class_<FreenessCertificate>(m, "Certificate")
        .def_readonly("a", &FreenessCertificate::a)
        .def_readonly("b", &FreenessCertificate::b)
        .def_readonly("n", &FreenessCertificate::n)
        .def_readonly("m", &FreenessCertificate::m)
        .def_readonly("max_common", &FreenessCertificate::max_common)
        .def_readonly("witness", &FreenessCertificate::witness)
        .def_readonly("subsets_scanned", &FreenessCertificate::subsets_scanned)
        .def_readonly("free", &FreenessCertificate::free)
        .def("__eq__", [](const FreenessCertificate& x, const FreenessCertificate& y) { return x == y; })
        .def("__str__", &format_certificate);

    m.def("certify_kab_free",
          [](const FurediGraph& g, std::uint32_t a, std::uint32_t b, unsigned workers, std::uint64_t budget) {
              py::gil_scoped_release release;
              return certify_kab_free(g, a, b, search_options(workers, budget));
          },
          py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("workers") = 1,
          py::arg("budget") = kDefaultSubsetBudget);
    m.def("certify_kab_free",
          [](const GraphFile& g, std::uint32_t a, std::uint32_t b, unsigned workers, std::uint64_t budget) {
              py::gil_scoped_release release;
              return certify_kab_free(g, a, b, search_options(workers, budget));
          },
          py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("workers") = 1,
          py::arg("budget") = kDefaultSubsetBudget);
    m.def("max_common_neighbors",
          [](const FurediGraph& g, std::uint32_t a, unsigned workers, std::uint64_t budget) {
              auto r = max_common_neighbors(g.adjacency(), a, search_options(workers, budget));
              return py::make_tuple(r.max_common, r.witness, r.subsets_scanned);
          },
          py::arg("graph"), py::arg("a"), py::arg("workers") = 1, py::arg("budget") = kDefaultSubsetBudget,
          "(max_common, witness, subsets_scanned)");

    py::class_<LemmaReport>(m, "LemmaReport")
        .def_readonly("q", &LemmaReport::q)
        .def_readonly("r", &LemmaReport::r)
        .def_readonly("max_solutions", &LemmaReport::max_solutions)
        .def_readonly("bound", &LemmaReport::bound)
        .def_readonly("exhaustive", &LemmaReport::exhaustive)
        .def_readonly("systems_scanned", &LemmaReport::systems_scanned)
        .def_readonly("seed", &LemmaReport::seed)
        .def_readonly("witness", &LemmaReport::witness)
        .def_readonly("quadratic_consistent", &LemmaReport::quadratic_consistent)
        .def_property_readonly("holds", &LemmaReport::holds)
        .def("__str__", &format_lemma);

    m.def("verify_lemma_L", &verify_lemma_L, py::arg("q"), py::arg("budget") = kDefaultSystemBudget);
    m.def("verify_lemma_AG",
          [](std::uint64_t q, std::uint32_t r, const std::string& mode, std::uint64_t samples, std::uint64_t seed,
             std::uint64_t budget) {
              LemmaAgOptions opts;
              if (mode == "sampled") opts.mode = LemmaMode::Sampled;
              else if (mode != "exhaustive") throw Error(ErrorKind::OutOfRange, "mode must be exhaustive or sampled");
              opts.samples = samples;
              opts.seed = seed;
              opts.budget = budget;
              return verify_lemma_AG(q, r, opts);
          },
          py::arg("q"), py::arg("r"), py::arg("mode") = "exhaustive", py::arg("samples") = 2000,
          py::arg("seed") = 0, py::arg("budget") = kDefaultSystemBudget);

    py::class_<BoundsRow>(m, "BoundsRow")
        .def_readonly("q", &BoundsRow::q)
        .def_readonly("t", &BoundsRow::t)
        .def_readonly("r", &BoundsRow::r)
        .def_readonly("n", &BoundsRow::n)
        .def_readonly("m", &BoundsRow::m)
        .def_readonly("a", &BoundsRow::a)
        .def_readonly("b", &BoundsRow::b)
        .def_readonly("ratio", &BoundsRow::ratio)
        .def_readonly("target", &BoundsRow::target);

    m.def("bounds_row",
          [](const std::string& family, std::uint64_t q, std::uint32_t t, std::uint32_t r) {
              return bounds_row(family_of(family), q, t, r);
          },
          py::arg("family"), py::arg("q"), py::arg("t") = 1, py::arg("r") = 3);
    m.def("format_table", &format_table);
    m.def("format_csv", &format_csv);
}
