#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetagraph/basilica.hpp"
#include "zetagraph/covering.hpp"
#include "zetagraph/graphspec.hpp"
#include "zetagraph/products.hpp"
#include "zetagraph/verify.hpp"
#include "zetagraph/zeta.hpp"

namespace py = pybind11;
using namespace zg;

namespace {

VertexOrder order_or_lex(const RotationGraph& g, const std::optional<std::vector<std::string>>& keys) {
    return keys ? VertexOrder(*keys) : VertexOrder::lexicographic(g);
}

std::vector<std::vector<long>> adjacency_rows(const RotationGraph& g,
                                              const std::optional<std::vector<std::string>>& keys) {
    IntMatrix a = adjacency_matrix(g, order_or_lex(g, keys));
    std::vector<std::vector<long>> rows(a.rows(), std::vector<long>(a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) rows[i][j] = a.at(i, j).get_si();
    return rows;
}

CoverSpec make_cover(const std::string& kind, int cover_level, int base_level) {
    if (kind == "gamma") return make_schreier_cover(cover_level, base_level);
    if (kind == "zigzag") return make_zigzag_cover(cover_level, base_level);
    throw std::invalid_argument("cover kind must be gamma or zigzag");
}

py::dict cover_report(const std::string& kind, int cover_level, int base_level) {
    CoverSpec c = make_cover(kind, cover_level, base_level);
    py::dict d;
    d["covering"] = verify_covering(c);
    d["sheets"] = c.sheet_keys();
    py::dict frob;
    std::vector<Permutation> gens;
    for (const auto& [name, p] : frobenius_permutations(c)) {
        frob[py::str(name)] = p.cycle_string();
        gens.push_back(p);
    }
    d["frobenius"] = frob;
    MonodromyOrder m = monodromy_order(gens);
    d["monodromy_order"] = m.order;
    d["monodromy_exact"] = m.exact;
    d["normal"] = is_normal(c);
    py::dict conn;
    for (const auto& s : c.sheet_keys()) conn[py::str(s)] = sheet_connectivity(c, s);
    d["sheet_connectivity"] = conn;
    return d;
}

py::dict artin_report(const std::string& kind, int cover_level, int base_level) {
    CoverSpec c = make_cover(kind, cover_level, base_level);
    py::dict d;
    for (const Character& chi : all_characters(deck_group(c))) {
        IntPoly L = artin_reciprocal(c, chi);
        d[py::str(chi.is_trivial() ? "trivial" : "sign")] = L.decimal_coeffs();
    }
    d["factorization"] = factorization_check(c);
    return d;
}

}  // namespace

PYBIND11_MODULE(_zetagraph, m) {
    m.doc() = "Exact Schreier graphs, graph products, coverings and zeta functions";

    py::class_<RotationGraph>(m, "Graph")
        .def_property_readonly("vertices", &RotationGraph::vertices)
        .def_property_readonly("ports", &RotationGraph::ports)
        .def_property_readonly("vertex_count", &RotationGraph::vertex_count)
        .def_property_readonly("edge_count", &RotationGraph::edge_count)
        .def("neighbors", &RotationGraph::neighbors, py::arg("vertex"))
        .def("is_connected", &RotationGraph::is_connected)
        .def("dot", &export_dot)
        .def("json", &graph_to_json)
        .def("__repr__", [](const RotationGraph& g) {
            return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges>";
        });

    m.def("schreier", [](int n) { return build_schreier(n); }, py::arg("level"));
    m.def("c4", &c4_graph);
    m.def("cycle", &cycle_graph, py::arg("length"));
    m.def("replacement", [](int n, int r) { return generalized_replacement(n, r); },
          py::arg("n"), py::arg("r"));
    m.def("zigzag_c4", [](int n) { return zigzag_c4(n); }, py::arg("level"));
    m.def("graph", [](const std::string& spec) { return parse_graph_spec(spec); },
          py::arg("spec"));

    m.def("apply", [](const std::string& g, const std::string& w) {
              return act(gen_from_name(g), w);
          },
          py::arg("generator"), py::arg("word"));

    m.def("adjacency", &adjacency_rows, py::arg("graph"), py::arg("order") = std::nullopt);
    m.def("ihara_reciprocal",
          [](const RotationGraph& g) { return ihara_reciprocal(g).decimal_coeffs(); },
          py::arg("graph"));
    m.def("nonbacktracking_reciprocal",
          [](const RotationGraph& g) { return nonbacktracking_reciprocal(g).decimal_coeffs(); },
          py::arg("graph"));
    m.def("charpoly_adjacency",
          [](const RotationGraph& g, const std::optional<std::vector<std::string>>& order) {
              return char_poly(adjacency_matrix(g, order_or_lex(g, order))).decimal_coeffs();
          },
          py::arg("graph"), py::arg("order") = std::nullopt);

    m.def("cover_report", &cover_report, py::arg("kind"), py::arg("cover_level"),
          py::arg("base_level"));
    m.def("artin_report", &artin_report, py::arg("kind"), py::arg("cover_level"),
          py::arg("base_level"));

    m.def("run_reference_checks",
          [](const std::string& filter) {
              std::vector<std::tuple<std::string, bool, std::string>> out;
              for (const auto& r : run_reference_checks(filter))
                  out.emplace_back(r.name, r.pass, r.detail);
              return out;
          },
          py::arg("filter") = "");
}
