#include <sstream>

#include "doctest.h"
#include "zetagraph/basilica.hpp"
#include "zetagraph/graph.hpp"
#include "zetagraph/products.hpp"

using namespace zg;

namespace {

RotationGraph one_loop_vertex() {
    RotationGraph g({"v"}, {"p", "q"});
    g.pair("v", "p", "v", "q");
    g.finalize();
    return g;
}

}  // namespace

TEST_CASE("adjacency conventions") {
    RotationGraph g1 = build_schreier(1);
    IntMatrix a = adjacency_matrix(g1, VertexOrder({"0", "1"}));
    CHECK(a.at(0, 0) == 2);  // loop counts twice on the diagonal
    CHECK(a.at(0, 1) == 2);
    CHECK(a.at(1, 0) == 2);
    CHECK(a.at(1, 1) == 2);

    IntMatrix loop = adjacency_matrix(one_loop_vertex(), VertexOrder({"v"}));
    CHECK(loop.at(0, 0) == 2);

    CHECK_THROWS_AS(adjacency_matrix(g1, VertexOrder({"0"})), std::invalid_argument);
}

TEST_CASE("adjacency row sums equal degrees and the matrix is symmetric") {
    for (const auto* spec : {"1", "2", "3"}) {
        RotationGraph g = build_schreier(spec[0] - '0');
        VertexOrder ord = VertexOrder::lexicographic(g);
        IntMatrix a = adjacency_matrix(g, ord);
        for (int i = 0; i < a.rows(); ++i) {
            BigInt row(0);
            for (int j = 0; j < a.cols(); ++j) {
                row += a.at(i, j);
                CHECK(a.at(i, j) == a.at(j, i));
            }
            CHECK(row == 4);
        }
    }
}

TEST_CASE("neighbor multisets") {
    RotationGraph g1 = build_schreier(1);
    CHECK(g1.neighbors("0") == std::vector<std::string>{"0", "0", "1", "1"});
    RotationGraph g2 = build_schreier(2);
    CHECK(g2.neighbors("00") == std::vector<std::string>{"01", "01", "10", "10"});
    RotationGraph zz = zigzag_c4(1);
    CHECK(zz.neighbors("0,a^-1") == std::vector<std::string>{"0,a", "0,b", "1,a", "1,b"});
    CHECK_THROWS_AS(g1.neighbors("nope"), std::out_of_range);
}

TEST_CASE("isomorphism verification") {
    RotationGraph g2 = build_schreier(2);
    std::map<std::string, std::string> ident;
    for (const auto& v : g2.vertices()) ident[v] = v;
    CHECK(verify_isomorphism(g2, g2, ident, false) == IsoStatus::ok);
    CHECK(verify_isomorphism(g2, g2, ident, true) == IsoStatus::ok);

    auto swapped = ident;
    swapped["00"] = "11";
    swapped["11"] = "00";
    CHECK(verify_isomorphism(g2, g2, swapped, false) == IsoStatus::adjacency_mismatch);

    auto collapsed = ident;
    collapsed["00"] = "11";
    CHECK(verify_isomorphism(g2, g2, collapsed, false) == IsoStatus::not_bijective);

    std::map<std::string, std::string> partial{{"00", "00"}};
    CHECK(verify_isomorphism(g2, g2, partial, false) == IsoStatus::not_bijective);
}

TEST_CASE("dot export") {
    std::string dot = export_dot(build_schreier(1));
    CHECK(dot.find("graph {") == 0);
    size_t nodes = 0, edges = 0;
    std::istringstream is(dot);
    std::string line;
    while (std::getline(is, line)) {
        if (line.find("--") != std::string::npos)
            ++edges;
        else if (line.find("\"") != std::string::npos)
            ++nodes;
    }
    CHECK(nodes == 2);
    CHECK(edges == 4);  // two loops and the double edge, one statement each

    RotationGraph isolated({"x"}, {});
    isolated.finalize();
    std::string d2 = export_dot(isolated);
    CHECK(d2 == "graph {\n  \"x\";\n}\n");

    std::string d3 = export_dot(build_schreier(2));
    size_t edge_statements = 0;
    for (size_t pos = d3.find(" -- "); pos != std::string::npos; pos = d3.find(" -- ", pos + 1))
        ++edge_statements;
    CHECK(edge_statements == 8);
}

TEST_CASE("json round trip is byte-exact") {
    for (int n = 1; n <= 3; ++n) {
        RotationGraph g = build_schreier(n);
        std::string text = graph_to_json(g);
        RotationGraph back = graph_from_json(text);
        CHECK(graph_to_json(back) == text);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.involution_ok());
    }
    CHECK_THROWS(graph_from_json("{\"vertices\": []}"));
}

TEST_CASE("involution across the corpus") {
    for (int n = 1; n <= 5; ++n) CHECK(build_schreier(n).involution_ok());
    CHECK(c4_graph().involution_ok());
    for (int n = 1; n <= 3; ++n) CHECK(zigzag_c4(n).involution_ok());
    for (int n = 1; n <= 2; ++n)
        for (int r = 1; r <= 2; ++r) CHECK(generalized_replacement(n, r).involution_ok());
}

TEST_CASE("identity is an isomorphism on every corpus graph") {
    std::vector<RotationGraph> corpus;
    for (int n = 1; n <= 3; ++n) corpus.push_back(build_schreier(n));
    corpus.push_back(c4_graph());
    corpus.push_back(zigzag_c4(1));
    corpus.push_back(zigzag_c4(2));
    corpus.push_back(generalized_replacement(1, 2));
    for (const auto& g : corpus) {
        std::map<std::string, std::string> ident;
        for (const auto& v : g.vertices()) ident[v] = v;
        CHECK(verify_isomorphism(g, g, ident, false) == IsoStatus::ok);
        CHECK(verify_isomorphism(g, g, ident, true) == IsoStatus::ok);
    }
}

TEST_CASE("construction errors") {
    RotationGraph g({"u", "v"}, {"p"});
    g.pair("u", "p", "v", "p");
    CHECK_THROWS_AS(g.pair("u", "p", "v", "p"), std::invalid_argument);
    RotationGraph h({"u"}, {"p"});
    CHECK_THROWS_AS(h.pair("u", "p", "u", "p"), std::invalid_argument);
    CHECK_THROWS_AS(h.finalize(), std::logic_error);  // not total
    CHECK_THROWS_AS(RotationGraph({"u", "u"}, {}), std::invalid_argument);
}
