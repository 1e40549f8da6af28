#include "doctest.h"
#include "zetagraph/covering.hpp"
#include "zetagraph/products.hpp"

using namespace zg;

TEST_CASE("the 4-cycle partner graph") {
    RotationGraph c4 = c4_graph();
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.port_count() == 2);
    CHECK(c4.rot(c4.vertex_index("a"), c4.port_index("B")) ==
          HalfEdge{c4.vertex_index("b^-1"), c4.port_index("B")});
    CHECK(c4.rot(c4.vertex_index("b^-1"), c4.port_index("A")) ==
          HalfEdge{c4.vertex_index("b"), c4.port_index("A")});
    CHECK(c4.rot(c4.vertex_index("b"), c4.port_index("B")) ==
          HalfEdge{c4.vertex_index("a^-1"), c4.port_index("B")});
    CHECK(c4.rot(c4.vertex_index("a^-1"), c4.port_index("A")) ==
          HalfEdge{c4.vertex_index("a"), c4.port_index("A")});
    CHECK(c4.is_connected());
}

TEST_CASE("replacement product is the bigger Schreier graph") {
    for (int n = 1; n <= 6; ++n) {
        for (int r = 1; n + r <= 7; ++r) {
            RotationGraph prod = generalized_replacement(n, r);
            RotationGraph target = build_schreier(n + r);
            CHECK(verify_isomorphism(prod, target, concat_iso_map(prod), true) == IsoStatus::ok);
        }
    }
}

TEST_CASE("contracting sheets recovers the left factor") {
    // lift edges drive the a/b actions directly for even r, swapped for odd r
    for (int n = 1; n <= 3; ++n) {
        for (int r = 1; r <= 3; ++r) {
            RotationGraph prod = generalized_replacement(n, r);
            const std::string u0(r, '0');
            RotationGraph contracted(all_words(n), {"a", "a^-1", "b", "b^-1"});
            long lift_edges = 0;
            for (const auto& v : all_words(n)) {
                for (const char* s : {"a", "b"}) {
                    HalfEdge h = prod.rot(prod.vertex_index(product_key(v, u0)),
                                          prod.port_index(s));
                    auto [w, u] = split_product_key(prod.vertex(h.vertex));
                    contracted.pair(v, s, w, std::string(s) + "^-1");
                    ++lift_edges;
                }
            }
            contracted.finalize();
            CHECK(lift_edges == (1l << (n + 1)));
            std::map<std::string, std::string> ident;
            for (const auto& v : all_words(n)) ident[v] = v;
            std::map<std::string, std::string> ports;
            if (r % 2 == 1)
                ports = {{"a", "b"}, {"a^-1", "b^-1"}, {"b", "a"}, {"b^-1", "a^-1"}};
            CHECK(verify_isomorphism(contracted, build_schreier(n), ident, true, ports) ==
                  IsoStatus::ok);
        }
    }
}

TEST_CASE("zig-zag with the 4-cycle") {
    RotationGraph y = zigzag_c4(1);
    CHECK(y.vertex_count() == 8);
    CHECK(y.port_count() == 4);
    CHECK(y.neighbors("0,a^-1") == std::vector<std::string>{"0,a", "0,b", "1,a", "1,b"});

    RotationGraph y2 = zigzag_c4(2);
    CHECK(y2.neighbors("00,a^-1") == std::vector<std::string>{"01,a", "01,b", "10,a", "10,b"});

    for (int n = 1; n <= 5; ++n) {
        RotationGraph z = zigzag_c4(n);
        CHECK(z.vertex_count() == (1 << (n + 2)));
        CHECK(z.edge_count() == (1l << (n + 3)));
        CHECK(z.port_count() == 4);
        CHECK(z.is_connected());
        CHECK(double_rotation_check(z));
    }
}

TEST_CASE("neighborhood coincidences in the zig-zag") {
    for (int r = 1; r <= 3; ++r) {
        RotationGraph z = zigzag_c4(r);
        for (const auto& w : all_words(r)) {
            CHECK(z.neighbors(product_key(w, "a")) == z.neighbors(product_key(w, "b")));
            CHECK(z.neighbors(product_key(w, "a^-1")) == z.neighbors(product_key(w, "b^-1")));
        }
    }
}

TEST_CASE("double rotation check rejects a corrupted table") {
    RotationGraph good = zigzag_c4(1);
    CHECK(double_rotation_check(good));
    // identity table: every half-edge "paired" with itself
    std::vector<int> broken(4 * 8);
    for (size_t i = 0; i < broken.size(); ++i) broken[i] = static_cast<int>(i);
    RotationGraph bad = RotationGraph::unchecked(good.vertices(), good.ports(), broken);
    CHECK(!double_rotation_check(bad));
}

TEST_CASE("zig-zag size mismatch is rejected") {
    CHECK_THROWS_AS(zigzag(c4_graph(), c4_graph()), std::invalid_argument);
    CHECK_THROWS_AS(zigzag(build_schreier(1), build_schreier(1)), std::invalid_argument);
}

TEST_CASE("zig-zag with a generic partner") {
    // double edge on two vertices named after the 4-cycle's ports
    RotationGraph partner({"A", "B"}, {"x", "y"});
    partner.pair("A", "x", "B", "y");
    partner.pair("A", "y", "B", "x");
    partner.finalize();
    RotationGraph z = zigzag(c4_graph(), partner);
    CHECK(z.vertex_count() == 8);
    CHECK(z.port_count() == 4);  // degree d2^2
    CHECK(double_rotation_check(z));
}

TEST_CASE("alternative basepoint still covers but is not the Schreier graph") {
    RotationGraph alt = generalized_replacement(1, 3, "110");
    CHECK(alt.involution_ok());
    CHECK(alt.is_connected());
    CHECK(verify_isomorphism(alt, build_schreier(4), concat_iso_map(alt), true) !=
          IsoStatus::ok);
    CHECK(!find_isomorphism(alt, build_schreier(4)).has_value());

    // positive control for the brute-force search
    RotationGraph small = generalized_replacement(1, 2);
    auto found = find_isomorphism(small, build_schreier(3));
    REQUIRE(found.has_value());
    CHECK(verify_isomorphism(small, build_schreier(3), *found, false) == IsoStatus::ok);
    CHECK_THROWS_AS(find_isomorphism(build_schreier(5), build_schreier(5)),
                    std::length_error);

    std::map<std::string, std::string> proj, sheet_of;
    for (const auto& key : alt.vertices()) {
        auto [v, u] = split_product_key(key);
        proj[key] = u;
        sheet_of[key] = v;
    }
    CoverSpec c(alt, build_schreier(3), proj, {"0", "1"}, sheet_of,
                {{"e_a", "110", "a"}, {"e_b", "110", "b"}});
    CHECK(verify_covering(c));
    CHECK(is_normal(c));
}

TEST_CASE("alternation vertex order reproduces the reference labeling") {
    VertexOrder ord = alternation_vertex_order(1);
    CHECK(ord.keys() == std::vector<std::string>{"0,a^-1", "1,a", "1,a^-1", "0,a",
                                                 "0,b^-1", "1,b", "1,b^-1", "0,b"});
    for (int n = 2; n <= 3; ++n) CHECK(alternation_vertex_order(n).covers(zigzag_c4(n)));
}

TEST_CASE("replacement cap") {
    CHECK_THROWS_AS(generalized_replacement(8, 8), std::out_of_range);
    CHECK_THROWS_AS(generalized_replacement(0, 1), std::out_of_range);
}
