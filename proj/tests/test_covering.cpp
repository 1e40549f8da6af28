#include "doctest.h"
#include "zetagraph/covering.hpp"
#include "zetagraph/products.hpp"

using namespace zg;

TEST_CASE("permutations") {
    Permutation id = Permutation::identity(4);
    CHECK(id.cycle_string() == "(1)");
    CHECK(id.order() == 1);
    Permutation swap01(std::vector<int>{1, 0, 2, 3});
    CHECK(swap01.cycle_string() == "(1 2)");
    CHECK(swap01.order() == 2);
    Permutation cyc(std::vector<int>{1, 2, 3, 0});
    CHECK(cyc.cycle_string() == "(1 2 3 4)");
    CHECK(cyc.order() == 4);
    CHECK(compose(swap01, cyc).images() == std::vector<int>{0, 2, 3, 1});  // cyc first
    CHECK(compose(cyc, cyc.inverse()) == id);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), std::invalid_argument);
}

TEST_CASE("monodromy closure") {
    Permutation swap(std::vector<int>{1, 0});
    CHECK(monodromy_order(std::vector<Permutation>{swap}).order == 2);
    CHECK(monodromy_order(std::vector<Permutation>{Permutation::identity(3)}).order == 1);
    CHECK(monodromy_order({}).order == 1);

    // full symmetric group on 5 points against a tiny cap: lower bound reported
    Permutation s5a(std::vector<int>{1, 0, 2, 3, 4});
    Permutation s5b(std::vector<int>{1, 2, 3, 4, 0});
    MonodromyOrder capped = monodromy_order(std::vector<Permutation>{s5a, s5b}, 10);
    CHECK(!capped.exact);
    CHECK(capped.order == 10);
    MonodromyOrder full = monodromy_order(std::vector<Permutation>{s5a, s5b});
    CHECK(full.exact);
    CHECK(full.order == 120);
}

TEST_CASE("two-sheet Schreier covers are normal with the expected Frobenius pair") {
    CoverSpec c32 = make_schreier_cover(3, 2);  // r even
    CHECK(verify_covering(c32));
    auto frob = frobenius_permutations(c32);
    CHECK(frob[0].first == "e_a");
    CHECK(frob[0].second.cycle_string() == "(1)");
    CHECK(frob[1].first == "e_b");
    CHECK(frob[1].second.cycle_string() == "(1 2)");
    CHECK(is_normal(c32));

    CoverSpec c43 = make_schreier_cover(4, 3);  // r odd: the roles swap
    auto frob2 = frobenius_permutations(c43);
    CHECK(frob2[0].second.cycle_string() == "(1 2)");
    CHECK(frob2[1].second.cycle_string() == "(1)");
    CHECK(is_normal(c43));
}

TEST_CASE("composition of the two Frobenius permutations has order 2^n") {
    for (int r = 1; r <= 2; ++r) {
        for (int n = 1; n <= 4; ++n) {
            CoverSpec c = make_schreier_cover(n + r, r);
            auto frob = frobenius_permutations(c);
            CHECK(compose(frob[0].second, frob[1].second).order() == (1 << n));
        }
    }
}

TEST_CASE("the eight-sheet monodromy group") {
    CoverSpec c = make_schreier_cover(5, 2);
    auto frob = frobenius_permutations(c);
    std::vector<Permutation> gens{frob[0].second, frob[1].second};
    MonodromyOrder m = monodromy_order(gens);
    CHECK(m.exact);
    CHECK(m.order == 64);
    CHECK(m.order > 8);
    CHECK(!is_normal(c));
}

TEST_CASE("identity cover") {
    CoverSpec c = make_identity_cover(build_schreier(2));
    CHECK(verify_covering(c));
    CHECK(frobenius_permutations(c).empty());
    CHECK(is_normal(c));
    CHECK(sheet_connectivity(c, "1"));
}

TEST_CASE("deck maps") {
    auto flip_last = [](std::string w) {
        w.back() = w.back() == '0' ? '1' : '0';
        return w;
    };
    CoverSpec c = make_schreier_cover(3, 2);
    std::map<std::string, std::string> sigma, ident, bogus;
    for (const auto& w : c.cover().vertices()) {
        sigma[w] = flip_last(w);
        ident[w] = w;
        bogus[w] = w;
    }
    CHECK(verify_deck_map(c, sigma, 2));
    CHECK(verify_deck_map(c, ident, 1));
    CHECK(!verify_deck_map(c, sigma, 4));  // wrong claimed order
    std::swap(bogus["000"], bogus["110"]);  // projections disagree
    CHECK(!verify_deck_map(c, bogus, 2));
}

TEST_CASE("zig-zag covers") {
    CoverSpec c = make_zigzag_cover(2, 1);
    CHECK(verify_covering(c));
    CHECK(c.cut_edges().size() == 4);
    CHECK(is_normal(c));
    for (const auto& sheet : c.sheet_keys()) CHECK(sheet_connectivity(c, sheet));

    auto flip_last_word = [](const std::string& key) {
        auto [w, s] = split_product_key(key);
        std::string ww = w;
        ww.back() = ww.back() == '0' ? '1' : '0';
        return product_key(ww, s);
    };
    std::map<std::string, std::string> sigma;
    for (const auto& key : c.cover().vertices()) sigma[key] = flip_last_word(key);
    CHECK(verify_deck_map(c, sigma, 2));

    CHECK(!is_normal(make_zigzag_cover(3, 1)));
}

TEST_CASE("cover spec validation") {
    RotationGraph cover = build_schreier(2);
    RotationGraph base = build_schreier(1);
    std::map<std::string, std::string> proj, sheets;
    for (const auto& w : cover.vertices()) {
        proj[w] = w.substr(0, 1);
        sheets[w] = w.substr(1);
    }
    auto bad_proj = proj;
    bad_proj["00"] = "1";  // fiber of "1" meets sheet "0" twice
    CHECK_THROWS_AS(CoverSpec(cover, base, bad_proj, {"0", "1"}, sheets, {}),
                    std::invalid_argument);
    auto bad_sheets = sheets;
    bad_sheets["00"] = "1";
    CHECK_THROWS_AS(CoverSpec(cover, base, proj, {"0", "1"}, bad_sheets, {}),
                    std::invalid_argument);
    CHECK_NOTHROW(CoverSpec(cover, base, proj, {"0", "1"}, sheets, {}));
}

TEST_CASE("conjecture probe agrees across the supported range") {
    ConjectureProbe p12 = conjecture_probe(1, 2);
    CHECK(p12.schreier_normal);
    CHECK(p12.zigzag_normal);
    CHECK(p12.schreier_monodromy == 2);
    CHECK(p12.zigzag_monodromy == 2);
    CHECK(p12.verdicts_agree);

    ConjectureProbe p13 = conjecture_probe(1, 3);
    CHECK(!p13.schreier_normal);
    CHECK(!p13.zigzag_normal);
    CHECK(p13.verdicts_agree);

    ConjectureProbe p23 = conjecture_probe(2, 3);
    CHECK(p23.schreier_normal);
    CHECK(p23.zigzag_normal);
    CHECK(p23.verdicts_agree);
}
