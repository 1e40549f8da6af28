#include "doctest.h"
#include "zetagraph/poly.hpp"

using namespace zg;

namespace {

IntPoly poly(std::initializer_list<long> ascending) {
    std::vector<BigInt> c;
    for (long v : ascending) c.emplace_back(v);
    return IntPoly(std::move(c));
}

// deterministic little generator for property checks
struct Lcg {
    unsigned long long s = 0x2545F4914F6CDD1Dull;
    long next(long lo, long hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
    IntPoly poly(int max_deg, long coeff_bound) {
        std::vector<BigInt> c;
        int d = static_cast<int>(next(0, max_deg));
        for (int i = 0; i <= d; ++i) c.emplace_back(next(-coeff_bound, coeff_bound));
        return IntPoly(std::move(c));
    }
};

}  // namespace

TEST_CASE("canonical form") {
    CHECK(IntPoly().is_zero());
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(poly({1, 2, 0}).degree() == 1);
    CHECK(IntPoly(0).is_zero());
    CHECK(poly({5}).degree() == 0);
}

TEST_CASE("ring operations") {
    IntPoly one_minus_t = poly({1, -1});
    IntPoly one_plus_t = poly({1, 1});
    CHECK(one_minus_t * one_plus_t == poly({1, 0, -1}));
    CHECK(one_minus_t + one_plus_t == poly({2}));
    CHECK(one_minus_t - one_minus_t == IntPoly());
    CHECK(poly({1, 1}).pow(2) == poly({1, 2, 1}));
    CHECK(poly({0, 1}).pow(5) == IntPoly::monomial(1, 5));
    CHECK(poly({1, 2, 3}).eval(BigInt(10)) == 321);
}

TEST_CASE("exact division") {
    CHECK(divexact(poly({1, 0, -1}), poly({1, 1})) == poly({1, -1}));
    PolyDivision d = poly_divide(poly({1, 0, 1}), poly({1, 1}));
    CHECK(!d.exact);
    CHECK(d.remainder == poly({2}));
    CHECK_THROWS_AS(divexact(poly({1, 0, 1}), poly({1, 1})), std::domain_error);
    CHECK_THROWS_AS(poly_divide(poly({1}), IntPoly()), std::domain_error);
    // inexact leading-coefficient step: no integer quotient exists
    CHECK(!poly_divide(IntPoly::monomial(1, 2), poly({0, 2})).exact);
}

TEST_CASE("division properties on random inputs") {
    Lcg rng;
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly p = rng.poly(6, 9);
        IntPoly q = rng.poly(4, 9);
        if (q.is_zero()) continue;
        CHECK(divexact(p * q, q) == p);
        PolyDivision d = poly_divide(p, q);
        if (d.exact) CHECK(d.quotient * q == p);
    }
}

TEST_CASE("factored-form parser") {
    CHECK(parse_factored("(1-t)(1+t)") == poly({1, 0, -1}));
    CHECK(parse_factored("(1-t^2)^2") == poly({1, 0, -2, 0, 1}));
    CHECK(parse_factored("x^3") == IntPoly::monomial(1, 3));
    CHECK(parse_factored("-2") == poly({-2}));
    CHECK(parse_factored("3*t") == poly({0, 3}));
    CHECK(parse_factored("(t-1) (3t-1)") == poly({1, -4, 3}));
    CHECK(parse_factored("(1-t)(1-3t)(1+3t^2)") == poly({1, -4, 6, -12, 9}));
    IntPoly z2 = parse_factored("(1-t^2)^4 (t-1) (3t-1) (3t^2+1) (9t^4-2t^2+1)");
    CHECK(z2.degree() == 16);
    CHECK(z2.coeff(0) == 1);
    CHECK(z2.coeff(16) == 81);
    CHECK_THROWS_AS(parse_factored("(1-t"), std::invalid_argument);
    CHECK_THROWS_AS(parse_factored(""), std::invalid_argument);
    // unparenthesized sums would otherwise misparse as products
    CHECK_THROWS_AS(parse_factored("9t^4-2t^2+1"), std::invalid_argument);
    CHECK(parse_factored("-t (1+t)") == poly({0, -1, -1}));
}

TEST_CASE("string forms") {
    IntPoly p = poly({1, -2, 0, 9});
    CHECK(p.to_string() == "9t^3 - 2t + 1");
    CHECK(p.decimal_coeffs() == std::vector<std::string>{"1", "-2", "0", "9"});
    CHECK(IntPoly().to_string() == "0");
}
