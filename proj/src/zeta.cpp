#include "zetagraph/zeta.hpp"

#include <algorithm>
#include <stdexcept>

namespace zg {

namespace {

IntPoly one_minus_t2_power(long e) {
    return parse_factored("(1-t^2)").pow(static_cast<unsigned>(e));
}

}  // namespace

IntPoly ihara_reciprocal(const RotationGraph& g, const VertexOrder& order) {
    if (!g.is_connected()) throw std::invalid_argument("ihara reciprocal needs a connected graph");
    if (g.port_count() < 2) throw std::invalid_argument("ihara reciprocal needs min degree 2");
    const int n = g.vertex_count();
    IntMatrix a = adjacency_matrix(g, order);
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<BigInt> coeffs{BigInt(i == j ? 1 : 0), -a.at(i, j)};
            if (i == j) coeffs.push_back(BigInt(g.degree(i) - 1));
            m.at(i, j) = IntPoly(std::move(coeffs));
        }
    }
    return one_minus_t2_power(g.edge_count() - n) * det_fraction_free(std::move(m));
}

IntPoly ihara_reciprocal(const RotationGraph& g) {
    return ihara_reciprocal(g, VertexOrder::lexicographic(g));
}

IntPoly nonbacktracking_reciprocal(const RotationGraph& g, long half_edge_cap) {
    if (!g.is_connected()) throw std::invalid_argument("zeta needs a connected graph");
    if (g.port_count() < 2) throw std::invalid_argument("zeta needs min degree 2");
    const long N = 2 * g.edge_count();
    if (N > half_edge_cap)
        throw std::length_error("non-backtracking matrix size " + std::to_string(N) +
                                " exceeds cap " + std::to_string(half_edge_cap));
    const int P = g.port_count();
    IntMatrix b(static_cast<int>(N), static_cast<int>(N), BigInt(0));
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int p = 0; p < P; ++p) {
            HalfEdge rev = g.rot(v, p);  // e = (v,p) runs v -> rev.vertex; reverse(e) = rev
            for (int q = 0; q < P; ++q) {
                if (q == rev.port) continue;  // immediate reversal
                b.at(v * P + p, rev.vertex * P + q) = 1;
            }
        }
    }
    // det(I - tB) = t^N char_poly(B)(1/t): reverse the coefficients
    IntPoly cp = char_poly(b);
    std::vector<BigInt> rev(N + 1, BigInt(0));
    for (int i = 0; i <= cp.degree(); ++i) rev[N - i] = cp.coeff(i);
    return IntPoly(std::move(rev));
}

FiniteGroup trivial_group() { return {{"1"}, {{0}}}; }

FiniteGroup z2_group() { return {{"1", "sigma"}, {{0, 1}, {1, 0}}}; }

bool Character::is_trivial() const {
    return std::all_of(values.begin(), values.end(), [](int v) { return v == 1; });
}

Character trivial_character(const FiniteGroup& g) {
    return {g, std::vector<int>(g.elements.size(), 1)};
}

std::vector<Character> all_characters(const FiniteGroup& g) {
    if (g.elements.size() == 1) return {trivial_character(g)};
    if (g.elements.size() == 2) return {trivial_character(g), Character{g, {1, -1}}};
    throw std::invalid_argument("characters implemented for groups of order <= 2");
}

FiniteGroup deck_group(const CoverSpec& c) {
    if (c.sheet_count() == 1) return trivial_group();
    if (c.sheet_count() == 2) {
        if (!is_normal(c)) throw std::invalid_argument("cover is not normal");
        return z2_group();
    }
    throw std::invalid_argument("deck group labeling implemented for <= 2 sheets");
}

std::map<std::string, IntMatrix> artin_matrices(const CoverSpec& c, const VertexOrder& base_order) {
    if (!base_order.covers(c.base()))
        throw std::invalid_argument("base order does not cover the base graph");
    FiniteGroup group = deck_group(c);
    const int n = c.base().vertex_count();
    std::map<std::string, IntMatrix> out;
    for (size_t gi = 0; gi < group.elements.size(); ++gi) {
        IntMatrix a(n, n, BigInt(0));
        for (int i = 0; i < n; ++i) {
            const std::string& x = c.fiber_vertex(base_order.key(i), 0);
            int xv = c.cover().vertex_index(x);
            for (int p = 0; p < c.cover().port_count(); ++p) {
                const std::string& y = c.cover().vertex(c.cover().rot(xv, p).vertex);
                if (c.sheet_index(y) != static_cast<int>(gi)) continue;
                int j = base_order.index_of(c.project(y));
                a.at(i, j) += 1;  // a loop at x is seen by both its half-edges
            }
        }
        out.emplace(group.elements[gi], std::move(a));
    }
    // soundness: the A(g) decompose the base adjacency
    IntMatrix total(n, n, BigInt(0));
    for (const auto& [name, a] : out)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) total.at(i, j) += a.at(i, j);
    if (!(total == adjacency_matrix(c.base(), base_order)))
        throw std::logic_error("artin matrices do not sum to the base adjacency");
    return out;
}

IntPoly artin_reciprocal(const CoverSpec& c, const Character& chi, const VertexOrder& base_order) {
    auto mats = artin_matrices(c, base_order);
    if (chi.values.size() != chi.group.elements.size() ||
        mats.size() != chi.group.elements.size())
        throw std::invalid_argument("character does not match the deck group");
    const int n = c.base().vertex_count();
    IntMatrix a_chi(n, n, BigInt(0));
    for (size_t gi = 0; gi < chi.group.elements.size(); ++gi) {
        const IntMatrix& a = mats.at(chi.group.elements[gi]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a_chi.at(i, j) += BigInt(chi.values[gi]) * a.at(i, j);
    }
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<BigInt> coeffs{BigInt(i == j ? 1 : 0), -a_chi.at(i, j)};
            if (i == j) coeffs.push_back(BigInt(c.base().degree(i) - 1));
            m.at(i, j) = IntPoly(std::move(coeffs));
        }
    long rank_exp = c.base().edge_count() - n;
    return one_minus_t2_power(rank_exp) * det_fraction_free(std::move(m));
}

IntPoly artin_reciprocal(const CoverSpec& c, const Character& chi) {
    return artin_reciprocal(c, chi, VertexOrder::lexicographic(c.base()));
}

bool factorization_check(const CoverSpec& c) {
    FiniteGroup group = deck_group(c);
    IntPoly product(1);
    for (const Character& chi : all_characters(group))
        product = product * artin_reciprocal(c, chi);
    return product == ihara_reciprocal(c.cover());
}

DivisibilityResult divisibility_check(const IntPoly& base_poly, const IntPoly& cover_poly) {
    if (base_poly.is_zero()) throw std::invalid_argument("divisibility by the zero polynomial");
    PolyDivision d = poly_divide(cover_poly, base_poly);
    return {d.exact, d.quotient, d.remainder};
}

}  // namespace zg
