#pragma once

#include <map>
#include <string>
#include <vector>

#include "zetagraph/covering.hpp"
#include "zetagraph/graph.hpp"
#include "zetagraph/matrix.hpp"

namespace zg {

// (1-t^2)^(|E|-|V|) det(I - At + Qt^2), Q = diag(deg - 1). Degree 2|E|,
// constant term 1. Requires a connected graph with minimum degree 2.
IntPoly ihara_reciprocal(const RotationGraph& g, const VertexOrder& order);
IntPoly ihara_reciprocal(const RotationGraph& g);

// det(I - tB) on the directed-edge non-backtracking matrix; equals
// ihara_reciprocal on every graph (the independent route for the same value).
IntPoly nonbacktracking_reciprocal(const RotationGraph& g, long half_edge_cap = 256);

struct FiniteGroup {
    std::vector<std::string> elements;   // elements[0] is the identity
    std::vector<std::vector<int>> mul;   // mul[i][j] = index of elements[i]*elements[j]
};

FiniteGroup trivial_group();
FiniteGroup z2_group();  // {"1", "sigma"}

// One-dimensional character with values +-1.
struct Character {
    FiniteGroup group;
    std::vector<int> values;  // per element, +1 or -1
    bool is_trivial() const;
};

Character trivial_character(const FiniteGroup& g);
std::vector<Character> all_characters(const FiniteGroup& g);  // trivial and z2 only

// Deck group of a normal cover in scope: trivial for one sheet, Z/2Z for two
// sheets (identity sheet = first sheet key). Errors otherwise.
FiniteGroup deck_group(const CoverSpec& c);

// A(g) entry (i,j): edges between base-vertex-i's fiber point on the identity
// sheet and base-vertex-j's fiber point on the g sheet. Sum over g is the base
// adjacency matrix.
std::map<std::string, IntMatrix> artin_matrices(const CoverSpec& c, const VertexOrder& base_order);

// (1-t^2)^(|E_base|-|V_base|) det(I - A_chi t + Q t^2) with
// A_chi = sum_g chi(g) A(g); the trivial character gives the base reciprocal.
IntPoly artin_reciprocal(const CoverSpec& c, const Character& chi, const VertexOrder& base_order);
IntPoly artin_reciprocal(const CoverSpec& c, const Character& chi);

// ihara_reciprocal(cover) == product of artin_reciprocal over all characters.
bool factorization_check(const CoverSpec& c);

struct DivisibilityResult {
    bool divisible = false;
    IntPoly quotient;
    IntPoly remainder;
};

DivisibilityResult divisibility_check(const IntPoly& base_poly, const IntPoly& cover_poly);

}  // namespace zg
