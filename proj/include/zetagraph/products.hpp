#pragma once

#include <string>

#include "zetagraph/basilica.hpp"
#include "zetagraph/graph.hpp"

namespace zg {

// Composite vertex keys use "left,right"; both products rely on it.
std::string product_key(const std::string& left, const std::string& right);
std::pair<std::string, std::string> split_product_key(const std::string& key);

// The fixed 4-cycle whose vertex names coincide with the Schreier port
// alphabet: a -B- b^-1 -A- b -B- a^-1 -A- a, ports {A, B}.
RotationGraph c4_graph();

// Generalized replacement product on X^n x X^r: a cut copy of the level-r
// graph in every sheet, the two freed edges at the basepoint lifted across
// sheets, with the r-parity swap deciding which generator drives each lift.
// basepoint defaults to 0^r; any other choice still yields a valid rotation
// graph but not a Schreier graph.
RotationGraph generalized_replacement(int n, int r, const std::string& basepoint = "",
                                      int level_cap = kDefaultLevelCap);

// Zig-zag product (small step, big step, small step). Requires |V(G2)| ==
// |ports(G1)| with V(G2) named exactly like G1's ports. New port labels are
// the concatenated G2 port pairs; the rotation returns label (j', i') so that
// double application is the identity.
RotationGraph zigzag(const RotationGraph& g1, const RotationGraph& g2);

RotationGraph zigzag_c4(int n, int level_cap = kDefaultLevelCap);

// Applying the rotation twice returns every half-edge to itself.
bool double_rotation_check(const RotationGraph& g);

// f(v,u) = uv as a vertex map from generalized_replacement(n, r) onto the
// level-(n+r) Schreier graph.
std::map<std::string, std::string> concat_iso_map(const RotationGraph& product);

// Vertex order of a zig-zag product generated by the alternation spanning
// cycle: words follow the alternate action started at 0^n, the inner cycle
// alternates ports a^-1/a, the outer one b^-1/b. Makes the adjacency matrix
// circulant and reproduces the reference labelings.
VertexOrder alternation_vertex_order(int n, int level_cap = kDefaultLevelCap);

}  // namespace zg
