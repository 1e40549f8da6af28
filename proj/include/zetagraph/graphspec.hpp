#pragma once

#include <string>

#include "zetagraph/basilica.hpp"
#include "zetagraph/graph.hpp"

namespace zg {

// The cycle graph C_m with ports cw/ccw.
RotationGraph cycle_graph(int m);

// Graph spec mini-language:
//   gamma:<n>     level-n Schreier graph
//   zigzag:<n>    zig-zag product of gamma:<n> with the 4-cycle
//   grp:<n>:<r>   generalized replacement product
//   cycle:<m>     the m-cycle
//   file:<path>   graph JSON file
RotationGraph parse_graph_spec(const std::string& spec, int level_cap = kDefaultLevelCap);

}  // namespace zg
