#include "zetagraph/graphspec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "zetagraph/products.hpp"

namespace zg {

RotationGraph cycle_graph(int m) {
    if (m < 1) throw std::invalid_argument("cycle length must be positive");
    std::vector<std::string> verts;
    for (int i = 0; i < m; ++i) verts.push_back(std::to_string(i));
    RotationGraph g(verts, {"cw", "ccw"});
    for (int i = 0; i < m; ++i) g.pair(i, 0, (i + 1) % m, 1);
    g.finalize();
    return g;
}

namespace {

int parse_int(const std::string& s, const std::string& what) {
    size_t used = 0;
    int value;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + what + ": " + s);
    }
    if (used != s.size()) throw std::invalid_argument("bad " + what + ": " + s);
    return value;
}

}  // namespace

RotationGraph parse_graph_spec(const std::string& spec, int level_cap) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("graph spec needs kind:args, got " + spec);
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (kind == "gamma") return build_schreier(parse_int(rest, "level"), level_cap);
    if (kind == "zigzag") return zigzag_c4(parse_int(rest, "level"), level_cap);
    if (kind == "cycle") return cycle_graph(parse_int(rest, "cycle length"));
    if (kind == "grp") {
        size_t c2 = rest.find(':');
        if (c2 == std::string::npos)
            throw std::invalid_argument("grp spec needs grp:<n>:<r>");
        return generalized_replacement(parse_int(rest.substr(0, c2), "n"),
                                       parse_int(rest.substr(c2 + 1), "r"), "", level_cap);
    }
    if (kind == "file") {
        std::ifstream in(rest);
        if (!in) throw std::invalid_argument("cannot open " + rest);
        std::ostringstream buf;
        buf << in.rdbuf();
        return graph_from_json(buf.str());
    }
    throw std::invalid_argument("unknown graph kind: " + kind);
}

}  // namespace zg
