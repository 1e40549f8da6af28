#include "zetagraph/products.hpp"

#include <stdexcept>

namespace zg {

std::string product_key(const std::string& left, const std::string& right) {
    return left + "," + right;
}

std::pair<std::string, std::string> split_product_key(const std::string& key) {
    size_t pos = key.find(',');
    if (pos == std::string::npos) throw std::invalid_argument("not a product key: " + key);
    return {key.substr(0, pos), key.substr(pos + 1)};
}

RotationGraph c4_graph() {
    RotationGraph g({"a", "b^-1", "b", "a^-1"}, {"A", "B"});
    g.pair("a", "B", "b^-1", "B");
    g.pair("b^-1", "A", "b", "A");
    g.pair("b", "B", "a^-1", "B");
    g.pair("a^-1", "A", "a", "A");
    g.finalize();
    return g;
}

RotationGraph generalized_replacement(int n, int r, const std::string& basepoint,
                                      int level_cap) {
    if (n < 1 || r < 1 || n + r > level_cap)
        throw std::out_of_range("replacement product outside [1, cap]: n=" + std::to_string(n) +
                                " r=" + std::to_string(r));
    const std::string u0 = basepoint.empty() ? std::string(r, '0') : basepoint;
    if (static_cast<int>(u0.size()) != r)
        throw std::invalid_argument("basepoint length must be r");
    const bool r_even = (r % 2 == 0);
    const std::string u0_a = act(Gen::a, u0);
    const std::string u0_b = act(Gen::b, u0);

    std::vector<std::string> keys;
    for (const auto& v : all_words(n))
        for (const auto& u : all_words(r)) keys.push_back(product_key(v, u));
    RotationGraph g(std::move(keys), {gen_name(Gen::a), gen_name(Gen::a_inv),
                                      gen_name(Gen::b), gen_name(Gen::b_inv)});

    for (const auto& v : all_words(n)) {
        // lifts of the two cut edges, one matching pair per sheet
        std::string va = act(r_even ? Gen::a : Gen::b, v);
        std::string vb = act(r_even ? Gen::b : Gen::a, v);
        g.pair(product_key(v, u0), gen_name(Gen::a), product_key(va, u0_a), gen_name(Gen::a_inv));
        g.pair(product_key(v, u0), gen_name(Gen::b), product_key(vb, u0_b), gen_name(Gen::b_inv));
        // sheet edges: every level-r edge has exactly one side labeled a or b,
        // so iterating those sides covers each kept edge once; the two sides
        // at u0 are the cut edges handled above
        for (const auto& u : all_words(r)) {
            if (u == u0) continue;
            for (Gen s : {Gen::a, Gen::b})
                g.pair(product_key(v, u), gen_name(s), product_key(v, act(s, u)),
                       gen_name(inverse(s)));
        }
    }
    g.finalize();
    return g;
}

RotationGraph zigzag(const RotationGraph& g1, const RotationGraph& g2) {
    if (g2.vertex_count() != g1.port_count())
        throw std::invalid_argument("zig-zag: |V(G2)| must equal deg(G1)");
    for (const auto& p : g1.ports())
        if (!g2.has_vertex(p))
            throw std::invalid_argument("zig-zag: G2 vertex names must match G1 ports (missing " +
                                        p + ")");

    const int d2 = g2.port_count();
    std::vector<std::string> keys;
    for (const auto& v : g1.vertices())
        for (const auto& k : g2.vertices()) keys.push_back(product_key(v, k));
    std::vector<std::string> ports;
    for (const auto& i : g2.ports())
        for (const auto& j : g2.ports()) ports.push_back(i + j);
    RotationGraph g(std::move(keys), ports);

    for (int v = 0; v < g1.vertex_count(); ++v) {
        for (int k = 0; k < g2.vertex_count(); ++k) {
            for (int i = 0; i < d2; ++i) {
                for (int j = 0; j < d2; ++j) {
                    HalfEdge s1 = g2.rot(k, i);                               // (k', i')
                    int kp_as_port = g1.port_index(g2.vertex(s1.vertex));
                    HalfEdge big = g1.rot(v, kp_as_port);                     // (w, l')
                    int lp_as_vertex = g2.vertex_index(g1.port(big.port));
                    HalfEdge s2 = g2.rot(lp_as_vertex, j);                    // (l, j')
                    int src = g.vertex_index(product_key(g1.vertex(v), g2.vertex(k)));
                    int dst = g.vertex_index(product_key(g1.vertex(big.vertex), g2.vertex(s2.vertex)));
                    int src_port = i * d2 + j;
                    int dst_port = s2.port * d2 + s1.port;                    // (j', i')
                    if (src == dst && src_port == dst_port)
                        throw std::invalid_argument("zig-zag rotation fixes a half-edge");
                    if (std::make_pair(src, src_port) < std::make_pair(dst, dst_port))
                        g.pair(src, src_port, dst, dst_port);
                }
            }
        }
    }
    g.finalize();
    return g;
}

RotationGraph zigzag_c4(int n, int level_cap) {
    return zigzag(build_schreier(n, level_cap), c4_graph());
}

bool double_rotation_check(const RotationGraph& g) { return g.involution_ok(); }

std::map<std::string, std::string> concat_iso_map(const RotationGraph& product) {
    std::map<std::string, std::string> f;
    for (const auto& key : product.vertices()) {
        auto [v, u] = split_product_key(key);
        f[key] = u + v;
    }
    return f;
}

VertexOrder alternation_vertex_order(int n, int level_cap) {
    if (n < 1 || n > level_cap) throw std::out_of_range("level outside [1, cap]");
    const bool even = (n % 2 == 0);
    const Gen first = even ? Gen::a : Gen::b;
    const Gen second = even ? Gen::b_inv : Gen::a_inv;
    std::vector<std::string> word_seq{std::string(n, '0')};
    for (long i = 1; i < (1l << (n + 1)); ++i)
        word_seq.push_back(act(i % 2 == 1 ? first : second, word_seq.back()));
    std::vector<std::string> keys;
    for (size_t i = 0; i < word_seq.size(); ++i)
        keys.push_back(product_key(word_seq[i], i % 2 == 0 ? "a^-1" : "a"));
    for (size_t i = 0; i < word_seq.size(); ++i)
        keys.push_back(product_key(word_seq[i], i % 2 == 0 ? "b^-1" : "b"));
    return VertexOrder(std::move(keys));
}

}  // namespace zg
