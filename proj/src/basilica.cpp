#include "zetagraph/basilica.hpp"

#include <array>
#include <stdexcept>

namespace zg {

Gen inverse(Gen g) {
    switch (g) {
        case Gen::a: return Gen::a_inv;
        case Gen::a_inv: return Gen::a;
        case Gen::b: return Gen::b_inv;
        case Gen::b_inv: return Gen::b;
    }
    throw std::logic_error("bad generator");
}

const std::string& gen_name(Gen g) {
    static const std::array<std::string, 4> names{"a", "a^-1", "b", "b^-1"};
    return names[static_cast<int>(g)];
}

Gen gen_from_name(std::string_view name) {
    if (name == "a") return Gen::a;
    if (name == "a^-1") return Gen::a_inv;
    if (name == "b") return Gen::b;
    if (name == "b^-1") return Gen::b_inv;
    throw std::invalid_argument("unknown generator: " + std::string(name));
}

namespace {

void check_word(std::string_view w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    for (char c : w)
        if (c != '0' && c != '1') throw std::invalid_argument("word letters must be 0 or 1");
}

}  // namespace

std::string act(Gen g, std::string_view word) {
    check_word(word);
    std::string out(word);
    // Walk left to right carrying the active automaton state; a 1 under a/a^-1
    // (resp. the flipped letter under b/b^-1) ends the recursion.
    size_t i = 0;
    Gen state = g;
    while (i < out.size()) {
        switch (state) {
            case Gen::a:
                if (out[i] == '1') return out;
                state = Gen::b;
                break;
            case Gen::a_inv:
                if (out[i] == '1') return out;
                state = Gen::b_inv;
                break;
            case Gen::b:
                if (out[i] == '1') { out[i] = '0'; return out; }
                out[i] = '1';
                state = Gen::a;
                break;
            case Gen::b_inv:
                if (out[i] == '0') { out[i] = '1'; return out; }
                out[i] = '0';
                state = Gen::a_inv;
                break;
        }
        ++i;
    }
    return out;
}

std::string act_sequence(std::span<const Gen> gens, std::string_view word) {
    std::string w(word);
    for (Gen g : gens) w = act(g, w);
    return w;
}

std::vector<std::string> all_words(int n) {
    if (n < 0) throw std::invalid_argument("negative word length");
    std::vector<std::string> out;
    out.reserve(1u << n);
    for (unsigned long long m = 0; m < (1ull << n); ++m) {
        std::string w(n, '0');
        for (int i = 0; i < n; ++i)
            if (m & (1ull << (n - 1 - i))) w[i] = '1';
        out.push_back(std::move(w));
    }
    return out;
}

RotationGraph build_schreier(int n, int level_cap) {
    if (n < 1 || n > level_cap)
        throw std::out_of_range("level " + std::to_string(n) + " outside [1, " +
                                std::to_string(level_cap) + "]");
    RotationGraph g(all_words(n), {gen_name(Gen::a), gen_name(Gen::a_inv),
                                   gen_name(Gen::b), gen_name(Gen::b_inv)});
    for (const std::string& v : g.vertices()) {
        for (Gen s : {Gen::a, Gen::b}) {
            std::string w = act(s, v);
            // pairing (v,s) <-> (s(v), s^-1); each edge set once from its s side
            g.pair(v, gen_name(s), w, gen_name(inverse(s)));
        }
    }
    g.finalize();
    return g;
}

SuffixCheck suffix_distinct_check(int r, std::string_view v) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    check_word(v);
    std::string vs(v);
    if (act(Gen::a, vs) == vs) return SuffixCheck::vacuous;
    std::string padded = std::string(r, '0') + vs;
    std::string sa = act(Gen::a, padded).substr(r);
    std::string sb = act(Gen::b, padded).substr(r);
    return (sa != vs && sb != vs) ? SuffixCheck::distinct : SuffixCheck::not_distinct;
}

}  // namespace zg
