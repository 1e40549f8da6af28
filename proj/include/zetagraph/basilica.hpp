#pragma once

#include <span>
#include <string>
#include <string_view>

#include "zetagraph/graph.hpp"

namespace zg {

// Generators of the Basilica group and their inverses. Action on binary
// words, first letter consumed first:
//   a(0w) = 0 b(w)   a(1w) = 1w
//   b(0w) = 1 a(w)   b(1w) = 0w
// with the inverse recursions obtained by inverting these rules.
enum class Gen { a, a_inv, b, b_inv };

Gen inverse(Gen g);
const std::string& gen_name(Gen g);       // "a", "a^-1", "b", "b^-1"
Gen gen_from_name(std::string_view name);

// Maximum word length accepted by default; keeps every product of two levels
// within exact-arithmetic reach. Override per call (or ZETAGRAPH_CAP in the CLI).
inline constexpr int kDefaultLevelCap = 12;

std::string act(Gen g, std::string_view word);
// First listed generator acts first.
std::string act_sequence(std::span<const Gen> gens, std::string_view word);

// Schreier graph of the level-n action: vertices X^n, ports a,a^-1,b,b^-1,
// rot(v,s) = (s(v), s^-1); a-fixed words produce loops pairing (v,a)<->(v,a^-1).
RotationGraph build_schreier(int n, int level_cap = kDefaultLevelCap);

std::vector<std::string> all_words(int n);

enum class SuffixCheck { distinct, not_distinct, vacuous };

// True iff the last |v| letters of a(0^r v) and of b(0^r v) both differ from v;
// vacuous when a fixes v (the property needs that hypothesis: for a-fixed v the
// b suffix can reproduce v).
SuffixCheck suffix_distinct_check(int r, std::string_view v);

// Boolean view: vacuous counts as satisfied.
inline bool suffix_check_passes(SuffixCheck c) { return c != SuffixCheck::not_distinct; }

}  // namespace zg
