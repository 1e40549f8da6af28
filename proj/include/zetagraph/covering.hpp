#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zetagraph/basilica.hpp"
#include "zetagraph/graph.hpp"

namespace zg {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // 0-based, must be bijective
    static Permutation identity(int n);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }
    bool is_identity() const;
    Permutation inverse() const;
    BigInt order() const;
    //  "(2 3)(6 7)" with 1-based points, fixed points omitted, identity "(1)".
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

private:
    std::vector<int> img_;
};

// compose(p, q) applies q first: x -> p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

// A cut edge of the base, oriented tail -> head by the rotation label at the tail.
struct CutEdge {
    std::string name;
    std::string tail;
    std::string tail_port;
};

// Cover graph, base graph, projection, sheet partition and the cut-edge data
// behind the Frobenius permutations. Construction validates that proj is
// surjective with uniform fibers and that every sheet meets every fiber
// exactly once.
class CoverSpec {
public:
    CoverSpec(RotationGraph cover, RotationGraph base,
              std::map<std::string, std::string> proj,
              std::vector<std::string> sheet_keys,
              std::map<std::string, std::string> sheet_of,
              std::vector<CutEdge> cut_edges);

    const RotationGraph& cover() const { return cover_; }
    const RotationGraph& base() const { return base_; }
    const std::vector<std::string>& sheet_keys() const { return sheet_keys_; }
    int sheet_count() const { return static_cast<int>(sheet_keys_.size()); }
    const std::vector<CutEdge>& cut_edges() const { return cut_edges_; }

    const std::string& project(const std::string& cover_key) const;
    int sheet_index(const std::string& cover_key) const;
    // The unique vertex of base_key's fiber lying on the given sheet.
    const std::string& fiber_vertex(const std::string& base_key, int sheet) const;

private:
    RotationGraph cover_, base_;
    std::map<std::string, std::string> proj_;
    std::vector<std::string> sheet_keys_;
    std::map<std::string, int> sheet_idx_;
    std::vector<CutEdge> cut_edges_;
    std::vector<int> sheet_of_;            // cover vertex -> sheet
    std::vector<std::vector<int>> fiber_;  // [base vertex][sheet] -> cover vertex
};

// Reference sheet orders for small levels (lexicographic beyond).
std::vector<std::string> reference_sheet_order(int n);

// Schreier cover: level cover_n over level base_r, proj = first base_r letters,
// sheets keyed by the trailing word, cut edges e_a, e_b at 0^base_r.
CoverSpec make_schreier_cover(int cover_n, int base_r,
                              const std::vector<std::string>& sheet_order = {},
                              int level_cap = kDefaultLevelCap);

// Zig-zag cover: level cover_n x C4 over level base_r x C4, cut edges e1..e4.
CoverSpec make_zigzag_cover(int cover_n, int base_r,
                            const std::vector<std::string>& sheet_order = {},
                            int level_cap = kDefaultLevelCap);

CoverSpec make_identity_cover(const RotationGraph& g);

// Unramified covering test: proj restricted to each neighbor multiset is a
// multiset bijection onto the base neighbor multiset.
bool verify_covering(const CoverSpec& c);

// Sheet permutation of each cut edge: sheet i -> sheet of the lift head taken
// at the tail's fiber vertex on sheet i. Throws if the lifts fail to match
// fibers perfectly.
std::vector<std::pair<std::string, Permutation>> frobenius_permutations(const CoverSpec& c);

struct MonodromyOrder {
    std::uint64_t order = 0;
    bool exact = true;  // false: BFS closure hit the cap, order is a lower bound
};

MonodromyOrder monodromy_order(std::span<const Permutation> generators,
                               std::uint64_t cap = 1'000'000);

// Normal iff the group generated by the Frobenius permutations acts regularly,
// i.e. its order equals the sheet count.
bool is_normal(const CoverSpec& c);

// sigma must be a graph automorphism of the cover, satisfy proj o sigma = proj,
// and have exactly the claimed order.
bool verify_deck_map(const CoverSpec& c, const std::map<std::string, std::string>& sigma,
                     const BigInt& claimed_order);

// Connectivity of the restriction of the cover to one sheet's vertex set.
bool sheet_connectivity(const CoverSpec& c, const std::string& sheet_key);

struct ConjectureProbe {
    int base_level = 0;
    int cover_level = 0;
    bool schreier_normal = false;
    bool zigzag_normal = false;
    std::uint64_t schreier_monodromy = 0;
    std::uint64_t zigzag_monodromy = 0;
    bool verdicts_agree = false;
};

// Empirical comparison of normality across the two constructions; no proof claim.
ConjectureProbe conjecture_probe(int base_level, int cover_level,
                                 int level_cap = kDefaultLevelCap);

// Brute-force adjacency-preserving bijection search, small graphs only
// (<= 16 vertices). Returns an empty optional when none exists.
std::optional<std::map<std::string, std::string>> find_isomorphism(const RotationGraph& g,
                                                                   const RotationGraph& h);

}  // namespace zg
