#include "zetagraph/covering.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "zetagraph/products.hpp"

namespace zg {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> hit(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || hit[v])
            throw std::invalid_argument("permutation images are not a bijection");
        hit[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

BigInt Permutation::order() const {
    BigInt ord(1);
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            ++len;
        }
        BigInt l(len);
        ord = ord * l / gcd(ord, l);
    }
    return ord;
}

std::string Permutation::cycle_string() const {
    std::ostringstream os;
    std::vector<char> seen(img_.size(), 0);
    bool any = false;
    for (int i = 0; i < size(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = 1;
            continue;
        }
        os << "(";
        bool first = true;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            os << (first ? "" : " ") << (j + 1);
            first = false;
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "(1)";
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("composing permutations of unequal size");
    std::vector<int> img(p.size());
    for (int i = 0; i < p.size(); ++i) img[i] = p(q(i));
    return Permutation(std::move(img));
}

CoverSpec::CoverSpec(RotationGraph cover, RotationGraph base,
                     std::map<std::string, std::string> proj,
                     std::vector<std::string> sheet_keys,
                     std::map<std::string, std::string> sheet_of,
                     std::vector<CutEdge> cut_edges)
    : cover_(std::move(cover)),
      base_(std::move(base)),
      proj_(std::move(proj)),
      sheet_keys_(std::move(sheet_keys)),
      cut_edges_(std::move(cut_edges)) {
    for (size_t i = 0; i < sheet_keys_.size(); ++i)
        if (!sheet_idx_.emplace(sheet_keys_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate sheet key " + sheet_keys_[i]);
    fiber_.assign(base_.vertex_count(), std::vector<int>(sheet_keys_.size(), -1));
    sheet_of_.assign(cover_.vertex_count(), -1);
    for (const auto& key : cover_.vertices()) {
        auto pit = proj_.find(key);
        if (pit == proj_.end()) throw std::invalid_argument("projection undefined at " + key);
        auto sit = sheet_of.find(key);
        if (sit == sheet_of.end()) throw std::invalid_argument("sheet undefined at " + key);
        int bi = base_.vertex_index(pit->second);
        auto sidx = sheet_idx_.find(sit->second);
        if (sidx == sheet_idx_.end())
            throw std::invalid_argument("unknown sheet key " + sit->second);
        int& slot = fiber_[bi][sidx->second];
        if (slot != -1)
            throw std::invalid_argument("sheet " + sit->second +
                                        " meets the fiber of " + pit->second + " twice");
        slot = cover_.vertex_index(key);
        sheet_of_[slot] = sidx->second;
    }
    for (int b = 0; b < base_.vertex_count(); ++b)
        for (size_t s = 0; s < sheet_keys_.size(); ++s)
            if (fiber_[b][s] == -1)
                throw std::invalid_argument("fiber of " + base_.vertex(b) +
                                            " misses sheet " + sheet_keys_[s]);
    for (const auto& e : cut_edges_) {
        base_.vertex_index(e.tail);
        base_.port_index(e.tail_port);
    }
}

const std::string& CoverSpec::project(const std::string& cover_key) const {
    return proj_.at(cover_key);
}

int CoverSpec::sheet_index(const std::string& cover_key) const {
    return sheet_of_[cover_.vertex_index(cover_key)];
}

const std::string& CoverSpec::fiber_vertex(const std::string& base_key, int sheet) const {
    return cover_.vertex(fiber_[base_.vertex_index(base_key)][sheet]);
}

std::vector<std::string> reference_sheet_order(int n) {
    switch (n) {
        case 1: return {"0", "1"};
        case 2: return {"11", "01", "00", "10"};
        case 3: return {"110", "010", "000", "100", "101", "001", "011", "111"};
        default: return all_words(n);
    }
}

namespace {

std::vector<std::string> sheet_order_or_default(const std::vector<std::string>& given, int n) {
    return given.empty() ? reference_sheet_order(n) : given;
}

}  // namespace

CoverSpec make_schreier_cover(int cover_n, int base_r,
                              const std::vector<std::string>& sheet_order, int level_cap) {
    if (base_r < 1 || cover_n <= base_r)
        throw std::invalid_argument("schreier cover needs cover level > base level >= 1");
    const int n = cover_n - base_r;
    RotationGraph cover = build_schreier(cover_n, level_cap);
    RotationGraph base = build_schreier(base_r, level_cap);
    std::map<std::string, std::string> proj, sheet_of;
    for (const auto& w : cover.vertices()) {
        proj[w] = w.substr(0, base_r);
        sheet_of[w] = w.substr(base_r);
    }
    const std::string u0(base_r, '0');
    std::vector<CutEdge> cuts{{"e_a", u0, "a"}, {"e_b", u0, "b"}};
    return CoverSpec(std::move(cover), std::move(base), std::move(proj),
                     sheet_order_or_default(sheet_order, n), std::move(sheet_of),
                     std::move(cuts));
}

CoverSpec make_zigzag_cover(int cover_n, int base_r,
                            const std::vector<std::string>& sheet_order, int level_cap) {
    if (base_r < 1 || cover_n <= base_r)
        throw std::invalid_argument("zig-zag cover needs cover level > base level >= 1");
    const int n = cover_n - base_r;
    RotationGraph cover = zigzag_c4(cover_n, level_cap);
    RotationGraph base = zigzag_c4(base_r, level_cap);
    std::map<std::string, std::string> proj, sheet_of;
    for (const auto& key : cover.vertices()) {
        auto [w, s] = split_product_key(key);
        proj[key] = product_key(w.substr(0, base_r), s);
        sheet_of[key] = w.substr(base_r);
    }
    const std::string u0(base_r, '0');
    // r even: heads sit at b(u0); r odd: at a(u0)
    const std::string head_word = act(base_r % 2 == 0 ? Gen::b : Gen::a, u0);
    std::vector<CutEdge> cuts;
    int idx = 1;
    for (const std::string& tail_letter : {std::string("a^-1"), std::string("b^-1")}) {
        for (const std::string& head_letter : {std::string("a"), std::string("b")}) {
            std::string tail = product_key(u0, tail_letter);
            std::string head = product_key(head_word, head_letter);
            int tv = base.vertex_index(tail);
            int found = -1;
            for (int p = 0; p < base.port_count(); ++p) {
                if (base.vertex(base.rot(tv, p).vertex) == head) {
                    if (found != -1)
                        throw std::logic_error("ambiguous cut edge " + tail + " -> " + head);
                    found = p;
                }
            }
            if (found == -1) throw std::logic_error("missing cut edge " + tail + " -> " + head);
            cuts.push_back({"e" + std::to_string(idx++), tail, base.port(found)});
        }
    }
    return CoverSpec(std::move(cover), std::move(base), std::move(proj),
                     sheet_order_or_default(sheet_order, n), std::move(sheet_of),
                     std::move(cuts));
}

CoverSpec make_identity_cover(const RotationGraph& g) {
    std::map<std::string, std::string> proj, sheet_of;
    for (const auto& v : g.vertices()) {
        proj[v] = v;
        sheet_of[v] = "1";
    }
    return CoverSpec(g, g, std::move(proj), {"1"}, std::move(sheet_of), {});
}

bool verify_covering(const CoverSpec& c) {
    for (const auto& x : c.cover().vertices()) {
        std::vector<std::string> projected;
        for (const auto& nb : c.cover().neighbors(x)) projected.push_back(c.project(nb));
        std::sort(projected.begin(), projected.end());
        if (projected != c.base().neighbors(c.project(x))) return false;
    }
    return true;
}

std::vector<std::pair<std::string, Permutation>> frobenius_permutations(const CoverSpec& c) {
    std::vector<std::pair<std::string, Permutation>> out;
    for (const auto& e : c.cut_edges()) {
        int p = c.base().port_index(e.tail_port);
        const std::string head =
            c.base().vertex(c.base().rot(c.base().vertex_index(e.tail), p).vertex);
        std::vector<int> img(c.sheet_count());
        std::vector<char> hit(c.sheet_count(), 0);
        for (int s = 0; s < c.sheet_count(); ++s) {
            const std::string& x = c.fiber_vertex(e.tail, s);
            HalfEdge lift = c.cover().rot(c.cover().vertex_index(x), p);
            const std::string& y = c.cover().vertex(lift.vertex);
            if (c.project(y) != head)
                throw std::logic_error("lift of " + e.name + " leaves the head fiber");
            int target = c.sheet_index(y);
            if (hit[target])
                throw std::logic_error("lifts of " + e.name +
                                       " are not a perfect matching between fibers");
            hit[target] = 1;
            img[s] = target;
        }
        out.emplace_back(e.name, Permutation(std::move(img)));
    }
    return out;
}

MonodromyOrder monodromy_order(std::span<const Permutation> generators, std::uint64_t cap) {
    if (generators.empty()) return {1, true};
    const int n = generators.front().size();
    for (const auto& g : generators)
        if (g.size() != n) throw std::invalid_argument("generators act on different point sets");
    std::set<Permutation> seen{Permutation::identity(n)};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier) {
            for (const auto& g : generators) {
                Permutation q = compose(g, p);
                if (seen.insert(q).second) {
                    if (seen.size() > cap) return {cap, false};
                    next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.size(), true};
}

bool is_normal(const CoverSpec& c) {
    auto frob = frobenius_permutations(c);
    std::vector<Permutation> gens;
    for (auto& [name, p] : frob) gens.push_back(std::move(p));
    MonodromyOrder m = monodromy_order(gens);
    if (!m.exact && m.order <= static_cast<std::uint64_t>(c.sheet_count()))
        throw std::runtime_error("monodromy closure hit the cap before a verdict");
    return m.exact && m.order == static_cast<std::uint64_t>(c.sheet_count());
}

bool verify_deck_map(const CoverSpec& c, const std::map<std::string, std::string>& sigma,
                     const BigInt& claimed_order) {
    if (verify_isomorphism(c.cover(), c.cover(), sigma, /*respect_ports=*/false) != IsoStatus::ok)
        return false;
    std::vector<int> img(c.cover().vertex_count());
    for (const auto& [from, to] : sigma) {
        if (c.project(to) != c.project(from)) return false;
        img[c.cover().vertex_index(from)] = c.cover().vertex_index(to);
    }
    return Permutation(std::move(img)).order() == claimed_order;
}

bool sheet_connectivity(const CoverSpec& c, const std::string& sheet_key) {
    int target = -1;
    for (int s = 0; s < c.sheet_count(); ++s)
        if (c.sheet_keys()[s] == sheet_key) target = s;
    if (target < 0) throw std::invalid_argument("unknown sheet " + sheet_key);
    std::vector<int> verts;
    std::vector<int> mark(c.cover().vertex_count(), 0);
    for (int b = 0; b < c.base().vertex_count(); ++b) {
        int v = c.cover().vertex_index(c.fiber_vertex(c.base().vertex(b), target));
        verts.push_back(v);
        mark[v] = 1;
    }
    if (verts.empty()) return true;
    std::vector<int> stack{verts.front()};
    mark[verts.front()] = 2;
    size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int p = 0; p < c.cover().port_count(); ++p) {
            int w = c.cover().rot(v, p).vertex;
            if (mark[w] == 1) {
                mark[w] = 2;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == verts.size();
}

namespace {

struct IsoSearch {
    const RotationGraph& g;
    const RotationGraph& h;
    std::vector<std::vector<int>> ga, ha;  // adjacency with loop-doubling
    std::vector<int> image;                // g vertex -> h vertex or -1
    std::vector<char> used;

    IsoSearch(const RotationGraph& g_, const RotationGraph& h_) : g(g_), h(h_) {
        auto counts = [](const RotationGraph& x) {
            std::vector<std::vector<int>> a(x.vertex_count(),
                                            std::vector<int>(x.vertex_count(), 0));
            for (int v = 0; v < x.vertex_count(); ++v)
                for (int p = 0; p < x.port_count(); ++p) ++a[v][x.rot(v, p).vertex];
            return a;
        };
        ga = counts(g);
        ha = counts(h);
        image.assign(g.vertex_count(), -1);
        used.assign(h.vertex_count(), 0);
    }

    bool extend(int v) {
        if (v == g.vertex_count()) return true;
        for (int w = 0; w < h.vertex_count(); ++w) {
            if (used[w] || ga[v][v] != ha[w][w]) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (ga[v][u] != ha[w][image[u]]) { ok = false; break; }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (extend(v + 1)) return true;
            image[v] = -1;
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::map<std::string, std::string>> find_isomorphism(const RotationGraph& g,
                                                                   const RotationGraph& h) {
    if (g.vertex_count() > 16 || h.vertex_count() > 16)
        throw std::length_error("brute-force isomorphism search is limited to 16 vertices");
    if (g.vertex_count() != h.vertex_count() || g.port_count() != h.port_count())
        return std::nullopt;
    IsoSearch search(g, h);
    if (!search.extend(0)) return std::nullopt;
    std::map<std::string, std::string> f;
    for (int v = 0; v < g.vertex_count(); ++v) f[g.vertex(v)] = h.vertex(search.image[v]);
    return f;
}

ConjectureProbe conjecture_probe(int base_level, int cover_level, int level_cap) {
    ConjectureProbe r;
    r.base_level = base_level;
    r.cover_level = cover_level;
    CoverSpec word_cover = make_schreier_cover(cover_level, base_level, {}, level_cap);
    CoverSpec zz_cover = make_zigzag_cover(cover_level, base_level, {}, level_cap);
    auto orders = [](const CoverSpec& c) {
        auto frob = frobenius_permutations(c);
        std::vector<Permutation> gens;
        for (auto& [name, p] : frob) gens.push_back(std::move(p));
        return monodromy_order(gens);
    };
    r.schreier_monodromy = orders(word_cover).order;
    r.zigzag_monodromy = orders(zz_cover).order;
    r.schreier_normal = is_normal(word_cover);
    r.zigzag_normal = is_normal(zz_cover);
    r.verdicts_agree = (r.schreier_normal == r.zigzag_normal);
    return r;
}

}  // namespace zg
