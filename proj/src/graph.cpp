#include "zetagraph/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace zg {

RotationGraph::RotationGraph(std::vector<std::string> vertices, std::vector<std::string> ports)
    : vertices_(std::move(vertices)), ports_(std::move(ports)) {
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (!vindex_.emplace(vertices_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate vertex key: " + vertices_[i]);
    }
    for (size_t i = 0; i < ports_.size(); ++i) {
        if (!pindex_.emplace(ports_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate port name: " + ports_[i]);
    }
    rot_.assign(vertices_.size() * ports_.size(), -1);
}

int RotationGraph::vertex_index(const std::string& key) const {
    auto it = vindex_.find(key);
    if (it == vindex_.end()) throw std::out_of_range("unknown vertex: " + key);
    return it->second;
}

int RotationGraph::port_index(const std::string& name) const {
    auto it = pindex_.find(name);
    if (it == pindex_.end()) throw std::out_of_range("unknown port: " + name);
    return it->second;
}

void RotationGraph::pair(int v, int p, int w, int q) {
    int h1 = he(v, p), h2 = he(w, q);
    if (h1 == h2) throw std::invalid_argument("half-edge cannot pair with itself");
    if (rot_[h1] != -1 || rot_[h2] != -1)
        throw std::invalid_argument("half-edge already paired");
    rot_[h1] = h2;
    rot_[h2] = h1;
}

void RotationGraph::pair(const std::string& v, const std::string& p,
                         const std::string& w, const std::string& q) {
    pair(vertex_index(v), port_index(p), vertex_index(w), port_index(q));
}

void RotationGraph::finalize() {
    for (size_t h = 0; h < rot_.size(); ++h)
        if (rot_[h] == -1)
            throw std::logic_error("rotation map not total at (" +
                                   vertices_[h / port_count()] + ", " +
                                   ports_[h % port_count()] + ")");
    if (!involution_ok()) throw std::logic_error("rotation map is not a fixed-point-free involution");
    finalized_ = true;
}

RotationGraph RotationGraph::unchecked(std::vector<std::string> vertices,
                                       std::vector<std::string> ports,
                                       std::vector<int> rot_table) {
    RotationGraph g(std::move(vertices), std::move(ports));
    g.rot_ = std::move(rot_table);
    g.finalized_ = true;
    return g;
}

HalfEdge RotationGraph::rot(int v, int p) const {
    int h = rot_[he(v, p)];
    if (h < 0) throw std::logic_error("rotation map unset");
    return HalfEdge{h / port_count(), h % port_count()};
}

bool RotationGraph::involution_ok() const {
    for (size_t h = 0; h < rot_.size(); ++h) {
        int k = rot_[h];
        if (k < 0 || k >= static_cast<int>(rot_.size())) return false;
        if (k == static_cast<int>(h)) return false;
        if (rot_[k] != static_cast<int>(h)) return false;
    }
    return true;
}

bool RotationGraph::is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t found = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int p = 0; p < port_count(); ++p) {
            int w = rot(v, p).vertex;
            if (!seen[w]) {
                seen[w] = 1;
                ++found;
                stack.push_back(w);
            }
        }
    }
    return found == vertices_.size();
}

std::vector<std::string> RotationGraph::neighbors(const std::string& v) const {
    int vi = vertex_index(v);
    std::vector<std::string> out;
    out.reserve(port_count());
    for (int p = 0; p < port_count(); ++p) out.push_back(vertices_[rot(vi, p).vertex]);
    std::sort(out.begin(), out.end());
    return out;
}

VertexOrder::VertexOrder(std::vector<std::string> keys) : keys_(std::move(keys)) {
    for (size_t i = 0; i < keys_.size(); ++i)
        if (!pos_.emplace(keys_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate key in vertex order: " + keys_[i]);
}

VertexOrder VertexOrder::lexicographic(const RotationGraph& g) {
    std::vector<std::string> keys = g.vertices();
    std::sort(keys.begin(), keys.end());
    return VertexOrder(std::move(keys));
}

int VertexOrder::index_of(const std::string& key) const {
    auto it = pos_.find(key);
    if (it == pos_.end()) throw std::out_of_range("vertex not in order: " + key);
    return it->second;
}

bool VertexOrder::covers(const RotationGraph& g) const {
    if (size() != g.vertex_count()) return false;
    for (const auto& v : g.vertices())
        if (!pos_.count(v)) return false;
    return true;
}

IntMatrix adjacency_matrix(const RotationGraph& g, const VertexOrder& order) {
    if (!order.covers(g)) throw std::invalid_argument("vertex order does not cover the graph");
    const int n = g.vertex_count();
    IntMatrix a(n, n, BigInt(0));
    for (int v = 0; v < n; ++v) {
        int i = order.index_of(g.vertex(v));
        for (int p = 0; p < g.port_count(); ++p) {
            int j = order.index_of(g.vertex(g.rot(v, p).vertex));
            a.at(i, j) += 1;  // each loop contributes twice via its two half-edges
        }
    }
    return a;
}

namespace {

// Edge multiset keyed by unordered endpoint pair.
std::map<std::pair<int, int>, int> edge_multiset(const RotationGraph& g) {
    std::map<std::pair<int, int>, int> m;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int p = 0; p < g.port_count(); ++p) {
            int w = g.rot(v, p).vertex;
            if (v <= w) m[{v, w}] += 1;
        }
    // loops were counted twice (both half-edges at the same vertex)
    for (auto& [k, c] : m)
        if (k.first == k.second) c /= 2;
    return m;
}

}  // namespace

IsoStatus verify_isomorphism(const RotationGraph& g, const RotationGraph& h,
                             const std::map<std::string, std::string>& f,
                             bool respect_ports,
                             const std::map<std::string, std::string>& port_map) {
    if (static_cast<int>(f.size()) != g.vertex_count() ||
        g.vertex_count() != h.vertex_count())
        return IsoStatus::not_bijective;
    std::vector<int> image(g.vertex_count(), -1);
    std::vector<char> hit(h.vertex_count(), 0);
    for (const auto& [from, to] : f) {
        if (!g.has_vertex(from) || !h.has_vertex(to)) return IsoStatus::not_bijective;
        int ti = h.vertex_index(to);
        if (hit[ti]) return IsoStatus::not_bijective;
        hit[ti] = 1;
        image[g.vertex_index(from)] = ti;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (image[v] < 0) return IsoStatus::not_bijective;

    if (respect_ports) {
        if (g.port_count() != h.port_count()) return IsoStatus::port_mismatch;
        std::vector<int> pmap(g.port_count());
        for (int p = 0; p < g.port_count(); ++p) {
            const std::string& name = g.port(p);
            auto it = port_map.find(name);
            const std::string& target = (it == port_map.end()) ? name : it->second;
            pmap[p] = h.port_index(target);
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int p = 0; p < g.port_count(); ++p) {
                HalfEdge e = g.rot(v, p);
                HalfEdge e2 = h.rot(image[v], pmap[p]);
                if (e2.vertex != image[e.vertex] || e2.port != pmap[e.port])
                    return IsoStatus::port_mismatch;
            }
        return IsoStatus::ok;
    }

    auto ge = edge_multiset(g);
    auto hedges = edge_multiset(h);
    std::map<std::pair<int, int>, int> mapped;
    for (const auto& [k, c] : ge) {
        int a = image[k.first], b = image[k.second];
        mapped[{std::min(a, b), std::max(a, b)}] += c;
    }
    return mapped == hedges ? IsoStatus::ok : IsoStatus::adjacency_mismatch;
}

namespace {

// Involution pairs, each listed once, sorted by ((v,p),(w,q)) key strings.
std::vector<std::pair<HalfEdge, HalfEdge>> sorted_pairs(const RotationGraph& g) {
    std::vector<std::pair<HalfEdge, HalfEdge>> pairs;
    auto key = [&](const HalfEdge& h) {
        return std::pair<std::string, std::string>(g.vertex(h.vertex), g.port(h.port));
    };
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int p = 0; p < g.port_count(); ++p) {
            HalfEdge a{v, p}, b = g.rot(v, p);
            if (key(a) <= key(b)) pairs.emplace_back(a, b);
        }
    std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
        return std::make_pair(key(x.first), key(x.second)) <
               std::make_pair(key(y.first), key(y.second));
    });
    return pairs;
}

}  // namespace

std::string export_dot(const RotationGraph& g) {
    std::ostringstream os;
    os << "graph {\n";
    for (const auto& v : g.vertices()) os << "  \"" << v << "\";\n";
    for (const auto& [a, b] : sorted_pairs(g)) {
        os << "  \"" << g.vertex(a.vertex) << "\" -- \"" << g.vertex(b.vertex)
           << "\" [taillabel=\"" << g.port(a.port) << "\", headlabel=\"" << g.port(b.port)
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string graph_to_json(const RotationGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertices();
    nlohmann::ordered_json ports = nlohmann::ordered_json::object();
    for (const auto& v : g.vertices()) ports[v] = g.ports();
    j["ports"] = std::move(ports);
    nlohmann::ordered_json rot = nlohmann::ordered_json::array();
    for (const auto& [a, b] : sorted_pairs(g)) {
        auto lhs = nlohmann::ordered_json::array({g.vertex(a.vertex), g.port(a.port)});
        auto rhs = nlohmann::ordered_json::array({g.vertex(b.vertex), g.port(b.port)});
        rot.push_back(nlohmann::ordered_json::array({std::move(lhs), std::move(rhs)}));
    }
    j["rot"] = std::move(rot);
    return j.dump(2) + "\n";
}

RotationGraph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    if (vertices.empty()) throw std::invalid_argument("graph JSON: empty vertex list");
    std::vector<std::string> ports =
        j.at("ports").at(vertices.front()).get<std::vector<std::string>>();
    for (const auto& v : vertices) {
        auto pv = j.at("ports").at(v).get<std::vector<std::string>>();
        if (pv != ports)
            throw std::invalid_argument("graph JSON: non-uniform port alphabet at " + v);
    }
    RotationGraph g(vertices, ports);
    for (const auto& entry : j.at("rot")) {
        g.pair(entry.at(0).at(0).get<std::string>(), entry.at(0).at(1).get<std::string>(),
               entry.at(1).at(0).get<std::string>(), entry.at(1).at(1).get<std::string>());
    }
    g.finalize();
    return g;
}

}  // namespace zg
