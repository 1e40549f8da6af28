#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zetagraph/matrix.hpp"

namespace zg {

struct HalfEdge {
    int vertex = -1;
    int port = -1;
    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

// Port-labeled multigraph encoded as an involution on half-edges (vertex, port).
// Loops pair two distinct half-edges at the same vertex; the involution never
// fixes a half-edge. All graphs here carry the same port alphabet at every
// vertex, so degree(v) == number of ports.
class RotationGraph {
public:
    RotationGraph() = default;
    RotationGraph(std::vector<std::string> vertices, std::vector<std::string> ports);

    // Pairs (v,p) <-> (w,q). Both slots must be unset; self-pairing rejected.
    void pair(const std::string& v, const std::string& p,
              const std::string& w, const std::string& q);
    void pair(int v, int p, int w, int q);

    // Involution must be total with no fixed points; throws otherwise.
    void finalize();
    bool finalized() const { return finalized_; }

    // Raw table access for negative-control tests; skips all validation.
    static RotationGraph unchecked(std::vector<std::string> vertices,
                                   std::vector<std::string> ports,
                                   std::vector<int> rot_table);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int port_count() const { return static_cast<int>(ports_.size()); }
    long edge_count() const { return static_cast<long>(vertices_.size()) * ports_.size() / 2; }
    int degree(int) const { return port_count(); }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::string>& ports() const { return ports_; }
    const std::string& vertex(int i) const { return vertices_[i]; }
    const std::string& port(int i) const { return ports_[i]; }
    int vertex_index(const std::string& key) const;
    int port_index(const std::string& name) const;
    bool has_vertex(const std::string& key) const { return vindex_.count(key) > 0; }

    HalfEdge rot(int v, int p) const;
    HalfEdge rot(const HalfEdge& h) const { return rot(h.vertex, h.port); }

    // rot(rot(h)) == h with no fixed point, over every half-edge.
    bool involution_ok() const;

    bool is_connected() const;

    // Endpoint multiset of all ports at v, sorted by vertex key.
    std::vector<std::string> neighbors(const std::string& v) const;

private:
    std::vector<std::string> vertices_;
    std::vector<std::string> ports_;
    std::unordered_map<std::string, int> vindex_;
    std::unordered_map<std::string, int> pindex_;
    std::vector<int> rot_;  // half-edge id v*P+p -> partner id; -1 unset
    bool finalized_ = false;
    int he(int v, int p) const { return v * port_count() + p; }
};

// Bijection vertex key -> row index, the explicit parameter behind every matrix.
class VertexOrder {
public:
    VertexOrder() = default;
    explicit VertexOrder(std::vector<std::string> keys);
    static VertexOrder lexicographic(const RotationGraph& g);

    int size() const { return static_cast<int>(keys_.size()); }
    const std::string& key(int i) const { return keys_[i]; }
    const std::vector<std::string>& keys() const { return keys_; }
    int index_of(const std::string& key) const;
    bool covers(const RotationGraph& g) const;

private:
    std::vector<std::string> keys_;
    std::unordered_map<std::string, int> pos_;
};

// Entry (u,v), u != v: number of edges between them; diagonal: 2 x loops.
IntMatrix adjacency_matrix(const RotationGraph& g, const VertexOrder& order);

enum class IsoStatus { ok, not_bijective, adjacency_mismatch, port_mismatch };

// f maps G-vertex keys to H-vertex keys. With respect_ports the rotation map
// itself must be preserved under port_map (identity-by-name when empty).
IsoStatus verify_isomorphism(const RotationGraph& g, const RotationGraph& h,
                             const std::map<std::string, std::string>& f,
                             bool respect_ports,
                             const std::map<std::string, std::string>& port_map = {});

std::string export_dot(const RotationGraph& g);

// {"vertices": [...], "ports": {vertex: [...]}, "rot": [[[v,p],[w,q]], ...]}
// with each involution pair listed once, lexicographically sorted.
std::string graph_to_json(const RotationGraph& g);
RotationGraph graph_from_json(const std::string& text);

}  // namespace zg
