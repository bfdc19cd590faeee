#pragma once

#include "ghostlab/modular.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace ghostlab {

class GraphError : public Error {
public:
    using Error::Error;
};

// String-level description, as read from a file. DualGraph is built from it.
struct VertexSpec {
    std::string id;
    int genus = 0;
    friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

struct EdgeSpec {
    std::string id;
    std::string tail;
    std::string head;
    friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct GraphSpec {
    std::vector<VertexSpec> vertices;
    std::vector<EdgeSpec> edges;
    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct Validation {
    bool ok = true;
    std::string error;  // empty when ok

    explicit operator bool() const { return ok; }
};

/// Checks well-formedness and connectivity; with `require_stable` also
/// the stability condition at every vertex and total genus >= min_genus.
Validation validate(const GraphSpec& spec, bool require_stable = false, int min_genus = 0);

/// One of the two orientations of an edge. `reversed == false` is the
/// stored tail -> head orientation.
struct OrientedEdge {
    int edge = 0;
    bool reversed = false;

    OrientedEdge opposite() const { return {edge, !reversed}; }
    friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

struct Vertex {
    std::string id;
    int genus = 0;
};

struct Edge {
    std::string id;
    int tail = 0;
    int head = 0;
};

/// Connected multigraph with loops, vertex genera and a stored orientation
/// per edge. Immutable after construction.
class DualGraph {
public:
    /// Throws GraphError unless the spec is well-formed and connected.
    static DualGraph from_spec(const GraphSpec& spec);

    DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Vertex& vertex(int v) const { return vertices_.at(v); }
    const Edge& edge(int e) const { return edges_.at(e); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    int head(OrientedEdge e) const { return e.reversed ? edges_[e.edge].tail : edges_[e.edge].head; }
    int tail(OrientedEdge e) const { return e.reversed ? edges_[e.edge].head : edges_[e.edge].tail; }
    bool is_loop(int e) const { return edges_[e].tail == edges_[e].head; }

    /// Loops count twice.
    int valence(int v) const;

    /// Edge indices touching v, ascending, loops listed once.
    const std::vector<int>& incident_edges(int v) const { return incident_.at(v); }

    int vertex_index(const std::string& id) const;  // throws GraphError
    int edge_index(const std::string& id) const;    // throws GraphError

    GraphSpec to_spec() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

Validation validate(const DualGraph& graph, bool require_stable = false, int min_genus = 0);

int betti1(const DualGraph& graph);
int total_genus(const DualGraph& graph);
/// Sum of vertex genera.
int vertex_genus_sum(const DualGraph& graph);
bool is_bouquet(const DualGraph& graph);

/// Number of connected components of (vertices touched by `edges`, `edges`).
int component_count(const DualGraph& graph, std::span<const int> edges);

/// First Betti number of the subgraph spanned by `edges` and their end
/// vertices, summed over its connected pieces.
int subgraph_betti1(const DualGraph& graph, std::span<const int> edges);

/// Breadth-first spanning tree rooted at the lexicographically least vertex id.
struct SpanningTree {
    int root = 0;
    std::vector<int> parent;                // -1 at the root
    std::vector<OrientedEdge> parent_edge;  // oriented parent -> vertex
    std::vector<int> depth;
    std::vector<bool> in_tree;              // per edge
};

SpanningTree spanning_tree(const DualGraph& graph);

/// Oriented edge walk e_0..e_{n-1}, head(e_i) == tail(e_{i+1}) cyclically.
struct Circuit {
    std::vector<OrientedEdge> edges;
};

/// One circuit per non-tree edge, in edge order: the tree path from the
/// edge's tail to its head followed by the edge reversed. Loops give the
/// length-one circuit traversing the loop forwards.
std::vector<Circuit> fundamental_circuits(const DualGraph& graph);
std::vector<Circuit> fundamental_circuits(const DualGraph& graph, const SpanningTree& tree);

/// Proper nonempty vertex subset W. Its edge function is +1 on edges
/// leaving W, -1 on edges entering W, 0 elsewhere.
struct Cut {
    std::vector<bool> side;  // membership in W, per vertex

    /// +1 / -1 / 0 on the stored orientation of every edge.
    std::vector<int> edge_values(const DualGraph& graph) const;
};

/// W = {v} for every vertex except the spanning-tree root, in vertex order.
std::vector<Cut> cuts_basis(const DualGraph& graph);

struct Contraction {
    std::vector<int> contracted;  // source edge indices, ascending
    DualGraph quotient;
    std::vector<int> vertex_map;  // source vertex -> quotient vertex
    std::vector<int> edge_map;    // quotient edge -> source edge
};

/// Contracts the given edges. Quotient vertices are ordered by their least
/// source vertex, named by joining member ids with '+', and carry the genus
/// of the merged piece (vertex genera plus loop rank). Edge ids are kept.
Contraction contract(const DualGraph& graph, std::span<const int> edges);
Contraction contract_ids(const DualGraph& graph, const std::vector<std::string>& edge_ids);

/// Contraction of `second` (edges of first.quotient) after `first`, expressed
/// as a single contraction of the source graph.
Contraction compose(const DualGraph& source, const Contraction& first, const Contraction& second);

}  // namespace ghostlab
