#include "ghostlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace ghostlab {
namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

Validation fail(std::string msg) { return {false, std::move(msg)}; }

}  // namespace

Validation validate(const GraphSpec& spec, bool require_stable, int min_genus) {
    if (spec.vertices.empty()) return fail("disconnected: graph has no vertices");
    std::map<std::string, int> index;
    for (const auto& v : spec.vertices) {
        if (v.id.empty()) return fail("malformed vertex: empty id");
        if (v.genus < 0) return fail("malformed vertex: " + v.id + " has negative genus");
        if (!index.emplace(v.id, static_cast<int>(index.size())).second)
            return fail("duplicate vertex id: " + v.id);
    }
    std::set<std::string> edge_ids;
    for (const auto& e : spec.edges) {
        if (e.id.empty()) return fail("malformed edge: empty id");
        if (!edge_ids.insert(e.id).second) return fail("duplicate edge id: " + e.id);
        for (const auto* end : {&e.tail, &e.head})
            if (!index.count(*end))
                return fail("dangling edge endpoint: edge " + e.id + " references unknown vertex " + *end);
    }
    DisjointSets sets(static_cast<int>(spec.vertices.size()));
    for (const auto& e : spec.edges) sets.unite(index[e.tail], index[e.head]);
    for (std::size_t v = 1; v < spec.vertices.size(); ++v)
        if (sets.find(static_cast<int>(v)) != sets.find(0))
            return fail("disconnected: vertex " + spec.vertices[v].id + " is not connected to " +
                        spec.vertices[0].id);
    if (!require_stable) return {};

    std::vector<int> valence(spec.vertices.size(), 0);
    for (const auto& e : spec.edges) {
        ++valence[index[e.tail]];
        ++valence[index[e.head]];
    }
    for (std::size_t v = 0; v < spec.vertices.size(); ++v) {
        const auto& vs = spec.vertices[v];
        if ((vs.genus == 0 && valence[v] < 3) || (vs.genus == 1 && valence[v] < 1))
            return fail("unstable vertex: " + vs.id + " (genus " + std::to_string(vs.genus) + ", valence " +
                        std::to_string(valence[v]) + ")");
    }
    int genus = static_cast<int>(spec.edges.size()) - static_cast<int>(spec.vertices.size()) + 1;
    for (const auto& v : spec.vertices) genus += v.genus;
    if (genus < min_genus)
        return fail("genus too small: total genus " + std::to_string(genus) + " < " + std::to_string(min_genus));
    return {};
}

Validation validate(const DualGraph& graph, bool require_stable, int min_genus) {
    return validate(graph.to_spec(), require_stable, min_genus);
}

DualGraph DualGraph::from_spec(const GraphSpec& spec) {
    if (auto check = validate(spec); !check) throw GraphError(check.error);
    std::map<std::string, int> index;
    std::vector<Vertex> vertices;
    for (const auto& v : spec.vertices) {
        index[v.id] = static_cast<int>(vertices.size());
        vertices.push_back({v.id, v.genus});
    }
    std::vector<Edge> edges;
    for (const auto& e : spec.edges) edges.push_back({e.id, index[e.tail], index[e.head]});
    return DualGraph(std::move(vertices), std::move(edges));
}

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), incident_(vertices_.size()) {
    const int n = vertex_count();
    if (n == 0) throw GraphError("disconnected: graph has no vertices");
    DisjointSets sets(n);
    for (int e = 0; e < edge_count(); ++e) {
        const auto& ed = edges_[e];
        if (ed.tail < 0 || ed.tail >= n || ed.head < 0 || ed.head >= n)
            throw GraphError("dangling edge endpoint: edge " + ed.id);
        incident_[ed.tail].push_back(e);
        if (ed.head != ed.tail) incident_[ed.head].push_back(e);
        sets.unite(ed.tail, ed.head);
    }
    for (int v = 1; v < n; ++v)
        if (sets.find(v) != sets.find(0))
            throw GraphError("disconnected: vertex " + vertices_[v].id + " is not connected to " + vertices_[0].id);
}

int DualGraph::valence(int v) const {
    int out = 0;
    for (int e : incident_.at(v)) out += is_loop(e) ? 2 : 1;
    return out;
}

int DualGraph::vertex_index(const std::string& id) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[v].id == id) return v;
    throw GraphError("unknown vertex id: " + id);
}

int DualGraph::edge_index(const std::string& id) const {
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].id == id) return e;
    throw GraphError("unknown edge id: " + id);
}

GraphSpec DualGraph::to_spec() const {
    GraphSpec spec;
    for (const auto& v : vertices_) spec.vertices.push_back({v.id, v.genus});
    for (const auto& e : edges_) spec.edges.push_back({e.id, vertices_[e.tail].id, vertices_[e.head].id});
    return spec;
}

int betti1(const DualGraph& graph) { return graph.edge_count() - graph.vertex_count() + 1; }

int vertex_genus_sum(const DualGraph& graph) {
    int g = 0;
    for (const auto& v : graph.vertices()) g += v.genus;
    return g;
}

int total_genus(const DualGraph& graph) { return vertex_genus_sum(graph) + betti1(graph); }

bool is_bouquet(const DualGraph& graph) { return graph.vertex_count() == 1; }

int component_count(const DualGraph& graph, std::span<const int> edges) {
    DisjointSets sets(graph.vertex_count());
    std::set<int> touched;
    int merges = 0;
    for (int e : edges) {
        const auto& ed = graph.edge(e);
        touched.insert(ed.tail);
        touched.insert(ed.head);
        if (sets.unite(ed.tail, ed.head)) ++merges;
    }
    return static_cast<int>(touched.size()) - merges;
}

int subgraph_betti1(const DualGraph& graph, std::span<const int> edges) {
    std::set<int> touched;
    for (int e : edges) {
        touched.insert(graph.edge(e).tail);
        touched.insert(graph.edge(e).head);
    }
    return static_cast<int>(edges.size()) - static_cast<int>(touched.size()) + component_count(graph, edges);
}

SpanningTree spanning_tree(const DualGraph& graph) {
    const int n = graph.vertex_count();
    SpanningTree tree;
    tree.root = 0;
    for (int v = 1; v < n; ++v)
        if (graph.vertex(v).id < graph.vertex(tree.root).id) tree.root = v;
    tree.parent.assign(n, -1);
    tree.parent_edge.assign(n, OrientedEdge{});
    tree.depth.assign(n, -1);
    tree.in_tree.assign(graph.edge_count(), false);

    std::deque<int> queue{tree.root};
    tree.depth[tree.root] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : graph.incident_edges(v)) {
            if (graph.is_loop(e)) continue;
            OrientedEdge out{e, graph.edge(e).tail != v};
            int w = graph.head(out);
            if (tree.depth[w] >= 0) continue;
            tree.depth[w] = tree.depth[v] + 1;
            tree.parent[w] = v;
            tree.parent_edge[w] = out;
            tree.in_tree[e] = true;
            queue.push_back(w);
        }
    }
    return tree;
}

namespace {

// Oriented tree path from `from` to `to`.
std::vector<OrientedEdge> tree_path(const SpanningTree& tree, int from, int to) {
    std::vector<OrientedEdge> up;    // from -> ancestor, oriented upward
    std::vector<OrientedEdge> down;  // ancestor -> to, collected bottom-up
    while (tree.depth[from] > tree.depth[to]) {
        up.push_back(tree.parent_edge[from].opposite());
        from = tree.parent[from];
    }
    while (tree.depth[to] > tree.depth[from]) {
        down.push_back(tree.parent_edge[to]);
        to = tree.parent[to];
    }
    while (from != to) {
        up.push_back(tree.parent_edge[from].opposite());
        from = tree.parent[from];
        down.push_back(tree.parent_edge[to]);
        to = tree.parent[to];
    }
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

}  // namespace

std::vector<Circuit> fundamental_circuits(const DualGraph& graph, const SpanningTree& tree) {
    std::vector<Circuit> out;
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (tree.in_tree[e]) continue;
        if (graph.is_loop(e)) {
            out.push_back({{OrientedEdge{e, false}}});
            continue;
        }
        Circuit c{tree_path(tree, graph.edge(e).tail, graph.edge(e).head)};
        c.edges.push_back(OrientedEdge{e, true});
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Circuit> fundamental_circuits(const DualGraph& graph) {
    return fundamental_circuits(graph, spanning_tree(graph));
}

std::vector<int> Cut::edge_values(const DualGraph& graph) const {
    std::vector<int> out(graph.edge_count(), 0);
    for (int e = 0; e < graph.edge_count(); ++e) {
        bool t = side[graph.edge(e).tail], h = side[graph.edge(e).head];
        if (t && !h) out[e] = 1;
        if (!t && h) out[e] = -1;
    }
    return out;
}

std::vector<Cut> cuts_basis(const DualGraph& graph) {
    int root = spanning_tree(graph).root;
    std::vector<Cut> out;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (v == root) continue;
        Cut c{std::vector<bool>(graph.vertex_count(), false)};
        c.side[v] = true;
        out.push_back(std::move(c));
    }
    return out;
}

Contraction contract(const DualGraph& graph, std::span<const int> edges) {
    const int n = graph.vertex_count();
    std::vector<bool> contracted(graph.edge_count(), false);
    for (int e : edges) {
        if (e < 0 || e >= graph.edge_count()) throw GraphError("unknown edge index " + std::to_string(e));
        contracted[e] = true;
    }
    DisjointSets sets(n);
    for (int e = 0; e < graph.edge_count(); ++e)
        if (contracted[e]) sets.unite(graph.edge(e).tail, graph.edge(e).head);

    Contraction out{{}, DualGraph({{"_", 0}}, {}), std::vector<int>(n, -1), {}};
    std::vector<int> rep_to_new(n, -1);
    std::vector<Vertex> vertices;
    for (int v = 0; v < n; ++v) {
        int rep = sets.find(v);
        if (rep_to_new[rep] < 0) {
            rep_to_new[rep] = static_cast<int>(vertices.size());
            vertices.push_back({graph.vertex(v).id, 0});
        } else {
            vertices[rep_to_new[rep]].id += "+" + graph.vertex(v).id;
        }
        out.vertex_map[v] = rep_to_new[rep];
        vertices[rep_to_new[rep]].genus += graph.vertex(v).genus;
    }
    // Loop rank of each merged piece feeds into the quotient vertex genus.
    std::vector<int> piece_edges(vertices.size(), 0), piece_vertices(vertices.size(), 0);
    for (int v = 0; v < n; ++v) ++piece_vertices[out.vertex_map[v]];
    std::vector<Edge> quotient_edges;
    for (int e = 0; e < graph.edge_count(); ++e) {
        const auto& ed = graph.edge(e);
        if (contracted[e]) {
            out.contracted.push_back(e);
            ++piece_edges[out.vertex_map[ed.tail]];
            continue;
        }
        out.edge_map.push_back(e);
        quotient_edges.push_back({ed.id, out.vertex_map[ed.tail], out.vertex_map[ed.head]});
    }
    for (std::size_t q = 0; q < vertices.size(); ++q) vertices[q].genus += piece_edges[q] - piece_vertices[q] + 1;
    out.quotient = DualGraph(std::move(vertices), std::move(quotient_edges));
    return out;
}

Contraction contract_ids(const DualGraph& graph, const std::vector<std::string>& edge_ids) {
    std::vector<int> edges;
    for (const auto& id : edge_ids) edges.push_back(graph.edge_index(id));
    return contract(graph, edges);
}

Contraction compose(const DualGraph& source, const Contraction& first, const Contraction& second) {
    std::vector<int> edges = first.contracted;
    for (int e : second.contracted) edges.push_back(first.edge_map.at(e));
    return contract(source, edges);
}

}  // namespace ghostlab
