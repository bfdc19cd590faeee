#include "ghostlab/multigraphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ghostlab {

EdgeList canonical_form(int vertex_count, const EdgeList& edges) {
    std::vector<int> perm(vertex_count);
    std::iota(perm.begin(), perm.end(), 0);
    EdgeList best;
    bool first = true;
    EdgeList relabeled(edges.size());
    do {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            int a = perm[edges[i].first], b = perm[edges[i].second];
            relabeled[i] = {std::min(a, b), std::max(a, b)};
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (first || relabeled < best) {
            best = relabeled;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

bool connected(int n, const EdgeList& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n;
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components == 1;
}

DualGraph build(int n, const EdgeList& edges) {
    std::vector<Vertex> vertices;
    for (int v = 0; v < n; ++v) vertices.push_back({"v" + std::to_string(v + 1), 0});
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        out.push_back({"e" + std::to_string(i + 1), edges[i].first, edges[i].second});
    return DualGraph(std::move(vertices), std::move(out));
}

}  // namespace

std::vector<DualGraph> connected_multigraphs(int max_vertices, int max_edges) {
    std::vector<DualGraph> out;
    for (int n = 1; n <= max_vertices; ++n) {
        EdgeList pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
        for (int m = std::max(0, n - 1); m <= max_edges; ++m) {
            std::set<EdgeList> seen;
            // Multisets of size m from `pairs` as non-decreasing index sequences.
            std::vector<std::size_t> idx(m, 0);
            for (;;) {
                EdgeList edges;
                for (auto i : idx) edges.push_back(pairs[i]);
                if (connected(n, edges)) seen.insert(canonical_form(n, edges));
                int pos = m - 1;
                while (pos >= 0 && idx[pos] + 1 == pairs.size()) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int k = pos + 1; k < m; ++k) idx[k] = idx[pos];
            }
            for (const auto& edges : seen) out.push_back(build(n, edges));
        }
    }
    return out;
}

}  // namespace ghostlab
