#pragma once

#include "ghostlab/graph.hpp"

#include <utility>
#include <vector>

namespace ghostlab {

/// Unordered endpoint pairs (i <= j) on vertices 0..n-1, sorted.
using EdgeList = std::vector<std::pair<int, int>>;

/// Lexicographically least sorted edge list over all vertex relabelings.
EdgeList canonical_form(int vertex_count, const EdgeList& edges);

/// Every connected multigraph with loops, up to isomorphism, with
/// 1..max_vertices vertices and at most max_edges edges. Vertices are
/// named v1..vn with genus 0, edges e1..em oriented from lower to higher
/// vertex, in canonical labeling. Ordered by (vertices, edges, edge list).
std::vector<DualGraph> connected_multigraphs(int max_vertices, int max_edges);

}  // namespace ghostlab
