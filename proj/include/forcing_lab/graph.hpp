#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "forcing_lab/error.hpp"
#include "forcing_lab/finite_tree.hpp"

namespace forcing_lab {

using VertexSet = std::set<int>;

/// Unordered pair, possibly degenerate ({x} stored as (x,x)). Canonical
/// ordering keeps serialization stable.
struct VertexPair {
  int a = 0;
  int b = 0;

  VertexPair(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}
  bool degenerate() const { return a == b; }
  auto operator<=>(const VertexPair&) const = default;
};

using PairSet = std::set<VertexPair>;

/// Loop-free undirected graph over explicit vertices. Degenerate pairs enter
/// only through pair-source semantics, never as stored edges.
class Graph {
 public:
  Graph() = default;
  Graph(VertexSet vertices, std::set<VertexPair> edges);

  const VertexSet& vertices() const { return vertices_; }
  const std::set<VertexPair>& edges() const { return edges_; }
  const std::map<int, VertexSet>& adjacency() const { return adjacency_; }

  bool has_vertex(int v) const { return vertices_.count(v) != 0; }
  bool has_edge(int x, int y) const { return edges_.count(VertexPair(x, y)) != 0; }

  Graph with_edge(int x, int y) const;
  Graph with_vertex(int v) const;

  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  VertexSet vertices_;
  std::set<VertexPair> edges_;
  std::map<int, VertexSet> adjacency_;
};

/// True iff the graph is bipartite, i.e. every finite subgraph is
/// 2-colorable.
bool is_locally_2_colorable(const Graph& g);

/// Component and parity labels from a breadth-first traversal (component id
/// is the least vertex of the component). Only defined for bipartite graphs.
struct ParityLabels {
  std::map<int, int> component;
  std::map<int, int> parity;
};
ParityLabels parity_labels(const Graph& g);

/// All pairs over the universe joined by an odd-length walk, degenerate {x}
/// included when x lies on an odd closed walk. Computed by doubling each
/// vertex into an even and an odd copy.
PairSet odd_pairs(const Graph& g, const VertexSet& universe);

/// Odd pairs of the graph whose edge set is A0 x A1; shared vertices behave
/// as loops, so {x} is present for every x in both sets.
PairSet odd_pairs_biclique(const VertexSet& a0, const VertexSet& a1);

/// Odd pairs of the truncated tail square ((x, cap])^2.
PairSet odd_pairs_tail_square(int x, int cap);

/// H is k-homogeneous when every bounded vertex subset induces a subgraph
/// k-colorable with H colored 0. On bipartite graphs with k = 2 this reduces
/// to H meeting no odd pair; otherwise subsets up to subset_bound are checked
/// exhaustively (bounds past 6 are refused).
bool is_k_homogeneous(const Graph& g, const VertexSet& h, int k, int subset_bound = 6);

/// True iff for some color c the nodes whose entries agree with c on every
/// position in H reach every length up to `depth`.
bool rwkl_homogeneous(const FiniteTree& t, const VertexSet& h, int depth);

}  // namespace forcing_lab
