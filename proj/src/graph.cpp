#include "forcing_lab/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

namespace forcing_lab {

Graph::Graph(VertexSet vertices, std::set<VertexPair> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const VertexPair& e : edges_) {
    if (e.degenerate()) fail(ErrorCode::InvalidArgument, "self-loops are not stored as edges");
    if (!vertices_.count(e.a) || !vertices_.count(e.b)) {
      fail(ErrorCode::InvalidArgument, "edge references an undeclared vertex");
    }
    adjacency_[e.a].insert(e.b);
    adjacency_[e.b].insert(e.a);
  }
}

Graph Graph::with_edge(int x, int y) const {
  VertexSet v = vertices_;
  v.insert(x);
  v.insert(y);
  std::set<VertexPair> e = edges_;
  e.insert(VertexPair(x, y));
  return Graph(std::move(v), std::move(e));
}

Graph Graph::with_vertex(int v) const {
  VertexSet vs = vertices_;
  vs.insert(v);
  return Graph(std::move(vs), edges_);
}

bool is_locally_2_colorable(const Graph& g) {
  std::map<int, int> color;
  for (int start : g.vertices()) {
    if (color.count(start)) continue;
    color[start] = 0;
    std::deque<int> queue = {start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      auto it = g.adjacency().find(v);
      if (it == g.adjacency().end()) continue;
      for (int w : it->second) {
        auto found = color.find(w);
        if (found == color.end()) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (found->second == color[v]) {
          return false;  // odd cycle
        }
      }
    }
  }
  return true;
}

ParityLabels parity_labels(const Graph& g) {
  ParityLabels labels;
  for (int start : g.vertices()) {
    if (labels.component.count(start)) continue;
    labels.component[start] = start;
    labels.parity[start] = 0;
    std::deque<int> queue = {start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      auto it = g.adjacency().find(v);
      if (it == g.adjacency().end()) continue;
      for (int w : it->second) {
        if (!labels.component.count(w)) {
          labels.component[w] = start;
          labels.parity[w] = 1 - labels.parity[v];
          queue.push_back(w);
        }
      }
    }
  }
  return labels;
}

namespace {

// Reachability over the doubled graph (vertex, walk parity). `loops` lists
// vertices carrying an odd self-step.
std::map<std::pair<int, bool>, bool> parity_reach(const Graph& g, int start,
                                                  const VertexSet& loops) {
  std::map<std::pair<int, bool>, bool> seen;
  std::deque<std::pair<int, bool>> queue;
  seen[{start, false}] = true;
  queue.push_back({start, false});
  while (!queue.empty()) {
    auto [v, odd] = queue.front();
    queue.pop_front();
    auto push = [&](int w, bool parity) {
      if (!seen.count({w, parity})) {
        seen[{w, parity}] = true;
        queue.push_back({w, parity});
      }
    };
    auto it = g.adjacency().find(v);
    if (it != g.adjacency().end()) {
      for (int w : it->second) push(w, !odd);
    }
    if (loops.count(v)) push(v, !odd);
  }
  return seen;
}

PairSet odd_pairs_impl(const Graph& g, const VertexSet& universe, const VertexSet& loops) {
  PairSet result;
  for (int x : universe) {
    auto reach = parity_reach(g, x, loops);
    for (int y : universe) {
      if (y < x) continue;
      if (reach.count({y, true})) result.insert(VertexPair(x, y));
    }
  }
  return result;
}

}  // namespace

PairSet odd_pairs(const Graph& g, const VertexSet& universe) {
  for (int v : universe) {
    if (!g.has_vertex(v)) {
      fail(ErrorCode::InvalidArgument, "universe vertex " + std::to_string(v) + " not in graph");
    }
  }
  return odd_pairs_impl(g, universe, {});
}

PairSet odd_pairs_biclique(const VertexSet& a0, const VertexSet& a1) {
  VertexSet all = a0;
  all.insert(a1.begin(), a1.end());
  std::set<VertexPair> edges;
  VertexSet loops;
  for (int x : a0) {
    for (int y : a1) {
      if (x == y) {
        loops.insert(x);
      } else {
        edges.insert(VertexPair(x, y));
      }
    }
  }
  Graph g(all, std::move(edges));
  return odd_pairs_impl(g, all, loops);
}

PairSet odd_pairs_tail_square(int x, int cap) {
  if (cap <= x) fail(ErrorCode::InvalidArgument, "tail square needs cap > x");
  VertexSet window;
  for (int v = x + 1; v <= cap; ++v) window.insert(v);
  return odd_pairs_biclique(window, window);
}

namespace {

bool colorable_with_h_zero(const Graph& g, const std::vector<int>& subset, const VertexSet& h,
                           int k) {
  size_t n = subset.size();
  std::vector<int> color(n, -1);
  std::map<int, size_t> position;
  for (size_t i = 0; i < n; ++i) position[subset[i]] = i;

  auto consistent = [&](size_t i) {
    auto it = g.adjacency().find(subset[i]);
    if (it == g.adjacency().end()) return true;
    for (int w : it->second) {
      auto pos = position.find(w);
      if (pos == position.end()) continue;
      if (color[pos->second] != -1 && color[pos->second] == color[i]) return false;
    }
    return true;
  };

  std::function<bool(size_t)> assign = [&](size_t i) -> bool {
    if (i == n) return true;
    if (h.count(subset[i])) {
      color[i] = 0;
      if (consistent(i) && assign(i + 1)) return true;
      color[i] = -1;
      return false;
    }
    for (int c = 0; c < k; ++c) {
      color[i] = c;
      if (consistent(i) && assign(i + 1)) return true;
    }
    color[i] = -1;
    return false;
  };
  return assign(0);
}

bool exhaustive_homogeneous(const Graph& g, const VertexSet& h, int k, int subset_bound) {
  std::vector<int> vertices(g.vertices().begin(), g.vertices().end());
  std::vector<int> subset;
  std::function<bool(size_t)> scan = [&](size_t from) -> bool {
    if (!subset.empty() && !colorable_with_h_zero(g, subset, h, k)) return false;
    if (static_cast<int>(subset.size()) == subset_bound) return true;
    for (size_t i = from; i < vertices.size(); ++i) {
      subset.push_back(vertices[i]);
      bool ok = scan(i + 1);
      subset.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return scan(0);
}

}  // namespace

bool is_k_homogeneous(const Graph& g, const VertexSet& h, int k, int subset_bound) {
  if (k <= 0) fail(ErrorCode::InvalidK, "color count must be positive");
  for (int v : h) {
    if (!g.has_vertex(v)) {
      fail(ErrorCode::InvalidArgument, "homogeneous candidate vertex not in graph");
    }
  }
  if (k == 2 && is_locally_2_colorable(g)) {
    // Fast path: no pair drawn from H may admit an odd walk.
    PairSet odd = odd_pairs(g, h);
    return odd.empty();
  }
  if (subset_bound > 6) {
    fail(ErrorCode::SubsetBoundExceeded,
         "exhaustive homogeneity checks are refused past subset bound 6");
  }
  return exhaustive_homogeneous(g, h, k, subset_bound);
}

bool rwkl_homogeneous(const FiniteTree& t, const VertexSet& h, int depth) {
  for (int entry : t.bound().table()) {
    if (entry != 2) {
      fail(ErrorCode::InvalidArgument, "homogeneity over trees is defined for binary trees");
    }
  }
  int height = 0;
  for (const Word& w : t.nodes()) height = std::max(height, static_cast<int>(w.size()));
  if (height < depth) fail(ErrorCode::InvalidArgument, "tree shorter than the requested depth");

  for (int c = 0; c < 2; ++c) {
    std::vector<int> hits(static_cast<size_t>(depth) + 1, 0);
    for (const Word& w : t.nodes()) {
      if (static_cast<int>(w.size()) > depth) continue;
      bool agrees = true;
      for (int i : h) {
        if (i >= 0 && i < static_cast<int>(w.size()) && w[static_cast<size_t>(i)] != c) {
          agrees = false;
          break;
        }
      }
      if (agrees) hits[w.size()] = 1;
    }
    if (std::all_of(hits.begin(), hits.end(), [](int v) { return v != 0; })) return true;
  }
  return false;
}

}  // namespace forcing_lab
