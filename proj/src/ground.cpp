#include "forcing_lab/ground.hpp"

#include <algorithm>
#include <sstream>

namespace forcing_lab {

namespace {

struct Engine {
  const Order& h;
  GroundBounds bounds;
  int stages;
  int budget;

  std::set<VertexPair> edges;
  std::map<int, int> parent;  // union-find, min vertex as root
  std::set<int> restrained;
  std::vector<EdgeEvent> log;
  int fresh_counter = 0;
  int stage = 0;

  Engine(const Order& order, const GroundBounds& b, int stage_count)
      : h(order), bounds(b), stages(stage_count), budget(4 * stage_count) {}

  int find(int v) {
    auto it = parent.find(v);
    if (it == parent.end()) return v;
    int root = find(it->second);
    parent[v] = root;
    return root;
  }

  void unite(int u, int v) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return;
    if (ru > rv) std::swap(ru, rv);
    parent[rv] = ru;
  }

  VertexSet component_of(int v) {
    VertexSet out;
    int root = find(v);
    out.insert(v);
    for (int u = 0; u < budget; ++u) {
      if (find(u) == root) out.insert(u);
    }
    return out;
  }

  void mention(int v) { fresh_counter = std::max(fresh_counter, v + 1); }

  int fresh() {
    int v = std::max(fresh_counter, stage);
    if (v >= budget) {
      fail(ErrorCode::BudgetExhausted,
           "vertex budget " + std::to_string(budget) + " exhausted at stage " +
               std::to_string(stage));
    }
    fresh_counter = v + 1;
    return v;
  }

  void add_edge(int u, int v, int priority) {
    if (u >= budget || v >= budget) {
      fail(ErrorCode::BudgetExhausted, "edge endpoint outside the vertex budget");
    }
    if (std::max(u, v) < stage) {
      fail(ErrorCode::FrozenViolation, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                           "} decided after stage " + std::to_string(stage));
    }
    edges.insert(VertexPair(u, v));
    unite(u, v);
    mention(u);
    mention(v);
    log.push_back({std::min(u, v), std::max(u, v), stage, priority});
  }

  Graph graph_with(const std::set<VertexPair>& edge_set) const {
    VertexSet vertices;
    for (int v = 0; v < budget; ++v) vertices.insert(v);
    return Graph(std::move(vertices), edge_set);
  }

  Graph current_graph() const { return graph_with(edges); }

  bool restrained_vertex(int v) const { return restrained.count(v) != 0; }

  void restrain_component(int v) {
    VertexSet comp = component_of(v);
    restrained.insert(comp.begin(), comp.end());
  }

  // Diagonalization: wait for two enumerated vertices in distinct free
  // components, then join them by a path of length three through fresh
  // vertices and freeze the merged component.
  bool act_diag(const DiagStrategy& diag, int priority, StrategyReport& report) {
    VertexSet produced = diag.enumerator.at_stage(stage);
    std::vector<int> usable;
    for (int v : produced) {
      if (v < budget && !restrained_vertex(v)) usable.push_back(v);
      mention(v);
    }
    for (size_t i = 0; i < usable.size(); ++i) {
      for (size_t j = i + 1; j < usable.size(); ++j) {
        int x = usable[i], y = usable[j];
        if (find(x) == find(y)) continue;
        int z1 = fresh();
        int z2 = fresh();
        add_edge(x, z1, priority);
        add_edge(z1, z2, priority);
        add_edge(z2, y, priority);
        restrain_component(x);
        std::ostringstream detail;
        detail << "pair {" << x << "," << y << "} via " << z1 << "," << z2;
        report.detail = detail.str();
        return true;
      }
    }
    return false;
  }

  std::vector<VertexSet> support_candidates() const {
    std::vector<int> pool;
    for (int v = 0; v <= bounds.density_vertex_max && v < budget; ++v) {
      if (!restrained_vertex(v)) pool.push_back(v);
    }
    std::vector<VertexSet> out;
    std::vector<int> chosen;
    std::function<void(size_t, int)> build = [&](size_t from, int remaining) {
      if (!chosen.empty()) out.emplace_back(chosen.begin(), chosen.end());
      if (remaining == 0) return;
      for (size_t i = from; i < pool.size(); ++i) {
        chosen.push_back(pool[i]);
        build(i + 1, remaining - 1);
        chosen.pop_back();
      }
    };
    build(0, bounds.density_set_max);
    return out;
  }

  bool cross_components_distinct(const VertexSet& a0, const VertexSet& a1) {
    for (int u : a0) {
      for (int v : a1) {
        if (find(u) == find(v)) return false;
      }
    }
    return true;
  }

  // Density: find supports with the requirement 2k-big above sigma, then
  // build the cross gadget and commit whichever completion keeps the
  // requirement k-big over the whole graph.
  bool act_density(const DensityStrategy& density, int priority, StrategyReport& report) {
    auto candidates = support_candidates();
    for (const VertexSet& a0 : candidates) {
      for (const VertexSet& a1 : candidates) {
        if (!cross_components_distinct(a0, a1)) continue;
        StringSet over_cross = requirement_set(density.requirement, BicliqueSource{a0, a1}, h,
                                               bounds.depth, bounds.f_bound);
        if (!is_k_big(over_cross, 2 * density.k, density.sigma, h.depth()).is_big()) continue;

        int a = fresh();
        int b = fresh();
        add_edge(a, b, priority);
        for (int v : a0) add_edge(v, a, priority);

        // Completion one: scan A1 in increasing order, attach to `a` unless
        // that closes an odd cycle, otherwise to `b`. The mirror swaps every
        // attachment.
        std::set<VertexPair> base = edges;
        std::set<VertexPair> first = base;
        std::map<int, int> attach;  // vertex -> 0 for a, 1 for b
        for (int v : a1) {
          std::set<VertexPair> trial = first;
          trial.insert(VertexPair(v, a));
          if (is_locally_2_colorable(graph_with(trial))) {
            first = std::move(trial);
            attach[v] = 0;
          } else {
            first.insert(VertexPair(v, b));
            attach[v] = 1;
          }
        }
        std::set<VertexPair> mirror = base;
        for (int v : a1) {
          mirror.insert(VertexPair(v, attach[v] == 0 ? b : a));
        }

        const std::set<VertexPair>* committed = nullptr;
        for (const std::set<VertexPair>* candidate : {&first, &mirror}) {
          StringSet over_graph =
              requirement_set(density.requirement, ExplicitGraphSource{graph_with(*candidate)}, h,
                              bounds.depth, bounds.f_bound);
          if (is_k_big(over_graph, density.k, density.sigma, h.depth()).is_big()) {
            committed = candidate;
            break;
          }
        }
        if (committed == nullptr) {
          fail(ErrorCode::EngineBug,
               "neither completion kept the density requirement big above its stem");
        }
        for (int v : a1) {
          bool to_a = (committed == &first) == (attach[v] == 0);
          add_edge(v, to_a ? a : b, priority);
        }
        restrain_component(a);
        std::ostringstream detail;
        detail << "supports ";
        for (int v : a0) detail << v << " ";
        detail << "x ";
        for (int v : a1) detail << v << " ";
        detail << "gadget " << a << "," << b << " committed "
               << (committed == &first ? "first" : "mirror");
        report.detail = detail.str();
        return true;
      }
    }
    return false;
  }
};

}  // namespace

GroundResult run_ground(const std::vector<Strategy>& strategies, int stages,
                        const GroundBounds& bounds, const Order& h) {
  if (stages < 1) fail(ErrorCode::InvalidArgument, "at least one stage");
  std::vector<Strategy> ordered = strategies;
  std::sort(ordered.begin(), ordered.end(),
            [](const Strategy& a, const Strategy& b) { return a.priority < b.priority; });
  for (size_t i = 0; i + 1 < ordered.size(); ++i) {
    if (ordered[i].priority == ordered[i + 1].priority) {
      fail(ErrorCode::InvalidArgument, "priority ranks must be distinct");
    }
  }
  for (const Strategy& s : ordered) {
    if (const auto* density = std::get_if<DensityStrategy>(&s.kind)) {
      if (density->k < 1) fail(ErrorCode::InvalidK, "density parameter must be positive");
      if (density->sigma.size() >= h.depth() ||
          h.branching(density->sigma.size()) < 4 * density->k) {
        fail(ErrorCode::InvalidArgument,
             "density strategy needs branching >= 4k at its stem level");
      }
    }
  }

  Engine engine(h, bounds, stages);
  // Reserve the density candidate window so gadget vertices never collide
  // with future supports.
  bool has_density = std::any_of(ordered.begin(), ordered.end(), [](const Strategy& s) {
    return std::holds_alternative<DensityStrategy>(s.kind);
  });
  if (has_density) engine.mention(bounds.density_vertex_max);

  std::vector<StrategyReport> reports;
  std::vector<StrategyStatus> status(ordered.size(), StrategyStatus::Waiting);
  reports.reserve(ordered.size());
  for (const Strategy& s : ordered) {
    StrategyReport report;
    report.priority = s.priority;
    report.name = s.name;
    reports.push_back(std::move(report));
  }

  bool bipartite_all = true;
  for (int stage = 0; stage < stages; ++stage) {
    engine.stage = stage;
    for (size_t i = 0; i < ordered.size(); ++i) {
      if (status[i] != StrategyStatus::Waiting) continue;
      bool acted = false;
      if (const auto* diag = std::get_if<DiagStrategy>(&ordered[i].kind)) {
        acted = engine.act_diag(*diag, ordered[i].priority, reports[i]);
      } else {
        acted = engine.act_density(std::get<DensityStrategy>(ordered[i].kind),
                                   ordered[i].priority, reports[i]);
      }
      if (acted) {
        status[i] = StrategyStatus::Satisfied;
        reports[i].stage_acted = stage;
        break;  // one action per stage
      }
    }
    if (!is_locally_2_colorable(engine.current_graph())) bipartite_all = false;
  }

  for (size_t i = 0; i < ordered.size(); ++i) {
    reports[i].status =
        status[i] == StrategyStatus::Waiting ? StrategyStatus::Vacuous : status[i];
  }

  GroundResult result{h,
                      engine.current_graph(),
                      std::move(engine.log),
                      std::move(reports),
                      stages,
                      engine.budget,
                      bipartite_all};
  if (!check_frozen_discipline(result.log)) {
    fail(ErrorCode::FrozenViolation, "frozen discipline broken in the final log");
  }
  return result;
}

bool check_frozen_discipline(const std::vector<EdgeEvent>& log) {
  for (const EdgeEvent& e : log) {
    if (std::max(e.u, e.v) < e.stage) return false;
  }
  return true;
}

bool verify_diag_satisfied(const Graph& g, const Enumerator& en, int final_stage) {
  VertexSet produced = en.at_stage(final_stage);
  VertexSet universe;
  for (int v : produced) {
    if (g.has_vertex(v)) universe.insert(v);
  }
  PairSet odd = odd_pairs(g, universe);
  return !odd.empty();
}

}  // namespace forcing_lab
