#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "forcing_lab/requirement.hpp"

namespace forcing_lab {

/// Stagewise enumeration of vertices; values accumulate, so the per-stage
/// sets are monotone by construction.
class Enumerator {
 public:
  Enumerator() = default;
  explicit Enumerator(std::map<int, VertexSet> additions) : additions_(std::move(additions)) {}

  const std::map<int, VertexSet>& additions() const { return additions_; }

  VertexSet at_stage(int stage) const {
    VertexSet out;
    for (const auto& [s, values] : additions_) {
      if (s > stage) break;
      out.insert(values.begin(), values.end());
    }
    return out;
  }

 private:
  std::map<int, VertexSet> additions_;
};

struct DiagStrategy {
  int e = 0;
  Enumerator enumerator;
};

struct DensityStrategy {
  Requirement requirement;
  BoundedString sigma;
  int k = 1;
};

enum class StrategyStatus { Waiting, Satisfied, Vacuous };

struct Strategy {
  int priority = 0;  // lower rank acts first
  std::string name;
  std::variant<DiagStrategy, DensityStrategy> kind;
};

struct GroundBounds {
  int density_vertex_max = 3;  // candidate window for density supports
  int density_set_max = 1;     // support size cap
  int depth = 4;
  int f_bound = 2;
};

struct EdgeEvent {
  int u = 0;
  int v = 0;
  int stage = 0;
  int priority = 0;
};

struct StrategyReport {
  int priority = 0;
  std::string name;
  StrategyStatus status = StrategyStatus::Waiting;
  int stage_acted = -1;
  std::string detail;
};

struct GroundResult {
  Order order;
  Graph graph;
  std::vector<EdgeEvent> log;
  std::vector<StrategyReport> reports;
  int stages = 0;
  int budget = 0;
  bool bipartite_every_stage = false;
};

/// Stage loop: per stage the highest-priority waiting strategy that can act
/// does so (at most one action per stage). Diagonalization strategies join
/// two enumerated vertices by a fresh odd path; density strategies commit
/// whichever completion of a fresh cross gadget keeps their requirement big.
/// Fresh vertices always exceed both every mentioned vertex and the current
/// stage, which makes the frozen discipline automatic.
GroundResult run_ground(const std::vector<Strategy>& strategies, int stages,
                        const GroundBounds& bounds, const Order& h);

/// Every logged edge was decided no later than its larger endpoint.
bool check_frozen_discipline(const std::vector<EdgeEvent>& log);

/// Some pair from the enumerator's final-stage set admits an odd walk.
bool verify_diag_satisfied(const Graph& g, const Enumerator& en, int final_stage);

}  // namespace forcing_lab
