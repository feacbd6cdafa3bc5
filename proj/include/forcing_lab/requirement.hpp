#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "forcing_lab/dnc.hpp"
#include "forcing_lab/graph.hpp"
#include "forcing_lab/rng.hpp"
#include "forcing_lab/string_set.hpp"

namespace forcing_lab {

/// Where the diagonalizing pairs come from: an explicit graph, a cross
/// product of two vertex sets, or the tail square ((x, cap])^2.
struct ExplicitGraphSource {
  Graph graph;
};
struct BicliqueSource {
  VertexSet a0;
  VertexSet a1;
};
struct TailSquareSource {
  int x = 0;
  int cap = 0;  // universe bound; every certificate is relative to it
};
using PairSource = std::variant<ExplicitGraphSource, BicliqueSource, TailSquareSource>;

PairSet odd_pairs_of(const PairSource& source);
std::string describe(const PairSource& source);

/// Decidable relation R(tau, F) behind a requirement. Instances must be
/// extension-closed in tau and singleton-monotone in F; built-ins satisfy
/// both by construction, user-supplied evaluators are probed at
/// registration.
class Requirement {
 public:
  using Evaluator = std::function<bool(const BoundedString&, const PairSet&)>;

  Requirement(std::string descriptor, Evaluator evaluator)
      : descriptor_(std::move(descriptor)), evaluator_(std::move(evaluator)) {}

  const std::string& descriptor() const { return descriptor_; }
  bool evaluate(const BoundedString& tau, const PairSet& f) const { return evaluator_(tau, f); }

  /// Set by w_requirement so searches can precompute which inputs evaluate
  /// to 1 along a string instead of re-running the evaluator per subset.
  const FunctionalTable* w_table() const { return w_table_ ? w_table_.get() : nullptr; }

  static Requirement w_style(std::string descriptor, FunctionalTable table);

 private:
  std::string descriptor_;
  Evaluator evaluator_;
  std::shared_ptr<const FunctionalTable> w_table_;
};

/// Builds the requirement "some diagonalizing set is fully mapped to 1":
/// R(tau, F) = F nonempty and every vertex of F evaluates to 1 under the
/// functional along tau.
Requirement w_requirement(const std::string& name, FunctionalTable table);

/// Validates extension-closure and singleton-monotonicity with `probes`
/// randomized trials; rejects the relation if any probe fails.
Requirement register_requirement(const std::string& name, Requirement::Evaluator evaluator,
                                 const Order& h, SplitMix64& rng, int probes = 200);

/// True iff some F of at most f_bound pairs drawn from the source's odd
/// pairs satisfies the relation at tau. Bounded search; false only means
/// "not found within the bound".
bool member(const Requirement& k, const PairSource& source, const BoundedString& tau, int f_bound);

/// Same search, also reporting the witnessing F when found.
std::optional<PairSet> member_witness(const Requirement& k, const PairSource& source,
                                      const BoundedString& tau, int f_bound);

/// The strings of length <= depth satisfying `member`, as an upward-closed
/// set (extension-closure makes the minimal antichain a faithful
/// representation).
StringSet requirement_set(const Requirement& k, const PairSource& source, const Order& h,
                          int depth, int f_bound);

/// Requirement relaying a deeper-level requirement: tau belongs once some
/// finite tree above xi, r-bushy, with canonical code at most |tau|, has all
/// leaves satisfying the base requirement with tau joined in as context.
Requirement propagation_requirement(const Requirement& base, const BoundedString& xi, int r,
                                    const PairSource& source, int f_bound);

/// Deterministic enumeration of finite trees with the given stem, ordered by
/// (node count, lexicographic node list). Returns the first `count` trees.
std::vector<FiniteTree> enumerate_trees(const BoundedString& stem, int count);

}  // namespace forcing_lab
