#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "forcing_lab/finite_tree.hpp"
#include "forcing_lab/string_set.hpp"

namespace forcing_lab {

/// A finite k-bushy tree certifying that `target` is k-big above the stem:
/// every non-leaf at or above the stem has at least k children in the tree
/// and every leaf lies in `target`.
struct BushyWitness {
  FiniteTree tree;
  int k = 0;
  StringSet target;
};

/// Re-checks every BushyWitness invariant from scratch; independent of the
/// search that produced it.
bool validate_witness(const BushyWitness& w);

struct SmallVerdict {
  int searched_depth = 0;
};

struct BigVerdict {
  std::variant<BushyWitness, SmallVerdict> value;

  bool is_big() const { return std::holds_alternative<BushyWitness>(value); }
  const BushyWitness& witness() const { return std::get<BushyWitness>(value); }
  int searched_depth() const { return std::get<SmallVerdict>(value).searched_depth; }
};

/// Decides whether B is k-big above s by backward dynamic programming over
/// the strings extending s. The search depth is clamped to
/// max(|s|, longest stored member of B): past that horizon a string is big
/// iff it is a member, so deeper levels cannot change any mark. This makes
/// the call a total decision procedure. `depth` is validated against the
/// order but does not widen or narrow the search.
BigVerdict is_k_big(const StringSet& B, int k, const BoundedString& s, int depth);

/// Raw engine: marks computed at exactly `depth`. Exposed so the horizon
/// clamp itself can be property-tested against deeper searches.
bool k_big_at_depth(const StringSet& B, int k, const BoundedString& s, int depth);

/// All strings of length <= depth above which B is k-big. Returned as an
/// upward-closed antichain when the computed set happens to be upward closed
/// within the search space, and as an explicit set otherwise.
StringSet k_closure(const StringSet& B, int k, int depth);

/// Verifies each part k_i-small above s, then checks the union is
/// (sum k_i)-small above s. A big union falsifies the additivity lemma and
/// raises AdditivityViolation.
std::pair<StringSet, int> union_small(const std::vector<std::pair<StringSet, int>>& parts,
                                      const BoundedString& s, int depth);

/// Lemma checker: A k-big above s, family(leaf) k-big above each witness
/// leaf; returns whether the union of the family tests k-big above s.
bool verify_concatenation(const StringSet& A,
                          const std::function<StringSet(const BoundedString&)>& family, int k,
                          const BoundedString& s, int depth);

}  // namespace forcing_lab
