#include "forcing_lab/requirement.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace forcing_lab {

PairSet odd_pairs_of(const PairSource& source) {
  if (const auto* g = std::get_if<ExplicitGraphSource>(&source)) {
    return odd_pairs(g->graph, g->graph.vertices());
  }
  if (const auto* b = std::get_if<BicliqueSource>(&source)) {
    return odd_pairs_biclique(b->a0, b->a1);
  }
  const auto& tail = std::get<TailSquareSource>(source);
  return odd_pairs_tail_square(tail.x, tail.cap);
}

namespace {

std::string show_vertices(const VertexSet& vs) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int v : vs) {
    if (!first) out << ",";
    out << v;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace

std::string describe(const PairSource& source) {
  if (const auto* g = std::get_if<ExplicitGraphSource>(&source)) {
    return "graph(" + std::to_string(g->graph.vertices().size()) + "v," +
           std::to_string(g->graph.edges().size()) + "e)";
  }
  if (const auto* b = std::get_if<BicliqueSource>(&source)) {
    return "biclique " + show_vertices(b->a0) + "x" + show_vertices(b->a1);
  }
  const auto& tail = std::get<TailSquareSource>(source);
  return "tail(" + std::to_string(tail.x) + "," + std::to_string(tail.cap) + "]^2";
}

Requirement Requirement::w_style(std::string descriptor, FunctionalTable table) {
  auto shared = std::make_shared<const FunctionalTable>(std::move(table));
  Evaluator evaluator = [shared](const BoundedString& tau, const PairSet& f) {
    if (f.empty()) return false;
    for (const VertexPair& p : f) {
      auto va = eval_functional(*shared, tau, p.a);
      if (!va || *va != 1) return false;
      if (!p.degenerate()) {
        auto vb = eval_functional(*shared, tau, p.b);
        if (!vb || *vb != 1) return false;
      }
    }
    return true;
  };
  Requirement result(std::move(descriptor), std::move(evaluator));
  result.w_table_ = shared;
  return result;
}

Requirement w_requirement(const std::string& name, FunctionalTable table) {
  return Requirement::w_style(name, std::move(table));
}

namespace {

// Inputs evaluating to 1 along tau, via the per-prefix index.
VertexSet ones_along(const FunctionalTable& table, const Word& tau) {
  VertexSet ones;
  for (size_t len = 0; len <= tau.size(); ++len) {
    auto it = table.ones_by_prefix().find(Word(tau.begin(), tau.begin() + len));
    if (it != table.ones_by_prefix().end()) ones.insert(it->second.begin(), it->second.end());
  }
  return ones;
}

std::optional<PairSet> w_member_search(const FunctionalTable& table, const PairSet& odd,
                                       const Word& tau) {
  VertexSet ones = ones_along(table, tau);
  for (const VertexPair& p : odd) {
    if (ones.count(p.a) && (p.degenerate() || ones.count(p.b))) {
      return PairSet{p};
    }
  }
  return std::nullopt;
}

// Subsets of the odd pairs in deterministic order: the empty set, then
// singletons, then larger combinations, each in lexicographic order.
std::optional<PairSet> generic_member_search(const Requirement& k, const PairSet& odd,
                                             const BoundedString& tau, int f_bound) {
  std::vector<VertexPair> pairs(odd.begin(), odd.end());
  if (k.evaluate(tau, {})) return PairSet{};
  std::vector<size_t> chosen;
  std::function<std::optional<PairSet>(size_t, size_t)> scan =
      [&](size_t target, size_t from) -> std::optional<PairSet> {
    if (chosen.size() == target) {
      PairSet f;
      for (size_t idx : chosen) f.insert(pairs[idx]);
      if (k.evaluate(tau, f)) return f;
      return std::nullopt;
    }
    for (size_t i = from; i + (target - chosen.size()) <= pairs.size(); ++i) {
      chosen.push_back(i);
      auto found = scan(target, i + 1);
      chosen.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  };
  for (size_t size = 1; size <= static_cast<size_t>(f_bound) && size <= pairs.size(); ++size) {
    auto found = scan(size, 0);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<PairSet> member_witness(const Requirement& k, const PairSource& source,
                                      const BoundedString& tau, int f_bound) {
  if (f_bound < 0) fail(ErrorCode::InvalidArgument, "negative pair budget");
  PairSet odd = odd_pairs_of(source);
  if (const FunctionalTable* table = k.w_table()) {
    if (f_bound == 0) return k.evaluate(tau, {}) ? std::optional<PairSet>(PairSet{}) : std::nullopt;
    return w_member_search(*table, odd, tau.entries());
  }
  return generic_member_search(k, odd, tau, f_bound);
}

bool member(const Requirement& k, const PairSource& source, const BoundedString& tau,
            int f_bound) {
  return member_witness(k, source, tau, f_bound).has_value();
}

StringSet requirement_set(const Requirement& k, const PairSource& source, const Order& h,
                          int depth, int f_bound) {
  if (depth > h.depth()) fail(ErrorCode::DepthExceeded, "requirement set depth past the order");
  PairSet odd = odd_pairs_of(source);
  std::set<Word> antichain;

  if (const FunctionalTable* table = k.w_table()) {
    if (f_bound < 1) return StringSet::empty_upward(Order(h));  // needs a nonempty F
    // Pairs outside the inputs the table ever maps to 1 can never fire;
    // dropping them often empties the search outright.
    VertexSet possible;
    for (const auto& [prefix, inputs] : table->ones_by_prefix()) {
      possible.insert(inputs.begin(), inputs.end());
    }
    PairSet relevant;
    for (const VertexPair& p : odd) {
      if (possible.count(p.a) && (p.degenerate() || possible.count(p.b))) relevant.insert(p);
    }
    odd = std::move(relevant);
    if (odd.empty()) return StringSet::empty_upward(Order(h));

    // Walk the string space once, carrying the value-1 input set; a string
    // is minimal exactly when it is a member and its parent was not.
    int effective = std::min(depth, table->max_input() + 1);
    struct Item {
      Word word;
      VertexSet ones;
    };
    auto is_member = [&](const VertexSet& ones) {
      for (const VertexPair& p : odd) {
        if (ones.count(p.a) && (p.degenerate() || ones.count(p.b))) return true;
      }
      return false;
    };
    std::deque<Item> frontier;
    frontier.push_back({Word{}, ones_along(*table, {})});
    while (!frontier.empty()) {
      Item item = std::move(frontier.front());
      frontier.pop_front();
      if (is_member(item.ones)) {
        antichain.insert(item.word);
        continue;
      }
      if (static_cast<int>(item.word.size()) >= effective) continue;
      int width = h.branching(static_cast<int>(item.word.size()));
      for (int a = 0; a < width; ++a) {
        Item child;
        child.word = item.word;
        child.word.push_back(a);
        child.ones = item.ones;
        auto extra = table->ones_by_prefix().find(child.word);
        if (extra != table->ones_by_prefix().end()) {
          child.ones.insert(extra->second.begin(), extra->second.end());
        }
        frontier.push_back(std::move(child));
      }
    }
    return StringSet(Order(h), std::move(antichain), true);
  }

  std::deque<Word> frontier = {Word{}};
  while (!frontier.empty()) {
    Word w = std::move(frontier.front());
    frontier.pop_front();
    if (member(k, source, BoundedString(h, w), f_bound)) {
      antichain.insert(w);
      continue;
    }
    if (static_cast<int>(w.size()) >= depth) continue;
    int width = h.branching(static_cast<int>(w.size()));
    for (int a = 0; a < width; ++a) {
      Word child = w;
      child.push_back(a);
      frontier.push_back(std::move(child));
    }
  }
  return StringSet(Order(h), std::move(antichain), true);
}

std::vector<FiniteTree> enumerate_trees(const BoundedString& stem, int count) {
  std::vector<FiniteTree> result;
  if (count <= 0) return result;
  const Order& h = stem.bound();

  std::set<Word> path;
  for (int len = 0; len <= stem.size(); ++len) {
    path.insert(Word(stem.entries().begin(), stem.entries().begin() + len));
  }
  std::set<std::set<Word>> current = {path};
  while (static_cast<int>(result.size()) < count && !current.empty()) {
    for (const auto& nodes : current) {  // std::set orders node lists lexicographically
      result.emplace_back(h, nodes, stem.entries());
      if (static_cast<int>(result.size()) == count) return result;
    }
    std::set<std::set<Word>> next;
    for (const auto& nodes : current) {
      for (const Word& node : nodes) {
        if (!word_is_prefix(stem.entries(), node)) continue;
        if (static_cast<int>(node.size()) >= h.depth()) continue;
        int width = h.branching(static_cast<int>(node.size()));
        Word child = node;
        child.push_back(0);
        for (int a = 0; a < width; ++a) {
          child.back() = a;
          if (nodes.count(child)) continue;
          std::set<Word> grown = nodes;
          grown.insert(child);
          next.insert(std::move(grown));
        }
      }
    }
    current.swap(next);
  }
  return result;
}

namespace {

bool tree_is_r_bushy(const FiniteTree& t, const Word& stem, int r) {
  for (const Word& node : t.nodes()) {
    if (!word_is_prefix(stem, node)) continue;
    int children_here = t.child_count(node);
    if (children_here != 0 && children_here < r) return false;
  }
  return true;
}

}  // namespace

Requirement propagation_requirement(const Requirement& base, const BoundedString& xi, int r,
                                    const PairSource& source, int f_bound) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "bushiness parameter must be positive");
  BoundedString xi_copy = xi;
  Requirement base_copy = base;
  PairSource source_copy = source;
  std::string name = "T[" + base.descriptor() + ",xi=" + std::to_string(xi.size()) +
                     ",r=" + std::to_string(r) + "]";
  Requirement::Evaluator evaluator = [base_copy, xi_copy, r, source_copy, f_bound](
                                         const BoundedString& tau, const PairSet&) {
    auto trees = enumerate_trees(xi_copy, tau.size() + 1);
    for (const FiniteTree& t : trees) {
      if (!tree_is_r_bushy(t, xi_copy.entries(), r)) continue;
      bool all_leaves = true;
      for (const Word& leaf : t.leaves()) {
        try {
          BoundedString joined = join_context_first(tau, BoundedString(tau.bound(), leaf));
          if (!member(base_copy, source_copy, joined, f_bound)) {
            all_leaves = false;
            break;
          }
        } catch (const Error& e) {
          // A join running past the order cannot witness membership at this
          // bounded scale.
          if (e.code() != ErrorCode::DepthExceeded) throw;
          all_leaves = false;
          break;
        }
      }
      if (all_leaves) return true;
    }
    return false;
  };
  return Requirement(std::move(name), std::move(evaluator));
}

namespace {

BoundedString random_string(const Order& h, SplitMix64& rng, int max_len) {
  int len = rng.below(std::min(max_len, h.depth()) + 1);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(rng.below(h.branching(i)));
  return BoundedString(Order(h), std::move(w));
}

PairSet random_pairs(SplitMix64& rng) {
  PairSet f;
  int count = rng.below(4);
  for (int i = 0; i < count; ++i) {
    int a = rng.below(8);
    int b = rng.chance(1, 4) ? a : rng.below(8);
    f.insert(VertexPair(a, b));
  }
  return f;
}

}  // namespace

Requirement register_requirement(const std::string& name, Requirement::Evaluator evaluator,
                                 const Order& h, SplitMix64& rng, int probes) {
  Requirement candidate(name, std::move(evaluator));
  for (int trial = 0; trial < probes; ++trial) {
    BoundedString tau = random_string(h, rng, h.depth() - 1);
    PairSet f = random_pairs(rng);
    if (!candidate.evaluate(tau, f)) continue;

    // Extension closure.
    if (tau.size() < h.depth()) {
      BoundedString longer = tau.child(rng.below(h.branching(tau.size())));
      if (!candidate.evaluate(longer, f)) {
        fail(ErrorCode::RegistrationRejected,
             "relation '" + name + "' is not closed under extensions");
      }
    }

    // Singleton monotonicity: singletons drawn from the vertices of f.
    if (!f.empty()) {
      VertexSet support;
      for (const VertexPair& p : f) {
        support.insert(p.a);
        support.insert(p.b);
      }
      PairSet singletons;
      for (int v : support) {
        if (rng.chance(2, 3)) singletons.insert(VertexPair(v, v));
      }
      if (singletons.empty()) singletons.insert(VertexPair(*support.begin(), *support.begin()));
      if (!candidate.evaluate(tau, singletons)) {
        fail(ErrorCode::RegistrationRejected,
             "relation '" + name + "' is not singleton-monotone");
      }
    }
  }
  return candidate;
}

}  // namespace forcing_lab
