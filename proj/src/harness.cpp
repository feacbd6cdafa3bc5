#include "forcing_lab/harness.hpp"

#include <functional>
#include <sstream>

namespace forcing_lab {

Order random_order(SplitMix64& rng, int max_len, int max_entry) {
  int len = 1 + rng.below(max_len);
  std::vector<int> table;
  int value = 2 + rng.below(max_entry - 1);
  for (int i = 0; i < len; ++i) {
    table.push_back(value);
    if (value < max_entry && rng.chance(1, 3)) value += 1 + rng.below(max_entry - value);
    if (value > max_entry) value = max_entry;
  }
  return Order(std::move(table));
}

BoundedString random_stem(const Order& h, SplitMix64& rng, int max_len) {
  int len = rng.below(std::min(max_len, h.depth()) + 1);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(rng.below(h.branching(i)));
  return BoundedString(Order(h), std::move(w));
}

StringSet random_upward_set(const Order& h, SplitMix64& rng, int max_members) {
  std::set<Word> members;
  int count = rng.below(max_members + 1);
  for (int i = 0; i < count; ++i) {
    int len = 1 + rng.below(h.depth());
    Word w;
    for (int j = 0; j < len; ++j) w.push_back(rng.below(h.branching(j)));
    members.insert(std::move(w));
  }
  return StringSet(Order(h), std::move(members), true);
}

StringSet random_explicit_set(const Order& h, SplitMix64& rng, int max_members) {
  std::set<Word> members;
  int count = rng.below(max_members + 1);
  for (int i = 0; i < count; ++i) {
    int len = rng.below(h.depth() + 1);
    Word w;
    for (int j = 0; j < len; ++j) w.push_back(rng.below(h.branching(j)));
    members.insert(std::move(w));
  }
  return StringSet(Order(h), std::move(members), false);
}

MachineTable random_machine_table(const Order& h, SplitMix64& rng) {
  std::map<int, int> diag;
  for (int e = 0; e < h.depth(); ++e) {
    if (rng.chance(1, 2)) diag[e] = rng.below(h.branching(e) + 1);  // may exceed the bound
  }
  return MachineTable(std::move(diag));
}

FiniteTree random_bushy_tree(const Order& h, SplitMix64& rng, int k, const BoundedString& stem) {
  std::vector<Word> leaves;
  std::function<void(const Word&)> grow = [&](const Word& node) {
    int level = static_cast<int>(node.size());
    bool must_stop = level >= h.depth() || h.branching(level) < k;
    if (must_stop || rng.chance(2, 3)) {
      leaves.push_back(node);
      return;
    }
    int width = h.branching(level);
    int take = k + rng.below(width - k + 1);
    // choose `take` distinct child values
    std::vector<int> values;
    for (int a = 0; a < width; ++a) values.push_back(a);
    for (int i = 0; i < take; ++i) {
      int j = i + rng.below(width - i);
      std::swap(values[static_cast<size_t>(i)], values[static_cast<size_t>(j)]);
    }
    for (int i = 0; i < take; ++i) {
      Word child = node;
      child.push_back(values[static_cast<size_t>(i)]);
      grow(child);
    }
  };
  grow(stem.entries());
  return FiniteTree::from_words(Order(h), leaves, stem.entries());
}

Graph random_bipartite_graph(SplitMix64& rng, int vertex_count, int max_component) {
  VertexSet vertices;
  for (int v = 0; v < vertex_count; ++v) vertices.insert(v);
  std::set<VertexPair> edges;
  int start = 0;
  while (start < vertex_count) {
    int size = 1 + rng.below(std::min(max_component, vertex_count - start));
    if (size >= 2) {
      int left = 1 + rng.below(size - 1);
      for (int i = left; i < size; ++i) {
        // anchor each right vertex so the component stays connected
        int anchor = rng.below(left);
        edges.insert(VertexPair(start + anchor, start + i));
        for (int j = 0; j < left; ++j) {
          if (rng.chance(1, 3)) edges.insert(VertexPair(start + j, start + i));
        }
      }
    }
    start += size;
  }
  return Graph(std::move(vertices), std::move(edges));
}

FunctionalTable random_functional(const Order& h, SplitMix64& rng, int max_input,
                                  int prefix_samples) {
  std::map<std::pair<Word, int>, int> entries;
  for (int i = 0; i < prefix_samples; ++i) {
    int x = rng.below(max_input + 1);
    if (x + 1 > h.depth()) continue;
    int len = x + 1 + rng.below(h.depth() - x);
    Word prefix;
    for (int j = 0; j < len; ++j) prefix.push_back(rng.below(h.branching(j)));
    int value = rng.chance(2, 3) ? 1 : 0;
    // respect consistency with anything already placed on a comparable prefix
    bool conflict = false;
    for (const auto& [key, existing] : entries) {
      if (key.second == x && words_comparable(key.first, prefix) && existing != value) {
        conflict = true;
        break;
      }
    }
    if (!conflict) entries[{std::move(prefix), x}] = value;
  }
  return FunctionalTable(std::move(entries));
}

namespace {

// Least k <= cap making the set small above s, if any.
std::optional<int> least_small_k(const StringSet& set, const BoundedString& s, int cap) {
  for (int k = 1; k <= cap; ++k) {
    if (!is_k_big(set, k, s, s.bound().depth()).is_big()) return k;
  }
  return std::nullopt;
}

}  // namespace

SuiteResult run_concatenation_suite(int trials, uint64_t seed) {
  SplitMix64 rng(seed);
  SuiteResult result{"concatenation", trials, 0};
  for (int trial = 0; trial < trials; ++trial) {
    Order h = random_order(rng);
    int k = 1 + rng.below(3);
    BoundedString stem = random_stem(h, rng, std::max(0, h.depth() - 1));
    FiniteTree tree = random_bushy_tree(h, rng, k, stem);
    std::set<Word> leaf_words;
    for (const Word& leaf : tree.leaves()) leaf_words.insert(leaf);
    StringSet big_set(h, std::move(leaf_words), true);

    bool family_style_children = rng.chance(1, 2);
    auto family = [&](const BoundedString& tau) {
      if (family_style_children && tau.size() < h.depth() && h.branching(tau.size()) >= k) {
        std::set<Word> child_words;
        for (const BoundedString& c : children(tau)) child_words.insert(c.entries());
        return StringSet(Order(h), std::move(child_words), true);
      }
      return StringSet(Order(h), {tau.entries()}, true);
    };
    if (!verify_concatenation(big_set, family, k, stem, h.depth())) result.violations++;
  }
  return result;
}

SuiteResult run_additivity_suite(int trials, uint64_t seed) {
  SplitMix64 rng(seed);
  SuiteResult result{"smallness-additivity", trials, 0};
  for (int trial = 0; trial < trials; ++trial) {
    Order h = random_order(rng);
    BoundedString stem = random_stem(h, rng, std::max(0, h.depth() - 1));
    int part_count = 1 + rng.below(3);
    std::vector<std::pair<StringSet, int>> parts;
    for (int i = 0; i < part_count; ++i) {
      StringSet candidate = random_upward_set(h, rng);
      auto k_i = least_small_k(candidate, stem, 6);
      for (int retry = 0; retry < 4 && !k_i; ++retry) {
        candidate = random_upward_set(h, rng);
        k_i = least_small_k(candidate, stem, 6);
      }
      if (!k_i) {
        candidate = StringSet::empty_upward(h);
        k_i = 1;
      }
      parts.emplace_back(std::move(candidate), *k_i);
    }
    try {
      union_small(parts, stem, h.depth());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::AdditivityViolation) {
        result.violations++;
      } else {
        throw;
      }
    }
  }
  return result;
}

SuiteResult run_closure_suite(int trials, uint64_t seed) {
  SplitMix64 rng(seed);
  SuiteResult result{"closure-smallness", trials, 0};
  for (int trial = 0; trial < trials; ++trial) {
    Order h = random_order(rng);
    BoundedString stem = random_stem(h, rng, std::max(0, h.depth() - 1));
    int k = 1 + rng.below(3);
    bool upward = rng.chance(2, 3);
    StringSet base = upward ? random_upward_set(h, rng) : random_explicit_set(h, rng);
    bool small = false;
    for (int retry = 0; retry < 6 && !small; ++retry) {
      if (!is_k_big(base, k, stem, h.depth()).is_big()) {
        small = true;
      } else {
        base = upward ? random_upward_set(h, rng) : random_explicit_set(h, rng);
      }
    }
    if (!small) {
      base = StringSet::empty_upward(h);
    }

    StringSet closed = k_closure(base, k, h.depth());
    bool ok = true;
    // contains the base
    if (!base.subset_of(closed, h.depth())) ok = false;
    // smallness preserved above the stem
    if (is_k_big(closed, k, stem, h.depth()).is_big()) ok = false;
    // idempotent
    StringSet twice = k_closure(closed, k, h.depth());
    if (!twice.same_contents(closed, h.depth())) ok = false;
    // closed: big above rho means rho is a member
    BoundedString rho = random_stem(h, rng, h.depth());
    if (is_k_big(closed, k, rho, h.depth()).is_big() && !closed.contains(rho.entries())) {
      ok = false;
    }
    if (!ok) result.violations++;
  }
  return result;
}

std::string render_lemma_report(const std::vector<SuiteResult>& suites, uint64_t seed) {
  std::ostringstream out;
  out << "lemma-suites rng=splitmix64 seed=" << seed << "\n";
  for (const SuiteResult& s : suites) {
    out << "suite " << s.name << " trials=" << s.trials << " violations=" << s.violations
        << "\n";
  }
  return out.str();
}

}  // namespace forcing_lab
