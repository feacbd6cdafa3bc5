#include "forcing_lab/bigness.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace forcing_lab {

namespace {

// Backward marking over the strings extending `s`, up to length `depth`.
// mark(w) = w in B, or |w| < depth and at least k children of w are marked.
// Marks are stored per level as flat arrays indexed in mixed radix, so the
// whole table doubles as the smallness certificate.
struct MarkTable {
  const StringSet* set = nullptr;
  int k = 0;
  Word stem;
  int depth = 0;
  Order bound;
  // marks[d] covers extensions of stem of length stem.size() + d.
  std::vector<std::vector<char>> marks;

  MarkTable(const StringSet& B, int k_arg, const BoundedString& s, int depth_arg)
      : set(&B), k(k_arg), stem(s.entries()), depth(depth_arg), bound(s.bound()) {
    int base = static_cast<int>(stem.size());
    int levels = depth - base;
    marks.resize(static_cast<size_t>(levels) + 1);
    std::vector<size_t> level_size(static_cast<size_t>(levels) + 1, 1);
    constexpr size_t kSpaceLimit = 50'000'000;
    for (int d = 1; d <= levels; ++d) {
      size_t width = static_cast<size_t>(bound.branching(base + d - 1));
      size_t previous = level_size[static_cast<size_t>(d - 1)];
      if (previous > kSpaceLimit / width) {
        fail(ErrorCode::InvalidArgument, "mark table would exceed the desk-scale search space");
      }
      level_size[static_cast<size_t>(d)] = previous * width;
    }
    Word w = stem;
    for (int d = levels; d >= 0; --d) {
      auto& row = marks[static_cast<size_t>(d)];
      row.assign(level_size[static_cast<size_t>(d)], 0);
      w.resize(stem.size() + static_cast<size_t>(d));
      fill_level(d, 0, w);
    }
  }

  void fill_level(int d, int pos, Word& w) {
    int base = static_cast<int>(stem.size());
    if (pos == d) {
      size_t idx = index_of(w, d);
      char value = 0;
      if (set->contains(w)) {
        value = 1;
      } else if (d < static_cast<int>(marks.size()) - 1) {
        int width = bound.branching(base + d);
        size_t child_base = idx * static_cast<size_t>(width);
        int marked = 0;
        const auto& below = marks[static_cast<size_t>(d) + 1];
        for (int a = 0; a < width; ++a) {
          if (below[child_base + static_cast<size_t>(a)]) ++marked;
        }
        if (marked >= k) value = 1;
      }
      marks[static_cast<size_t>(d)][idx] = value;
      return;
    }
    int width = bound.branching(base + pos);
    for (int a = 0; a < width; ++a) {
      w[stem.size() + static_cast<size_t>(pos)] = a;
      fill_level(d, pos + 1, w);
    }
  }

  size_t index_of(const Word& w, int d) const {
    size_t idx = 0;
    int base = static_cast<int>(stem.size());
    for (int i = 0; i < d; ++i) {
      idx = idx * static_cast<size_t>(bound.branching(base + i)) +
            static_cast<size_t>(w[static_cast<size_t>(base + i)]);
    }
    return idx;
  }

  bool marked(const Word& w) const {
    int d = static_cast<int>(w.size()) - static_cast<int>(stem.size());
    return marks[static_cast<size_t>(d)][index_of(w, d)] != 0;
  }

  // Witness extraction: stop at members, otherwise take the k
  // lexicographically least marked children. Determinism keeps traces
  // byte-identical.
  void collect_witness(const Word& w, std::vector<Word>& out) const {
    if (set->contains(w)) {
      out.push_back(w);
      return;
    }
    int width = bound.branching(static_cast<int>(w.size()));
    Word child = w;
    child.push_back(0);
    int taken = 0;
    for (int a = 0; a < width && taken < k; ++a) {
      child.back() = a;
      if (marked(child)) {
        collect_witness(child, out);
        ++taken;
      }
    }
  }
};

int search_horizon(const StringSet& B, const BoundedString& s) {
  return std::max(s.size(), B.max_member_length());
}

void check_big_args(const StringSet& B, int k, const BoundedString& s, int depth) {
  if (k <= 0) fail(ErrorCode::InvalidK, "k must be positive, got " + std::to_string(k));
  if (!B.bound().same_table(s.bound())) {
    fail(ErrorCode::OrderMismatch, "set and stem over different orders");
  }
  if (depth > s.bound().depth()) {
    fail(ErrorCode::DepthExceeded, "depth " + std::to_string(depth) + " past order table of length " +
                                       std::to_string(s.bound().depth()));
  }
}

}  // namespace

bool validate_witness(const BushyWitness& w) {
  if (w.k <= 0) return false;
  const FiniteTree& t = w.tree;
  if (!t.bound().same_table(w.target.bound())) return false;
  for (const Word& node : t.nodes()) {
    bool above_stem = word_is_prefix(t.stem(), node);
    int children_here = t.child_count(node);
    if (children_here == 0) {
      if (!w.target.contains(node)) return false;
    } else if (above_stem && children_here < w.k) {
      return false;
    }
  }
  return true;
}

bool k_big_at_depth(const StringSet& B, int k, const BoundedString& s, int depth) {
  check_big_args(B, k, s, depth);
  if (depth < s.size()) {
    fail(ErrorCode::InvalidArgument, "search depth below the stem length");
  }
  MarkTable table(B, k, s, depth);
  return table.marked(s.entries());
}

BigVerdict is_k_big(const StringSet& B, int k, const BoundedString& s, int depth) {
  check_big_args(B, k, s, depth);
  int horizon = search_horizon(B, s);
  MarkTable table(B, k, s, horizon);
  if (!table.marked(s.entries())) {
    return BigVerdict{SmallVerdict{horizon}};
  }
  std::vector<Word> witness_leaves;
  table.collect_witness(s.entries(), witness_leaves);
  FiniteTree tree = FiniteTree::from_words(s.bound(), witness_leaves, s.entries());
  return BigVerdict{BushyWitness{std::move(tree), k, B}};
}

StringSet k_closure(const StringSet& B, int k, int depth) {
  if (k <= 0) fail(ErrorCode::InvalidK, "k must be positive");
  if (depth > B.bound().depth()) {
    fail(ErrorCode::DepthExceeded, "closure depth past the order table");
  }
  BoundedString root = BoundedString::empty(B.bound());
  int table_depth = std::max(depth, B.max_member_length());
  if (table_depth > B.bound().depth()) table_depth = B.bound().depth();
  MarkTable table(B, k, root, table_depth);

  // A mark at the horizon only depends on membership, so marked(w) is the
  // total bigness verdict for every w in range.
  std::set<Word> marked_all;
  std::vector<Word> frontier = {Word{}};
  std::vector<Word> next;
  for (int level = 0; level <= table_depth; ++level) {
    for (const Word& w : frontier) {
      if (table.marked(w)) marked_all.insert(w);
    }
    if (level == table_depth) break;
    next.clear();
    int width = B.bound().branching(level);
    for (const Word& w : frontier) {
      Word child = w;
      child.push_back(0);
      for (int a = 0; a < width; ++a) {
        child.back() = a;
        next.push_back(child);
      }
    }
    frontier.swap(next);
  }

  // Prefer the antichain representation when the closure really is upward
  // closed within the search space; fall back to the explicit set otherwise
  // (the closure of an upward-closed set can pick up isolated short strings
  // whose other extensions stay small).
  bool upward_ok = true;
  std::set<Word> antichain;
  for (const Word& w : marked_all) {
    if (static_cast<int>(w.size()) < table_depth) {
      int width = B.bound().branching(static_cast<int>(w.size()));
      Word child = w;
      child.push_back(0);
      for (int a = 0; a < width && upward_ok; ++a) {
        child.back() = a;
        if (!marked_all.count(child)) upward_ok = false;
      }
    }
    if (!upward_ok) break;
    bool minimal = true;
    for (size_t len = 0; len < w.size() && minimal; ++len) {
      if (marked_all.count(Word(w.begin(), w.begin() + len))) minimal = false;
    }
    if (minimal) {
      if (static_cast<int>(w.size()) > depth) {
        upward_ok = false;  // a minimal element past the requested depth
        break;
      }
      antichain.insert(w);
    }
  }
  if (upward_ok) return StringSet(B.bound(), std::move(antichain), true);

  std::set<Word> explicit_members;
  for (const Word& w : marked_all) {
    if (static_cast<int>(w.size()) <= depth) explicit_members.insert(w);
  }
  return StringSet(B.bound(), std::move(explicit_members), false);
}

std::pair<StringSet, int> union_small(const std::vector<std::pair<StringSet, int>>& parts,
                                      const BoundedString& s, int depth) {
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "union of zero parts");
  int total = 0;
  StringSet merged = StringSet::empty_upward(s.bound());
  bool first = true;
  for (const auto& [part, k_i] : parts) {
    BigVerdict verdict = is_k_big(part, k_i, s, depth);
    if (verdict.is_big()) {
      fail(ErrorCode::InvalidArgument,
           "part is " + std::to_string(k_i) + "-big above the stem; union_small expects small parts");
    }
    total += k_i;
    merged = first ? part : StringSet::unite(merged, part);
    first = false;
  }
  BigVerdict verdict = is_k_big(merged, total, s, depth);
  if (verdict.is_big()) {
    fail(ErrorCode::AdditivityViolation,
         "union tests " + std::to_string(total) + "-big above the stem");
  }
  return {std::move(merged), total};
}

bool verify_concatenation(const StringSet& A,
                          const std::function<StringSet(const BoundedString&)>& family, int k,
                          const BoundedString& s, int depth) {
  BigVerdict base = is_k_big(A, k, s, depth);
  if (!base.is_big()) {
    fail(ErrorCode::InvalidArgument, "A is not k-big above the stem");
  }
  StringSet merged = StringSet::empty_upward(s.bound());
  bool first = true;
  for (const Word& leaf : base.witness().tree.leaves()) {
    BoundedString tau(s.bound(), leaf);
    StringSet part = family(tau);
    BigVerdict above_leaf = is_k_big(part, k, tau, depth);
    if (!above_leaf.is_big()) {
      fail(ErrorCode::InvalidArgument, "family set is not k-big above a witness leaf");
    }
    merged = first ? part : StringSet::unite(merged, part);
    first = false;
  }
  return is_k_big(merged, k, s, depth).is_big();
}

}  // namespace forcing_lab
