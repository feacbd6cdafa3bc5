#include "forcing_lab/forcing.hpp"

#include <algorithm>
#include <sstream>

namespace forcing_lab {

namespace {

bool small_above(const StringSet& set, int k, const BoundedString& s) {
  return !is_k_big(set, k, s, s.bound().depth()).is_big();
}

std::string show_word(const Word& w) {
  if (w.empty()) return "-";
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ",";
    out << w[i];
  }
  return out.str();
}

}  // namespace

Condition make_condition(BoundedString stem, StringSet bad, int k) {
  Condition c{std::move(stem), std::move(bad), k};
  if (!check_condition(c)) {
    fail(ErrorCode::InvalidArgument, "condition fails its invariant (stem " +
                                         show_word(c.stem.entries()) + ", k=" + std::to_string(k) +
                                         ")");
  }
  return c;
}

bool check_condition(const Condition& c) {
  if (c.k < 1) return false;
  if (!c.bad.bound().same_table(c.stem.bound())) return false;
  if (!c.bad.upward_closed()) return false;
  int level = std::min(c.stem.size(), c.stem.bound().depth() - 1);
  if (c.k > c.stem.bound().branching(level)) return false;
  return small_above(c.bad, c.k, c.stem);
}

Condition initial_condition(const MachineTable& t, const Order& h) {
  StringSet bad = b_dnc(t, h);
  return make_condition(BoundedString::empty(h), std::move(bad), 2);
}

bool extends(const Condition& c2, const Condition& c1) {
  if (!c1.stem.bound().same_table(c2.stem.bound())) {
    fail(ErrorCode::OrderMismatch, "conditions over different orders");
  }
  if (!is_prefix(c1.stem, c2.stem)) return false;
  // Upward-closed sets: inclusion holds iff every minimal element of the
  // smaller set is a member of the larger.
  for (const Word& w : c1.bad.members()) {
    if (!c2.bad.contains(w)) return false;
  }
  return true;
}

bool is_roomy(const Condition& c, int k) {
  if (k <= 0) fail(ErrorCode::InvalidK, "roominess parameter must be positive");
  if (c.stem.size() >= c.stem.bound().depth()) {
    fail(ErrorCode::DepthExceeded, "stem already fills the order table");
  }
  if (c.stem.bound().branching(c.stem.size()) < 4 * k) return false;
  return small_above(c.bad, k, c.stem);
}

namespace {

std::vector<VertexSet> subsets_up_to(const VertexSet& window, int max_size) {
  std::vector<int> items(window.begin(), window.end());
  std::vector<VertexSet> result;
  std::vector<int> chosen;
  std::function<void(size_t, int)> build = [&](size_t from, int remaining) {
    result.emplace_back(chosen.begin(), chosen.end());
    if (remaining == 0) return;
    for (size_t i = from; i < items.size(); ++i) {
      chosen.push_back(items[i]);
      build(i + 1, remaining - 1);
      chosen.pop_back();
    }
  };
  build(0, max_size);
  // Maximal candidates first: by monotonicity they dominate their subsets.
  std::stable_sort(result.begin(), result.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  return result;
}

VertexSet tail_window(int from_exclusive, int cap) {
  VertexSet window;
  for (int v = from_exclusive + 1; v <= cap; ++v) window.insert(v);
  return window;
}

struct EssentialProbe {
  const Requirement* req;
  const Order* h;
  SettleBounds bounds;
  BoundedString sigma;
  int two_k;

  bool big_over(const VertexSet& a0, const VertexSet& a1) const {
    StringSet set =
        requirement_set(*req, BicliqueSource{a0, a1}, *h, bounds.depth, bounds.f_bound);
    return is_k_big(set, two_k, sigma, h->depth()).is_big();
  }

  // Sound rejection: with the full windows small, every bounded choice is
  // small as well.
  bool x_fails_fast(int x) const {
    VertexSet a0_full = tail_window(x, bounds.universe);
    for (int y = 0; y <= bounds.y_max; ++y) {
      if (!big_over(a0_full, tail_window(y, bounds.universe))) return true;
    }
    return false;
  }

  bool a0_works(const VertexSet& a0) const {
    for (int y = 0; y <= bounds.y_max; ++y) {
      if (!big_over(a0, tail_window(y, bounds.universe))) return false;  // full-window reject
      bool found = false;
      for (const VertexSet& a1 : subsets_up_to(tail_window(y, bounds.universe), bounds.a_size)) {
        if (big_over(a0, a1)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  bool x_passes(int x) const {
    if (x_fails_fast(x)) return false;
    for (const VertexSet& a0 : subsets_up_to(tail_window(x, bounds.universe), bounds.a_size)) {
      if (a0_works(a0)) return true;
    }
    return false;
  }
};

}  // namespace

EssentialVerdict is_essential(const Requirement& k, const Condition& c,
                              const SettleBounds& bounds) {
  if (!is_roomy(c, c.k)) {
    fail(ErrorCode::InvalidArgument, "essentialness is probed below roomy conditions only");
  }
  EssentialProbe probe{&k, &c.stem.bound(), bounds, c.stem, 2 * c.k};
  EssentialVerdict verdict;
  verdict.bounds = bounds;
  for (int x = 0; x <= bounds.x_max; ++x) {
    if (!probe.x_passes(x)) {
      verdict.essential = false;
      verdict.failing_x = x;
      return verdict;
    }
  }
  verdict.essential = true;
  return verdict;
}

namespace {

// Least safe child: outside the bad set and keeping it small. Exists
// whenever bad is k-small above the stem and k <= branching.
BoundedString extend_by_safe_child(const BoundedString& stem, const StringSet& bad, int k) {
  int width = stem.bound().branching(stem.size());
  for (int a = 0; a < width; ++a) {
    BoundedString candidate = stem.child(a);
    if (bad.contains(candidate.entries())) continue;
    if (small_above(bad, k, candidate)) return candidate;
  }
  fail(ErrorCode::EngineBug, "no safe child below a small-above stem");
}

// The tail square past the universe bound is empty; every certificate is
// explicitly relative to that bound.
StringSet tail_requirement_set(const Requirement& k, int x, const SettleBounds& bounds,
                               const Order& h) {
  if (x >= bounds.universe) return StringSet::empty_upward(Order(h));
  return requirement_set(k, TailSquareSource{x, bounds.universe}, h, bounds.depth,
                         bounds.f_bound);
}

VertexSet vertices_of(const PairSet& pairs) {
  VertexSet vs;
  for (const VertexPair& p : pairs) {
    vs.insert(p.a);
    vs.insert(p.b);
  }
  return vs;
}

}  // namespace

std::pair<Condition, SettleOutcome> settle(const Requirement& k, const Condition& c,
                                           const Graph& g, const SettleBounds& bounds) {
  if (!check_condition(c)) fail(ErrorCode::InvalidArgument, "settle needs a valid condition");
  if (!is_locally_2_colorable(g)) {
    fail(ErrorCode::InvalidArgument, "settle needs a bipartite graph");
  }
  const Order& h = c.stem.bound();
  SettleOutcome outcome;
  auto note = [&outcome](const std::string& line) { outcome.trace.push_back(line); };

  // Step 0: extend the stem child by child until the condition is roomy.
  BoundedString sigma = c.stem;
  int need = 4 * c.k;
  while (sigma.size() < h.depth() && h.branching(sigma.size()) < need) {
    sigma = extend_by_safe_child(sigma, c.bad, c.k);
  }
  if (sigma.size() >= h.depth() || h.branching(sigma.size()) < need) {
    fail(ErrorCode::DepthExceeded, "order table cannot absorb roominess for k=" +
                                       std::to_string(c.k) + " (needs branching " +
                                       std::to_string(need) + ")");
  }
  if (sigma.size() != c.stem.size()) {
    note("normalized stem to " + show_word(sigma.entries()) + " for k=" + std::to_string(c.k));
  }
  Condition roomy{sigma, c.bad, c.k};

  // Step 1: does the requirement over the explicit graph get big above the
  // stem? Then walk into it.
  StringSet over_graph =
      requirement_set(k, ExplicitGraphSource{g}, h, bounds.depth, bounds.f_bound);
  BigVerdict graph_verdict = is_k_big(over_graph, c.k, sigma, h.depth());
  if (graph_verdict.is_big()) {
    for (const Word& leaf : graph_verdict.witness().tree.leaves()) {
      BoundedString tau(h, leaf);
      if (roomy.bad.contains(leaf)) continue;
      if (!small_above(roomy.bad, c.k, tau)) continue;
      note("clause 1 at " + show_word(leaf));
      outcome.value = Clause1{tau};
      Condition result{tau, roomy.bad, c.k};
      if (!check_condition(result)) fail(ErrorCode::EngineBug, "clause-1 condition invalid");
      return {std::move(result), std::move(outcome)};
    }
    fail(ErrorCode::EngineBug, "no witness leaf kept the bad set small");
  }

  // Step 2: the requirement is not big over the graph; find the tail
  // witness.
  EssentialVerdict essential = is_essential(k, roomy, bounds);
  if (essential.essential) {
    note("requirement essential within bounds but small over the graph");
    outcome.value = BoundExhausted{"essential within bounds; uniform density unavailable"};
    return {c, std::move(outcome)};
  }
  int x = *essential.failing_x;
  note("not essential, witness x=" + std::to_string(x));

  StringSet tail_x = tail_requirement_set(k, x, bounds, h);
  BigVerdict tail_verdict = is_k_big(tail_x, 3 * c.k, sigma, h.depth());
  if (!tail_verdict.is_big()) {
    // Case 1: absorb the tail instances.
    StringSet grown = StringSet::unite(roomy.bad, tail_x);
    if (!small_above(grown, 4 * c.k, sigma)) {
      fail(ErrorCode::EngineBug, "additivity failed: union not 4k-small");
    }
    note("clause 2 via case 1, x=" + std::to_string(x));
    outcome.value = Clause2{x, tail_x};
    Condition result{sigma, std::move(grown), 4 * c.k};
    if (!check_condition(result)) fail(ErrorCode::EngineBug, "case-1 condition invalid");
    return {std::move(result), std::move(outcome)};
  }

  // Case 2: the tail square is still 3k-big; carve out a finite support A0.
  VertexSet a0;
  for (const Word& leaf : tail_verdict.witness().tree.leaves()) {
    BoundedString tau(h, leaf);
    auto f = member_witness(k, TailSquareSource{x, bounds.universe}, tau, bounds.f_bound);
    if (!f) fail(ErrorCode::EngineBug, "tail witness leaf lost its membership");
    VertexSet support = vertices_of(*f);
    a0.insert(support.begin(), support.end());
  }
  note("case 2 support A0=" + std::to_string(a0.size()) + " vertices past x=" + std::to_string(x));

  int a0_max = a0.empty() ? x : *a0.rbegin();
  std::optional<int> chosen_y;
  StringSet cross_y = StringSet::empty_upward(h);
  for (int y_try = a0_max + 1; y_try <= bounds.y_max; ++y_try) {  // y past every support

    StringSet cross = requirement_set(k, BicliqueSource{a0, tail_window(y_try, bounds.universe)},
                                      h, bounds.depth, bounds.f_bound);
    if (!is_k_big(cross, 2 * c.k, sigma, h.depth()).is_big()) {
      chosen_y = y_try;
      cross_y = std::move(cross);
      break;
    }
  }
  if (!chosen_y) {
    note("no y <= " + std::to_string(bounds.y_max) + " kept the cross requirement small");
    outcome.value = BoundExhausted{"case 2: y search exhausted"};
    return {c, std::move(outcome)};
  }
  int y = *chosen_y;
  note("case 2 witness y=" + std::to_string(y));

  StringSet b1 = StringSet::unite(roomy.bad, cross_y);
  if (!small_above(b1, 3 * c.k, sigma)) {
    fail(ErrorCode::EngineBug, "additivity failed: bad + cross tail not 3k-small");
  }

  StringSet over_a0 =
      requirement_set(k, BicliqueSource{a0, a0}, h, bounds.depth, bounds.f_bound);
  BigVerdict a0_verdict = is_k_big(over_a0, 3 * c.k, sigma, h.depth());
  if (!a0_verdict.is_big()) {
    fail(ErrorCode::EngineBug, "requirement over the extracted support lost its bigness");
  }
  std::optional<BoundedString> chosen_tau;
  for (const Word& leaf : a0_verdict.witness().tree.leaves()) {
    BoundedString tau(h, leaf);
    if (small_above(b1, 3 * c.k, tau)) {
      chosen_tau = tau;
      break;
    }
  }
  if (!chosen_tau) fail(ErrorCode::EngineBug, "no support-witness leaf kept b1 small");

  StringSet tail_y = tail_requirement_set(k, y, bounds, h);
  StringSet b2 = StringSet::unite(b1, tail_y);
  if (!small_above(b2, 3 * c.k, *chosen_tau)) {
    fail(ErrorCode::EngineBug,
         "tail instances past y escaped the cross requirement above the chosen stem");
  }

  // Spot-check the membership equality the construction leans on: above the
  // chosen stem, the cross requirement and the tail square agree.
  outcome.case2_equality_checked = y < bounds.universe;
  if (outcome.case2_equality_checked) {
    std::vector<BoundedString> samples = {*chosen_tau};
    if (chosen_tau->size() < h.depth()) {
      BoundedString child0 = chosen_tau->child(0);
      samples.push_back(child0);
      samples.push_back(chosen_tau->child(h.branching(chosen_tau->size()) - 1));
      if (child0.size() < h.depth()) samples.push_back(child0.child(0));
    }
    for (const BoundedString& rho : samples) {
      bool via_cross =
          member(k, BicliqueSource{a0, tail_window(y, bounds.universe)}, rho, bounds.f_bound);
      bool via_tail = member(k, TailSquareSource{y, bounds.universe}, rho, bounds.f_bound);
      if (via_cross != via_tail) outcome.case2_equality_holds = false;
    }
  }

  note("clause 2 via case 2 at " + show_word(chosen_tau->entries()));
  outcome.value = Clause2{y, tail_y};
  Condition result{*chosen_tau, std::move(b2), 3 * c.k};
  if (!check_condition(result)) fail(ErrorCode::EngineBug, "case-2 condition invalid");
  return {std::move(result), std::move(outcome)};
}

bool verify_settled(const Requirement& k, const Graph& g, const Condition& c,
                    const SettleOutcome& outcome, const SettleBounds& bounds) {
  if (outcome.is_bound_exhausted()) return false;
  if (outcome.is_clause1()) {
    const Clause1& clause = outcome.clause1();
    if (!member(k, ExplicitGraphSource{g}, clause.tau, bounds.f_bound)) return false;
    return is_prefix(clause.tau, c.stem);
  }
  const Clause2& clause = outcome.clause2();
  if (clause.x >= bounds.universe) return true;  // empty tail window
  StringSet tail = requirement_set(k, TailSquareSource{clause.x, bounds.universe},
                                   c.stem.bound(), bounds.depth, bounds.f_bound);
  for (const Word& w : tail.members()) {
    if (!c.bad.contains(w)) return false;
  }
  return true;
}

GenericResult build_generic(const MachineTable& t, const std::vector<Requirement>& reqs,
                            const Graph& g, int steps, const SettleBounds& bounds,
                            const Order& h) {
  if (steps > h.depth()) {
    fail(ErrorCode::InvalidArgument, "steps exceed the order table length");
  }
  GenericResult result{BoundedString::empty(h), {}};
  Condition c = initial_condition(t, h);
  result.trace.push_back({0, "initial", c, std::nullopt});

  for (int s = 1; s <= steps; ++s) {
    // Settling may already have grown the stem past s; extend only when the
    // length floor needs it.
    if (c.stem.size() < s) {
      BoundedString extended = extend_by_safe_child(c.stem, c.bad, c.k);
      c = Condition{extended, c.bad, c.k};
      result.trace.push_back({s, "extend", c, std::nullopt});
    }

    if (s - 1 < static_cast<int>(reqs.size())) {
      const Requirement& req = reqs[static_cast<size_t>(s - 1)];
      auto [settled, outcome] = settle(req, c, g, bounds);
      if (!outcome.is_bound_exhausted()) c = settled;
      result.trace.push_back({s, req.descriptor(), c, std::move(outcome)});
    }
  }
  result.stem = c.stem;
  return result;
}

}  // namespace forcing_lab
