#pragma once

#include <string>
#include <vector>

#include "forcing_lab/bigness.hpp"
#include "forcing_lab/dnc.hpp"
#include "forcing_lab/graph.hpp"
#include "forcing_lab/rng.hpp"

namespace forcing_lab {

// Randomized generators for the lemma suites and the property harnesses.
// Everything draws from one SplitMix64 stream so runs replay byte for byte.

Order random_order(SplitMix64& rng, int max_len = 6, int max_entry = 5);
BoundedString random_stem(const Order& h, SplitMix64& rng, int max_len);
StringSet random_upward_set(const Order& h, SplitMix64& rng, int max_members = 4);
StringSet random_explicit_set(const Order& h, SplitMix64& rng, int max_members = 6);
MachineTable random_machine_table(const Order& h, SplitMix64& rng);

/// Random k-bushy tree above the stem; its leaf set certifies bigness of its
/// own up-closure.
FiniteTree random_bushy_tree(const Order& h, SplitMix64& rng, int k, const BoundedString& stem);

/// Bipartite graph whose components each span at most `max_component`
/// vertices, so a subset check bounded by that size stays complete.
Graph random_bipartite_graph(SplitMix64& rng, int vertex_count, int max_component);

/// Use-monotone functional table over small inputs.
FunctionalTable random_functional(const Order& h, SplitMix64& rng, int max_input,
                                  int prefix_samples = 12);

struct SuiteResult {
  std::string name;
  int trials = 0;
  int violations = 0;
};

SuiteResult run_concatenation_suite(int trials, uint64_t seed);
SuiteResult run_additivity_suite(int trials, uint64_t seed);
SuiteResult run_closure_suite(int trials, uint64_t seed);

std::string render_lemma_report(const std::vector<SuiteResult>& suites, uint64_t seed);

}  // namespace forcing_lab
