#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "forcing_lab/forcing.hpp"
#include "forcing_lab/ground.hpp"

namespace forcing_lab {

// One-record-per-line ASCII formats:
//   order 3 3 4 4 5
//   str 1,0,2            (epsilon as `str -`)
//   tree stem=1,0        followed by one `str` line per node
//   set upward=true      followed by one `str` line per stored member
//   diag 0 -> 1          (`diag 2 -> div` documents divergence)
//   fn 1,0 | 0 -> 1      (prefix | input -> output)
//   graph                 with `v 0 1 2` and `e 0 1` lines
//   p 0 1 / p 3           pair sets
//   en 3: 0,2,4           enumerator stage additions
//   cond stem=1,0 k=2     followed by a set block

std::string serialize_order(const Order& h);
Order parse_order(const std::string& text);

std::string serialize_string(const BoundedString& s);
BoundedString parse_string(const std::string& line, const Order& h);

Word parse_word(const std::string& token);
std::string word_token(const Word& w);

std::string serialize_tree(const FiniteTree& t);
FiniteTree parse_tree(const std::string& text, const Order& h);

std::string serialize_set(const StringSet& s);
StringSet parse_set(const std::string& text, const Order& h);

std::string serialize_machine(const MachineTable& t);
MachineTable parse_machine(const std::string& text);

std::string serialize_functional(const FunctionalTable& t);
FunctionalTable parse_functional(const std::string& text);

std::string serialize_graph(const Graph& g);
Graph parse_graph(const std::string& text);

std::string serialize_pairs(const PairSet& p);
PairSet parse_pairs(const std::string& text);

std::string serialize_vertices(const VertexSet& v);
VertexSet parse_vertices(const std::string& text);

std::string serialize_enumerator(const Enumerator& e);
Enumerator parse_enumerator(const std::string& text);

std::string serialize_condition(const Condition& c);
Condition parse_condition(const std::string& text, const Order& h);

SettleBounds parse_bounds(const std::string& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace forcing_lab
