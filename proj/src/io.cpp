#include "forcing_lab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace forcing_lab {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok) {
  try {
    size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "expected an integer, got '" + tok + "'");
  }
}

[[noreturn]] void bad_line(const std::string& line) {
  fail(ErrorCode::ParseError, "unrecognized line '" + line + "'");
}

}  // namespace

std::string serialize_order(const Order& h) {
  std::ostringstream out;
  out << "order";
  for (int v : h.table()) out << " " << v;
  out << "\n";
  return out.str();
}

Order parse_order(const std::string& text) {
  for (const std::string& line : split_lines(text)) {
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0] != "order") bad_line(line);
    std::vector<int> table;
    for (size_t i = 1; i < toks.size(); ++i) table.push_back(parse_int(toks[i]));
    return Order(std::move(table));
  }
  fail(ErrorCode::ParseError, "no order line found");
}

std::string word_token(const Word& w) {
  if (w.empty()) return "-";
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ",";
    out << w[i];
  }
  return out.str();
}

Word parse_word(const std::string& token) {
  if (token == "-") return {};
  Word w;
  std::string current;
  for (char c : token + ",") {
    if (c == ',') {
      if (current.empty()) fail(ErrorCode::ParseError, "empty entry in '" + token + "'");
      w.push_back(parse_int(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  return w;
}

std::string serialize_string(const BoundedString& s) {
  return "str " + word_token(s.entries()) + "\n";
}

BoundedString parse_string(const std::string& line, const Order& h) {
  auto toks = tokens_of(line);
  if (toks.size() != 2 || toks[0] != "str") bad_line(line);
  return BoundedString(h, parse_word(toks[1]));
}

std::string serialize_tree(const FiniteTree& t) {
  std::ostringstream out;
  out << "tree stem=" << word_token(t.stem()) << "\n";
  std::vector<Word> nodes(t.nodes().begin(), t.nodes().end());
  std::sort(nodes.begin(), nodes.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const Word& w : nodes) out << "str " << word_token(w) << "\n";
  return out.str();
}

FiniteTree parse_tree(const std::string& text, const Order& h) {
  std::optional<Word> stem;
  std::set<Word> nodes;
  for (const std::string& line : split_lines(text)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "tree") {
      if (toks.size() != 2 || toks[1].rfind("stem=", 0) != 0) bad_line(line);
      stem = parse_word(toks[1].substr(5));
    } else if (toks[0] == "str") {
      if (toks.size() != 2) bad_line(line);
      nodes.insert(parse_word(toks[1]));
    } else {
      bad_line(line);
    }
  }
  if (!stem) fail(ErrorCode::ParseError, "missing tree header");
  return FiniteTree(h, std::move(nodes), *stem);
}

std::string serialize_set(const StringSet& s) {
  std::ostringstream out;
  out << "set upward=" << (s.upward_closed() ? "true" : "false") << "\n";
  std::vector<Word> members(s.members().begin(), s.members().end());
  std::sort(members.begin(), members.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const Word& w : members) out << "str " << word_token(w) << "\n";
  return out.str();
}

StringSet parse_set(const std::string& text, const Order& h) {
  std::optional<bool> upward;
  std::set<Word> members;
  for (const std::string& line : split_lines(text)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "set") {
      if (toks.size() != 2) bad_line(line);
      if (toks[1] == "upward=true") {
        upward = true;
      } else if (toks[1] == "upward=false") {
        upward = false;
      } else {
        bad_line(line);
      }
    } else if (toks[0] == "str") {
      if (toks.size() != 2) bad_line(line);
      members.insert(parse_word(toks[1]));
    } else {
      bad_line(line);
    }
  }
  if (!upward) fail(ErrorCode::ParseError, "missing set header");
  return StringSet(h, std::move(members), *upward);
}

std::string serialize_machine(const MachineTable& t) {
  std::ostringstream out;
  for (const auto& [e, v] : t.diag()) out << "diag " << e << " -> " << v << "\n";
  return out.str();
}

MachineTable parse_machine(const std::string& text) {
  std::map<int, int> diag;
  for (const std::string& line : split_lines(text)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] != "diag" || toks.size() != 4 || toks[2] != "->") bad_line(line);
    if (toks[3] == "div") continue;  // divergence is the default
    diag[parse_int(toks[1])] = parse_int(toks[3]);
  }
  return MachineTable(std::move(diag));
}

std::string serialize_functional(const FunctionalTable& t) {
  std::ostringstream out;
  for (const auto& [key, value] : t.entries()) {
    out << "fn " << word_token(key.first) << " | " << key.second << " -> " << value << "\n";
  }
  return out.str();
}

FunctionalTable parse_functional(const std::string& text) {
  std::map<std::pair<Word, int>, int> entries;
  for (const std::string& line : split_lines(text)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] != "fn" || toks.size() != 6 || toks[2] != "|" || toks[4] != "->") bad_line(line);
    entries[{parse_word(toks[1]), parse_int(toks[3])}] = parse_int(toks[5]);
  }
  return FunctionalTable(std::move(entries));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph\n";
  out << "v";
  for (int v : g.vertices()) out << " " << v;
  out << "\n";
  for (const VertexPair& e : g.edges()) out << "e " << e.a << " " << e.b << "\n";
  return out.str();
}

Graph parse_graph(const std::string& text) {
  VertexSet vertices;
  std::set<VertexPair> edges;
  bool seen_header = false;
  for (const std::string& line : split_lines(text)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "graph") {
      seen_header = true;
    } else if (toks[0] == "v") {
      for (size_t i = 1; i < toks.size(); ++i) vertices.insert(parse_int(toks[i]));
    } else if (toks[0] == "e") {
      if (toks.size() != 3) bad_line(line);
      edges.insert(VertexPair(parse_int(toks[1]), parse_int(toks[2])));
    } else {
      bad_line(line);
    }
  }
  if (!seen_header) fail(ErrorCode::ParseError, "missing graph header");
  return Graph(std::move(vertices), std::move(edges));
}

std::string serialize_pairs(const PairSet& p) {
  std::ostringstream out;
  for (const VertexPair& pair : p) {
    if (pair.degenerate()) {
      out << "p " << pair.a << "\n";
    } else {
      out << "p " << pair.a << " " << pair.b << "\n";
    }
  }
  return out.str();
}

PairSet parse_pairs(const std::string& text) {
  PairSet out;
  for (const std::string& line : split_lines(text)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] != "p" || toks.size() < 2 || toks.size() > 3) bad_line(line);
    int a = parse_int(toks[1]);
    int b = toks.size() == 3 ? parse_int(toks[2]) : a;
    out.insert(VertexPair(a, b));
  }
  return out;
}

std::string serialize_vertices(const VertexSet& v) {
  std::ostringstream out;
  out << "v";
  for (int x : v) out << " " << x;
  out << "\n";
  return out.str();
}

VertexSet parse_vertices(const std::string& text) {
  VertexSet out;
  for (const std::string& line : split_lines(text)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] != "v") bad_line(line);
    for (size_t i = 1; i < toks.size(); ++i) out.insert(parse_int(toks[i]));
  }
  return out;
}

std::string serialize_enumerator(const Enumerator& e) {
  std::ostringstream out;
  for (const auto& [stage, values] : e.additions()) {
    out << "en " << stage << ":";
    bool first = true;
    for (int v : values) {
      out << (first ? " " : ",") << v;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

Enumerator parse_enumerator(const std::string& text) {
  std::map<int, VertexSet> additions;
  for (const std::string& line : split_lines(text)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] != "en" || toks.size() != 3) bad_line(line);
    std::string stage_tok = toks[1];
    if (stage_tok.empty() || stage_tok.back() != ':') bad_line(line);
    stage_tok.pop_back();
    int stage = parse_int(stage_tok);
    Word values = parse_word(toks[2]);
    VertexSet& slot = additions[stage];
    slot.insert(values.begin(), values.end());
  }
  return Enumerator(std::move(additions));
}

std::string serialize_condition(const Condition& c) {
  std::ostringstream out;
  out << "cond stem=" << word_token(c.stem.entries()) << " k=" << c.k << "\n";
  out << serialize_set(c.bad);
  return out.str();
}

Condition parse_condition(const std::string& text, const Order& h) {
  std::optional<Word> stem;
  std::optional<int> k;
  std::ostringstream set_text;
  for (const std::string& line : split_lines(text)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "cond") {
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].rfind("stem=", 0) == 0) {
          stem = parse_word(toks[i].substr(5));
        } else if (toks[i].rfind("k=", 0) == 0) {
          k = parse_int(toks[i].substr(2));
        } else {
          bad_line(line);
        }
      }
    } else {
      set_text << line << "\n";
    }
  }
  if (!stem || !k) fail(ErrorCode::ParseError, "missing condition header fields");
  StringSet bad = parse_set(set_text.str(), h);
  return make_condition(BoundedString(h, *stem), std::move(bad), *k);
}

SettleBounds parse_bounds(const std::string& spec) {
  SettleBounds bounds;
  std::string current;
  auto apply = [&bounds](const std::string& item) {
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ParseError, "bounds item '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = parse_int(item.substr(eq + 1));
    if (key == "x") {
      bounds.x_max = value;
    } else if (key == "a") {
      bounds.a_size = value;
    } else if (key == "y") {
      bounds.y_max = value;
    } else if (key == "f") {
      bounds.f_bound = value;
    } else if (key == "depth") {
      bounds.depth = value;
    } else if (key == "U") {
      bounds.universe = value;
    } else {
      fail(ErrorCode::ParseError, "unknown bounds key '" + key + "'");
    }
  };
  for (char c : spec + ",") {
    if (c == ',' || c == ' ') {
      if (!current.empty()) apply(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  return bounds;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace forcing_lab
