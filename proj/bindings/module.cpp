#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "forcing_lab/forcing.hpp"
#include "forcing_lab/ground.hpp"
#include "forcing_lab/harness.hpp"
#include "forcing_lab/io.hpp"

namespace py = pybind11;
using namespace forcing_lab;

namespace {

std::vector<std::pair<int, int>> pairs_out(const PairSet& pairs) {
  std::vector<std::pair<int, int>> out;
  for (const VertexPair& p : pairs) out.emplace_back(p.a, p.b);
  return out;
}

PairSet pairs_in(const std::vector<std::pair<int, int>>& pairs) {
  PairSet out;
  for (const auto& [a, b] : pairs) out.insert(VertexPair(a, b));
  return out;
}

Graph make_graph(const std::vector<int>& vertices,
                 const std::vector<std::pair<int, int>>& edges) {
  std::set<VertexPair> edge_set;
  for (const auto& [a, b] : edges) edge_set.insert(VertexPair(a, b));
  return Graph(VertexSet(vertices.begin(), vertices.end()), std::move(edge_set));
}

struct SourceHandle {
  PairSource source;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "bushy-tree forcing laboratory";

  py::register_exception<Error>(m, "ForcingError");

  py::class_<Order>(m, "Order")
      .def(py::init<std::vector<int>>())
      .def_property_readonly("depth", &Order::depth)
      .def("branching", &Order::branching)
      .def_property_readonly("table", [](const Order& h) { return h.table(); })
      .def("__repr__", [](const Order& h) {
        std::string out = "Order([";
        for (size_t i = 0; i < h.table().size(); ++i) {
          if (i) out += ", ";
          out += std::to_string(h.table()[i]);
        }
        return out + "])";
      });

  py::class_<BoundedString>(m, "BoundedString")
      .def(py::init<Order, Word>())
      .def_property_readonly("entries", [](const BoundedString& s) { return s.entries(); })
      .def_property_readonly("bound", &BoundedString::bound)
      .def("__len__", &BoundedString::size)
      .def("child", &BoundedString::child)
      .def("prefix", &BoundedString::prefix)
      .def("__eq__", [](const BoundedString& a, const BoundedString& b) { return a == b; })
      .def("__repr__",
           [](const BoundedString& s) { return "BoundedString(" + word_token(s.entries()) + ")"; });

  m.def("is_prefix", &is_prefix);
  m.def("children", &children);
  m.def("join_context_first", &join_context_first);

  py::class_<FiniteTree>(m, "FiniteTree")
      .def(py::init([](Order h, const std::vector<Word>& words, Word stem) {
             return FiniteTree::from_words(std::move(h), words, std::move(stem));
           }),
           py::arg("order"), py::arg("words"), py::arg("stem") = Word{})
      .def_property_readonly("nodes",
                             [](const FiniteTree& t) {
                               return std::vector<Word>(t.nodes().begin(), t.nodes().end());
                             })
      .def_property_readonly("stem", [](const FiniteTree& t) { return t.stem(); })
      .def("leaves", &FiniteTree::leaves)
      .def("contains", &FiniteTree::contains);

  m.def("subtree_at", &subtree_at);

  py::class_<StringSet>(m, "StringSet")
      .def(py::init([](Order h, const std::vector<Word>& members, bool upward) {
             return StringSet(std::move(h), std::set<Word>(members.begin(), members.end()),
                              upward);
           }),
           py::arg("order"), py::arg("members"), py::arg("upward") = true)
      .def_property_readonly("upward_closed", &StringSet::upward_closed)
      .def_property_readonly("members",
                             [](const StringSet& s) {
                               return std::vector<Word>(s.members().begin(), s.members().end());
                             })
      .def("contains", &StringSet::contains)
      .def("enumerate", &StringSet::enumerate)
      .def_static("unite", &StringSet::unite);

  py::class_<BushyWitness>(m, "BushyWitness")
      .def_readonly("tree", &BushyWitness::tree)
      .def_readonly("k", &BushyWitness::k);

  py::class_<BigVerdict>(m, "BigVerdict")
      .def_property_readonly("big", &BigVerdict::is_big)
      .def_property_readonly("witness",
                             [](const BigVerdict& v) -> py::object {
                               if (!v.is_big()) return py::none();
                               return py::cast(v.witness());
                             })
      .def("__bool__", &BigVerdict::is_big);

  m.def("is_k_big", &is_k_big, py::arg("string_set"), py::arg("k"), py::arg("stem"),
        py::arg("depth"));
  m.def("k_closure", &k_closure);
  m.def("validate_witness", &validate_witness);
  m.def("union_small", &union_small);

  py::class_<MachineTable>(m, "MachineTable")
      .def(py::init<>())
      .def(py::init<std::map<int, int>>())
      .def_property_readonly("diag", [](const MachineTable& t) { return t.diag(); });

  py::class_<FunctionalTable>(m, "FunctionalTable")
      .def(py::init<>())
      .def(py::init([](const std::map<std::pair<Word, int>, int>& entries) {
        return FunctionalTable(entries);
      }));

  m.def("eval_functional",
        [](const FunctionalTable& t, const BoundedString& tau, int x) -> py::object {
          auto v = eval_functional(t, tau, x);
          if (!v) return py::none();
          return py::int_(*v);
        });
  m.def("b_dnc", &b_dnc);
  m.def("build_dnc_string", &build_dnc_string);
  m.def("is_dnc", &is_dnc);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("vertices"),
           py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("vertices",
                             [](const Graph& g) {
                               return std::vector<int>(g.vertices().begin(), g.vertices().end());
                             })
      .def_property_readonly("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const VertexPair& e : g.edges()) out.emplace_back(e.a, e.b);
        return out;
      })
      .def("with_edge", &Graph::with_edge);

  m.def("is_locally_2_colorable", &is_locally_2_colorable);
  m.def("odd_pairs", [](const Graph& g, const std::vector<int>& universe) {
    return pairs_out(odd_pairs(g, VertexSet(universe.begin(), universe.end())));
  });
  m.def("odd_pairs_biclique", [](const std::vector<int>& a0, const std::vector<int>& a1) {
    return pairs_out(
        odd_pairs_biclique(VertexSet(a0.begin(), a0.end()), VertexSet(a1.begin(), a1.end())));
  });
  m.def("is_k_homogeneous",
        [](const Graph& g, const std::vector<int>& h, int k, int subset_bound) {
          return is_k_homogeneous(g, VertexSet(h.begin(), h.end()), k, subset_bound);
        },
        py::arg("graph"), py::arg("h"), py::arg("k") = 2, py::arg("subset_bound") = 6);
  m.def("rwkl_homogeneous", [](const FiniteTree& t, const std::vector<int>& h, int depth) {
    return rwkl_homogeneous(t, VertexSet(h.begin(), h.end()), depth);
  });

  py::class_<SourceHandle>(m, "PairSource");
  m.def("graph_source",
        [](const Graph& g) { return SourceHandle{ExplicitGraphSource{g}}; });
  m.def("biclique_source", [](const std::vector<int>& a0, const std::vector<int>& a1) {
    return SourceHandle{
        BicliqueSource{VertexSet(a0.begin(), a0.end()), VertexSet(a1.begin(), a1.end())}};
  });
  m.def("tail_square_source",
        [](int x, int cap) { return SourceHandle{TailSquareSource{x, cap}}; });

  py::class_<Requirement>(m, "Requirement")
      .def_property_readonly("descriptor", &Requirement::descriptor);
  m.def("w_requirement", &w_requirement);
  m.def("propagation_requirement",
        [](const Requirement& base, const BoundedString& xi, int r, const SourceHandle& src,
           int f_bound) { return propagation_requirement(base, xi, r, src.source, f_bound); });
  m.def(
      "member",
      [](const Requirement& k, const SourceHandle& src, const BoundedString& tau, int f_bound) {
        return member(k, src.source, tau, f_bound);
      },
      py::arg("requirement"), py::arg("source"), py::arg("tau"), py::arg("f_bound"));
  m.def("member_witness",
        [](const Requirement& k, const SourceHandle& src, const BoundedString& tau,
           int f_bound) -> py::object {
          auto found = member_witness(k, src.source, tau, f_bound);
          if (!found) return py::none();
          return py::cast(pairs_out(*found));
        });
  m.def("requirement_set",
        [](const Requirement& k, const SourceHandle& src, const Order& h, int depth,
           int f_bound) { return requirement_set(k, src.source, h, depth, f_bound); });

  py::class_<SettleBounds>(m, "SettleBounds")
      .def(py::init<>())
      .def_readwrite("x_max", &SettleBounds::x_max)
      .def_readwrite("a_size", &SettleBounds::a_size)
      .def_readwrite("y_max", &SettleBounds::y_max)
      .def_readwrite("f_bound", &SettleBounds::f_bound)
      .def_readwrite("depth", &SettleBounds::depth)
      .def_readwrite("universe", &SettleBounds::universe);

  py::class_<Condition>(m, "Condition")
      .def_readonly("stem", &Condition::stem)
      .def_readonly("bad", &Condition::bad)
      .def_readonly("k", &Condition::k);
  m.def("make_condition", &make_condition);
  m.def("check_condition", &check_condition);
  m.def("initial_condition", &initial_condition);
  m.def("extends", &extends);
  m.def("is_roomy", &is_roomy);

  py::class_<EssentialVerdict>(m, "EssentialVerdict")
      .def_readonly("essential", &EssentialVerdict::essential)
      .def_property_readonly("failing_x", [](const EssentialVerdict& v) -> py::object {
        if (!v.failing_x) return py::none();
        return py::int_(*v.failing_x);
      });
  m.def("is_essential", &is_essential);

  py::class_<SettleOutcome>(m, "SettleOutcome")
      .def_property_readonly("kind",
                             [](const SettleOutcome& o) {
                               if (o.is_clause1()) return std::string("clause1");
                               if (o.is_clause2()) return std::string("clause2");
                               return std::string("bound-exhausted");
                             })
      .def_property_readonly("tau",
                             [](const SettleOutcome& o) -> py::object {
                               if (!o.is_clause1()) return py::none();
                               return py::cast(o.clause1().tau);
                             })
      .def_property_readonly("x",
                             [](const SettleOutcome& o) -> py::object {
                               if (!o.is_clause2()) return py::none();
                               return py::int_(o.clause2().x);
                             })
      .def_property_readonly("added",
                             [](const SettleOutcome& o) -> py::object {
                               if (!o.is_clause2()) return py::none();
                               return py::cast(o.clause2().added);
                             })
      .def_readonly("trace", &SettleOutcome::trace);
  m.def("settle", &settle);
  m.def("verify_settled", &verify_settled);

  py::class_<GenericStep>(m, "GenericStep")
      .def_readonly("step", &GenericStep::step)
      .def_readonly("requirement", &GenericStep::requirement)
      .def_readonly("condition", &GenericStep::condition)
      .def_property_readonly("outcome", [](const GenericStep& s) -> py::object {
        if (!s.outcome) return py::none();
        return py::cast(*s.outcome);
      });
  py::class_<GenericResult>(m, "GenericResult")
      .def_readonly("stem", &GenericResult::stem)
      .def_readonly("trace", &GenericResult::trace);
  m.def("build_generic", &build_generic);

  py::class_<Enumerator>(m, "Enumerator")
      .def(py::init<>())
      .def(py::init([](const std::map<int, std::vector<int>>& additions) {
        std::map<int, VertexSet> converted;
        for (const auto& [stage, values] : additions) {
          converted[stage] = VertexSet(values.begin(), values.end());
        }
        return Enumerator(std::move(converted));
      }))
      .def("at_stage", [](const Enumerator& e, int stage) {
        VertexSet s = e.at_stage(stage);
        return std::vector<int>(s.begin(), s.end());
      });

  py::class_<Strategy>(m, "Strategy");
  m.def("diag_strategy", [](int priority, const std::string& name, int e, const Enumerator& en) {
    return Strategy{priority, name, DiagStrategy{e, en}};
  });
  m.def("density_strategy",
        [](int priority, const std::string& name, const Requirement& req,
           const BoundedString& sigma, int k) {
          return Strategy{priority, name, DensityStrategy{req, sigma, k}};
        });

  py::class_<GroundBounds>(m, "GroundBounds")
      .def(py::init<>())
      .def_readwrite("density_vertex_max", &GroundBounds::density_vertex_max)
      .def_readwrite("density_set_max", &GroundBounds::density_set_max)
      .def_readwrite("depth", &GroundBounds::depth)
      .def_readwrite("f_bound", &GroundBounds::f_bound);

  py::class_<EdgeEvent>(m, "EdgeEvent")
      .def_readonly("u", &EdgeEvent::u)
      .def_readonly("v", &EdgeEvent::v)
      .def_readonly("stage", &EdgeEvent::stage)
      .def_readonly("priority", &EdgeEvent::priority);

  py::class_<StrategyReport>(m, "StrategyReport")
      .def_readonly("priority", &StrategyReport::priority)
      .def_readonly("name", &StrategyReport::name)
      .def_readonly("stage_acted", &StrategyReport::stage_acted)
      .def_readonly("detail", &StrategyReport::detail)
      .def_property_readonly("status", [](const StrategyReport& r) {
        switch (r.status) {
          case StrategyStatus::Waiting: return "waiting";
          case StrategyStatus::Satisfied: return "satisfied";
          case StrategyStatus::Vacuous: return "vacuous";
        }
        return "unknown";
      });

  py::class_<GroundResult>(m, "GroundResult")
      .def_readonly("graph", &GroundResult::graph)
      .def_readonly("log", &GroundResult::log)
      .def_readonly("reports", &GroundResult::reports)
      .def_readonly("stages", &GroundResult::stages)
      .def_readonly("budget", &GroundResult::budget)
      .def_readonly("bipartite_every_stage", &GroundResult::bipartite_every_stage);
  m.def("run_ground", &run_ground);
  m.def("check_frozen_discipline", &check_frozen_discipline);
  m.def("verify_diag_satisfied", &verify_diag_satisfied);

  py::class_<SuiteResult>(m, "SuiteResult")
      .def_readonly("name", &SuiteResult::name)
      .def_readonly("trials", &SuiteResult::trials)
      .def_readonly("violations", &SuiteResult::violations);
  m.def("run_concatenation_suite", &run_concatenation_suite);
  m.def("run_additivity_suite", &run_additivity_suite);
  m.def("run_closure_suite", &run_closure_suite);

  m.def("oracle_pairs", &pairs_in, "build a pair set from tuples");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
