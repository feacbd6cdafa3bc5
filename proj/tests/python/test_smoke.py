"""Smoke tests for the python module: each main operation once, tiny inputs."""

import forcing_lab as fl
import pytest


def test_order_and_strings():
    h = fl.Order([3, 3, 3])
    assert h.depth == 3
    assert h.branching(1) == 3
    s = fl.BoundedString(h, [1, 0])
    assert len(s) == 2
    assert fl.is_prefix(fl.BoundedString(h, [1]), s)
    assert len(fl.children(s)) == 3
    with pytest.raises(fl.ForcingError):
        fl.BoundedString(h, [3])


def test_bigness_and_closure():
    h = fl.Order([3, 3, 3])
    full = fl.StringSet(h, [[0], [1], [2]], upward=True)
    root = fl.BoundedString(h, [])
    verdict = fl.is_k_big(full, 3, root, 3)
    assert verdict.big
    assert fl.validate_witness(verdict.witness)

    thin = fl.StringSet(h, [[1]], upward=True)
    assert not fl.is_k_big(thin, 2, root, 3).big

    closed = fl.k_closure(thin, 2, 3)
    assert closed.contains([1, 2])
    assert not closed.contains([0])


def test_diagonal():
    h = fl.Order([3, 3, 3])
    table = fl.MachineTable({0: 0, 1: 1})
    bad = fl.b_dnc(table, h)
    assert not fl.is_k_big(bad, 2, fl.BoundedString(h, []), 3).big
    f = fl.build_dnc_string(table, 2, h)
    assert f.entries == [1, 0]
    assert fl.is_dnc(f, table)


def test_graph_analysis():
    g = fl.Graph([0, 1, 2], [(0, 1), (1, 2)])
    assert fl.is_locally_2_colorable(g)
    assert fl.odd_pairs(g, [0, 1, 2]) == [(0, 1), (1, 2)]
    assert fl.is_k_homogeneous(g, [0, 2], k=2)
    assert not fl.is_k_homogeneous(g, [0, 1], k=2)
    assert fl.odd_pairs_biclique([0], [0]) == [(0, 0)]


def test_requirement_and_settle():
    h = fl.Order([8, 8, 8])
    entries = {}
    for a in range(8):
        entries[((a,), 0)] = 1
        for b in range(8):
            entries[((a, b), 1)] = 1
    w = fl.w_requirement("W0", fl.FunctionalTable(entries))
    g = fl.Graph([0, 1, 2], [(0, 1), (1, 2)])
    tau = fl.BoundedString(h, [1, 1])
    assert fl.member(w, fl.graph_source(g), tau, 1)
    assert fl.member_witness(w, fl.graph_source(g), tau, 1) == [(0, 1)]

    bounds = fl.SettleBounds()
    bounds.x_max = 2
    bounds.a_size = 2
    bounds.y_max = 4
    bounds.f_bound = 2
    bounds.depth = 3
    bounds.universe = 6
    start = fl.initial_condition(fl.MachineTable(), h)
    settled, outcome = fl.settle(w, start, g, bounds)
    assert outcome.kind == "clause1"
    assert fl.verify_settled(w, g, settled, outcome, bounds)

    never = fl.w_requirement("W-never", fl.FunctionalTable())
    settled2, outcome2 = fl.settle(never, start, g, bounds)
    assert outcome2.kind == "clause2"
    assert outcome2.x == 0
    assert fl.verify_settled(never, g, settled2, outcome2, bounds)


def test_generic_run():
    h = fl.Order([8, 8, 8])
    run = fl.build_generic(fl.MachineTable({0: 0}), [], fl.Graph([0, 1], [(0, 1)]), 2,
                           fl.SettleBounds(), h)
    assert run.stem.entries == [1, 0]
    assert fl.is_dnc(run.stem, fl.MachineTable({0: 0}))


def test_ground_run():
    h = fl.Order([8, 8, 8, 8, 8, 8])
    schedule = fl.Enumerator({s: [10 + 2 * s] for s in range(10)})
    roster = [fl.diag_strategy(0, "R0", 0, schedule)]
    bounds = fl.GroundBounds()
    run = fl.run_ground(roster, 10, bounds, h)
    assert run.reports[0].status == "satisfied"
    assert run.bipartite_every_stage
    assert fl.check_frozen_discipline(run.log)
    assert fl.verify_diag_satisfied(run.graph, schedule, 9)


def test_lemma_suites():
    result = fl.run_additivity_suite(25, 7)
    assert result.trials == 25
    assert result.violations == 0
