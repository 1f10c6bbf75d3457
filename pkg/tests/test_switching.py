import math
import random

import pytest

from sombortrees.degseq import DegreeSequence
from sombortrees.greedy import build_greedy
from sombortrees.indices import pseudo_sombor, score_assignment, sombor
from sombortrees.oracle import enumerate_trees, realizable_sequences
from sombortrees.switching import (
    DescentInvariantError,
    SwitchError,
    SwitchPlan,
    SwitchSign,
    ViolationKind,
    apply_switch,
    descend,
    find_violation,
    switch_sign,
)
from sombortrees.tree_core import LabeledTree, PruferCode, prufer_decode

# D = (3,2,2,1,1,1): the non-greedy shape with a long branch
SHAPE_B = LabeledTree(6, [(1, 2), (2, 3), (3, 4), (1, 5), (1, 6)])
GREEDY_6 = build_greedy(DegreeSequence((3, 2, 2, 1, 1, 1)))


def test_plan_requires_distinct_vertices():
    with pytest.raises(SwitchError):
        SwitchPlan(1, 2, 1, 3)


def test_apply_switch_rejects_adjacent_endpoints():
    path = LabeledTree(4, [(1, 2), (2, 3), (3, 4)])
    with pytest.raises(SwitchError, match="must not be adjacent"):
        apply_switch(path, SwitchPlan(2, 1, 3, 4))


def test_apply_switch_rejects_missing_edge():
    path = LabeledTree(4, [(1, 2), (2, 3), (3, 4)])
    with pytest.raises(SwitchError, match="missing"):
        apply_switch(path, SwitchPlan(1, 3, 2, 4))


def test_apply_switch_rejects_non_tree_result():
    tree = LabeledTree(6, [(1, 2), (1, 3), (1, 4), (2, 5), (5, 6)])
    with pytest.raises(SwitchError, match="does not produce a tree"):
        apply_switch(tree, SwitchPlan(5, 6, 1, 3))


def test_apply_switch_valid_example():
    switched = apply_switch(SHAPE_B, SwitchPlan(3, 4, 1, 2))
    assert set(switched.edges) == {(2, 3), (1, 5), (1, 6), (1, 3), (2, 4)}
    for u in range(1, 7):
        assert switched.degree(u) == SHAPE_B.degree(u)


def test_switch_sign_decrease_matches_direct_difference():
    scores = score_assignment(SHAPE_B, 1 / 12)
    plan = SwitchPlan(3, 2, 1, 5)
    sign, product = switch_sign(SHAPE_B, plan, scores)
    assert sign is SwitchSign.DECREASE
    assert product > 0
    switched = apply_switch(SHAPE_B, plan)
    assert pseudo_sombor(switched, scores) < pseudo_sombor(SHAPE_B, scores)


def test_switch_sign_tie_with_engineered_scores():
    # q = 1 puts vertices 3 and 4 on the same score, zeroing one factor
    tree = LabeledTree(5, [(1, 2), (2, 3), (1, 4), (4, 5)])
    scores = score_assignment(tree, 1.0)
    assert scores[3] == scores[4]
    sign, product = switch_sign(tree, SwitchPlan(3, 2, 1, 4), scores)
    assert sign is SwitchSign.TIE
    assert product == 0.0


def test_switch_sign_randomized_equivalence():
    rng = random.Random(1783)
    checked = 0
    while checked < 300:
        n = rng.randint(4, 9)
        code = PruferCode(n, tuple(rng.randint(1, n) for _ in range(n - 2)))
        tree = prufer_decode(code)
        edges = list(tree.edges)
        (a, b), (c, d) = rng.sample(edges, 2)
        if rng.random() < 0.5:
            a, b = b, a
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) != 4:
            continue
        plan = SwitchPlan(a, b, c, d)
        scores = score_assignment(tree, 1 / (2 * n))
        try:
            switched = apply_switch(tree, plan)
        except SwitchError:
            continue
        sign, _ = switch_sign(tree, plan, scores)
        diff = pseudo_sombor(tree, scores) - pseudo_sombor(switched, scores)
        if sign is SwitchSign.DECREASE:
            assert diff > 0
        elif sign is SwitchSign.INCREASE:
            assert diff < 0
        else:
            pytest.fail("tie should be impossible for q <= 1/(2n)")
        checked += 1


def test_find_violation_none_on_greedy_trees():
    for seq in realizable_sequences(7):
        tree = build_greedy(seq)
        scores = score_assignment(tree, 1 / (2 * seq.n))
        assert find_violation(tree, scores) is None


def test_find_violation_none_on_single_edge():
    tree = LabeledTree(2, [(1, 2)])
    assert find_violation(tree, score_assignment(tree, 0.25)) is None


def test_find_violation_shape_b():
    scores = score_assignment(SHAPE_B, 1 / 12)
    violation = find_violation(SHAPE_B, scores)
    assert violation is not None
    assert violation.kind is ViolationKind.LEVEL_CASE_NONPARENT
    assert violation.witnesses == {"alpha": 3, "beta": 5, "gamma": 1, "delta": 2}
    assert violation.plan == SwitchPlan(3, 2, 1, 5)
    sign, _ = switch_sign(SHAPE_B, violation.plan, scores)
    assert sign is SwitchSign.DECREASE


def test_find_violation_parent_case():
    # vertex 2 hangs below its out-scored parent 3
    tree = LabeledTree(5, [(1, 3), (3, 2), (2, 4), (1, 5)])
    scores = score_assignment(tree, 1 / 10)
    violation = find_violation(tree, scores)
    assert violation is not None
    assert violation.kind is ViolationKind.LEVEL_CASE_PARENT
    assert violation.witnesses == {"alpha": 2, "beta": 3, "gamma": 1, "delta": 4}
    assert violation.plan == SwitchPlan(2, 4, 1, 3)


def test_find_violation_descendant_chain_uses_child_swap():
    # alpha = 2 sits four levels below beta = 5; re-hanging alpha via its
    # parent would close a cycle inside beta's subtree, so the plan must
    # recycle a child of alpha instead.
    tree = LabeledTree(7, [(1, 5), (4, 5), (3, 4), (2, 3), (2, 6), (1, 7)])
    scores = score_assignment(tree, 1 / 14)
    violation = find_violation(tree, scores)
    assert violation is not None
    assert violation.kind is ViolationKind.LEVEL_CASE_GRANDCHILD
    assert violation.witnesses == {"alpha": 2, "beta": 5, "gamma": 1, "epsilon": 6}
    switched = apply_switch(tree, violation.plan)
    assert pseudo_sombor(switched, scores) < pseudo_sombor(tree, scores)


def test_find_violation_same_level_case():
    # level order is clean but the children of 2 and 3 are swapped
    tree = LabeledTree(5, [(1, 2), (1, 3), (3, 4), (2, 5)])
    scores = score_assignment(tree, 1 / 10)
    violation = find_violation(tree, scores)
    assert violation is not None
    assert violation.kind is ViolationKind.SAME_LEVEL
    assert violation.witnesses == {"alpha": 2, "beta": 3, "gamma": 5, "delta": 4}
    assert apply_switch(tree, violation.plan) == build_greedy(DegreeSequence((2, 2, 2, 1, 1)))


def test_find_violation_warns_outside_guarantee():
    tree = LabeledTree(2, [(1, 2)])
    with pytest.warns(RuntimeWarning):
        find_violation(tree, score_assignment(tree, 0.4))


def test_every_violation_plan_decreases_exhaustive():
    for seq in realizable_sequences(7):
        q = 1 / (2 * seq.n)
        for tree in enumerate_trees(seq):
            scores = score_assignment(tree, q)
            violation = find_violation(tree, scores)
            if violation is None:
                continue
            sign, product = switch_sign(tree, violation.plan, scores)
            assert sign is SwitchSign.DECREASE
            assert product > 0


def test_descend_fixed_point():
    terminal, trace = descend(GREEDY_6, 1 / 12)
    assert terminal == GREEDY_6
    assert trace.steps == ()


def test_descend_shape_b():
    terminal, trace = descend(SHAPE_B, 1 / 12)
    assert terminal == GREEDY_6
    assert set(terminal.edges) == {(1, 2), (1, 3), (1, 4), (2, 5), (3, 6)}
    assert len(trace.steps) >= 1
    expected_so = 2 * math.sqrt(13) + math.sqrt(10) + 2 * math.sqrt(5)
    assert sombor(terminal) == pytest.approx(expected_so, abs=1e-9)
    psos = [trace.steps[0].pso_before] + [s.pso_after for s in trace.steps]
    assert all(a > b for a, b in zip(psos, psos[1:]))


def test_descend_parent_then_same_level_chain():
    tree = LabeledTree(5, [(1, 3), (3, 2), (2, 4), (1, 5)])
    terminal, trace = descend(tree, 1 / 10)
    assert terminal == build_greedy(DegreeSequence((2, 2, 2, 1, 1)))
    kinds = [s.kind for s in trace.steps]
    assert kinds[0] is ViolationKind.LEVEL_CASE_PARENT


def test_descend_deep_chain():
    tree = LabeledTree(8, [(1, 3), (1, 8), (3, 4), (4, 5), (5, 2), (2, 6), (6, 7)])
    terminal, trace = descend(tree, 1 / 16)
    assert terminal == build_greedy(DegreeSequence((2, 2, 2, 2, 2, 2, 1, 1)))
    assert ViolationKind.LEVEL_CASE_GRANDCHILD in {s.kind for s in trace.steps}


def test_descend_requires_degree_ordered_labels():
    with pytest.raises(ValueError, match="degree-ordered"):
        descend(LabeledTree(3, [(1, 2), (2, 3)]), 0.1)


def test_descend_requires_q_in_range():
    with pytest.raises(ValueError, match="q must lie"):
        descend(GREEDY_6, 0.2)
    with pytest.raises(ValueError, match="q must lie"):
        descend(GREEDY_6, 0.0)


def test_descend_single_vertex():
    k1 = LabeledTree(1, [])
    terminal, trace = descend(k1, 0.5)
    assert terminal == k1
    assert trace.steps == ()


def test_descend_trace_json_shape():
    _, trace = descend(SHAPE_B, 1 / 12)
    blob = trace.to_json()
    assert isinstance(blob, list) and len(blob) == len(trace.steps)
    first = blob[0]
    assert set(first) == {
        "u", "v", "w", "t", "kind", "pso_before", "pso_after", "so_before", "so_after",
    }
    assert first["pso_after"] < first["pso_before"]
    assert first["kind"] in {k.value for k in ViolationKind}


def test_descent_invariant_error_is_runtime_error():
    assert issubclass(DescentInvariantError, RuntimeError)
