"""Degree-preserving edge switches and the descent to the greedy tree.

A switch replaces edges {u,v}, {w,t} by {u,w}, {v,t}; it keeps every vertex
degree, and whether it lowers the pseudo-Sombor index is decided by the sign
of (scr(u) - scr(t)) * (scr(w) - scr(v)). ``find_violation`` locates a
score/level disorder together with a disorder-removing switch, and
``descend`` applies such switches until none remains, which for a
degree-ordered labeling leaves exactly the greedy tree.
"""

import warnings
from dataclasses import dataclass
from enum import Enum

from .degseq import DegreeSequence
from .greedy import build_greedy
from .indices import ScoreAssignment, pseudo_sombor, sombor, score_assignment
from .tree_core import BfsLevels, LabeledTree, TreeError, degree_sequence_of


class SwitchError(ValueError):
    """The switch plan cannot be applied to the given tree."""


class DescentInvariantError(RuntimeError):
    """A descent step broke one of its guarantees."""


class SwitchSign(Enum):
    DECREASE = "decrease"
    INCREASE = "increase"
    TIE = "tie"


class ViolationKind(Enum):
    LEVEL_CASE_PARENT = "LEVEL_CASE_PARENT"
    LEVEL_CASE_NONPARENT = "LEVEL_CASE_NONPARENT"
    LEVEL_CASE_GRANDCHILD = "LEVEL_CASE_GRANDCHILD"
    SAME_LEVEL = "SAME_LEVEL"


@dataclass(frozen=True)
class SwitchPlan:
    """Replace edges {u,v} and {w,t} by {u,w} and {v,t}.

    Requires u~v, w~t, u!~w, v!~t in the source tree, and the replacement
    must leave a tree; both are checked by ``apply_switch``.
    """

    u: int
    v: int
    w: int
    t: int

    def __post_init__(self):
        if len({self.u, self.v, self.w, self.t}) != 4:
            raise SwitchError(
                f"switch vertices must be four distinct labels, got "
                f"({self.u}, {self.v}, {self.w}, {self.t})"
            )


@dataclass(frozen=True)
class Violation:
    """A located disorder: its kind, the named witness vertices, and the
    switch that removes it while strictly lowering the pseudo index."""

    kind: ViolationKind
    witnesses: dict[str, int]
    plan: SwitchPlan


def _ordered(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _require_plan_applies(tree: LabeledTree, plan: SwitchPlan) -> None:
    if not tree.adjacent(plan.u, plan.v):
        raise SwitchError(f"required edge {{{plan.u},{plan.v}}} is missing")
    if not tree.adjacent(plan.w, plan.t):
        raise SwitchError(f"required edge {{{plan.w},{plan.t}}} is missing")
    if tree.adjacent(plan.u, plan.w):
        raise SwitchError(f"vertices {plan.u} and {plan.w} must not be adjacent")
    if tree.adjacent(plan.v, plan.t):
        raise SwitchError(f"vertices {plan.v} and {plan.t} must not be adjacent")


def apply_switch(tree: LabeledTree, plan: SwitchPlan) -> LabeledTree:
    """Carry out the switch; every vertex keeps its degree."""
    _require_plan_applies(tree, plan)
    dropped = {_ordered(plan.u, plan.v), _ordered(plan.w, plan.t)}
    new_edges = [e for e in tree.edges if e not in dropped]
    new_edges.append(_ordered(plan.u, plan.w))
    new_edges.append(_ordered(plan.v, plan.t))
    try:
        return LabeledTree(tree.n, new_edges)
    except TreeError as exc:
        raise SwitchError(f"switch {plan} does not produce a tree: {exc}") from exc


def switch_sign(
    tree: LabeledTree, plan: SwitchPlan, scores: ScoreAssignment
) -> tuple[SwitchSign, float]:
    """Closed-form sign of pSO(T) - pSO(T') for the switched tree T'.

    DECREASE means the switch strictly lowers the pseudo index. Returns the
    product (scr(u) - scr(t)) * (scr(w) - scr(v)) alongside the sign; a TIE
    (zero product) cannot occur when q <= 1/(2n).
    """
    apply_switch(tree, plan)  # full validation, result discarded
    if scores.n != tree.n:
        raise ValueError(f"scores cover {scores.n} vertices but the tree has {tree.n}")
    product = (scores[plan.u] - scores[plan.t]) * (scores[plan.w] - scores[plan.v])
    if product > 0:
        return SwitchSign.DECREASE, product
    if product < 0:
        return SwitchSign.INCREASE, product
    return SwitchSign.TIE, product


def _is_proper_descendant(info: BfsLevels, node: int, ancestor: int) -> bool:
    x = node
    target_level = info.level[ancestor]
    while info.level[x] > target_level:
        x = info.parent[x]
    return x == ancestor and node != ancestor


def _level_violation(
    info: BfsLevels,
    children: dict[int, list[int]],
    alpha: int,
    beta: int,
) -> Violation:
    gamma = info.parent[beta]
    if info.parent[alpha] == beta:
        kids = children.get(alpha)
        if not kids:
            raise SwitchError(
                f"vertex {alpha} has no child to recycle; scores are not monotone"
            )
        delta = kids[0]
        return Violation(
            ViolationKind.LEVEL_CASE_PARENT,
            {"alpha": alpha, "beta": beta, "gamma": gamma, "delta": delta},
            SwitchPlan(alpha, delta, gamma, beta),
        )
    if _is_proper_descendant(info, alpha, beta):
        # alpha sits at depth >= 2 inside beta's subtree. Swapping via
        # alpha's parent would reconnect two vertices of that subtree and
        # close a cycle, so recycle one of alpha's children instead.
        kids = children.get(alpha)
        if not kids:
            raise SwitchError(
                f"vertex {alpha} has no child to recycle; scores are not monotone"
            )
        epsilon = kids[0]
        return Violation(
            ViolationKind.LEVEL_CASE_GRANDCHILD,
            {"alpha": alpha, "beta": beta, "gamma": gamma, "epsilon": epsilon},
            SwitchPlan(alpha, epsilon, gamma, beta),
        )
    delta = info.parent[alpha]
    return Violation(
        ViolationKind.LEVEL_CASE_NONPARENT,
        {"alpha": alpha, "beta": beta, "gamma": gamma, "delta": delta},
        SwitchPlan(alpha, delta, gamma, beta),
    )


def find_violation(tree: LabeledTree, scores: ScoreAssignment) -> Violation | None:
    """Locate a score/level disorder and a switch that removes it.

    First scans levels outward from the root for the smallest level j
    holding a vertex beta that is out-scored by some deeper vertex alpha
    (beta is the smallest such label on level j, alpha the smallest deeper
    out-scorer); the returned plan re-hangs alpha below beta's parent.
    Failing that, looks for two same-level vertices whose children are
    score-misordered and swaps those children.

    Returns None exactly when neither disorder exists; for a degree-ordered
    labeling with monotone scores that means the tree is the greedy tree.
    Every returned plan has switch_sign DECREASE.
    """
    if scores.n != tree.n:
        raise ValueError(f"scores cover {scores.n} vertices but the tree has {tree.n}")
    if not scores.q_within_guarantee:
        warnings.warn(
            "q exceeds 1/(2n); the disorder scan is only guaranteed for q in (0, 1/(2n)]",
            RuntimeWarning,
            stacklevel=2,
        )
    elif not scores.strictly_decreasing:
        warnings.warn(
            "scores are not strictly decreasing in the label; the disorder scan "
            "assumes a degree-ordered labeling",
            RuntimeWarning,
            stacklevel=2,
        )
    info = tree.bfs_levels()
    depth = max(info.level.values())
    by_level: list[list[int]] = [[] for _ in range(depth + 1)]
    for u in range(1, tree.n + 1):
        by_level[info.level[u]].append(u)
    children: dict[int, list[int]] = {}
    for child in range(2, tree.n + 1):
        children.setdefault(info.parent[child], []).append(child)

    # Level pass: a deeper vertex out-scoring a shallower one. The root
    # carries the top score under monotone scores, so level 0 never
    # witnesses and the repair always has a parent above beta to use.
    suffix: list[list[int]] = [[] for _ in range(depth + 2)]
    for k in range(depth, 0, -1):
        suffix[k] = sorted(by_level[k] + suffix[k + 1])
    for j in range(1, depth):
        candidates = suffix[j + 1]
        for beta in by_level[j]:
            for alpha in candidates:
                if scores[alpha] > scores[beta]:
                    return _level_violation(info, children, alpha, beta)

    # Same-level pass: children misordered against their parents' scores.
    for group in by_level:
        if len(group) < 2:
            continue
        for a in group:
            kids_a = children.get(a)
            if not kids_a:
                continue
            for b in group:
                if b == a or not scores[a] > scores[b]:
                    continue
                kids_b = children.get(b)
                if not kids_b:
                    continue
                gamma = min(kids_a, key=lambda c: (scores[c], c))
                delta = min(kids_b, key=lambda c: (-scores[c], c))
                if scores[gamma] < scores[delta]:
                    return Violation(
                        ViolationKind.SAME_LEVEL,
                        {"alpha": a, "beta": b, "gamma": gamma, "delta": delta},
                        SwitchPlan(a, gamma, delta, b),
                    )
    return None


@dataclass(frozen=True)
class DescentStep:
    plan: SwitchPlan
    kind: ViolationKind
    pso_before: float
    pso_after: float
    so_before: float
    so_after: float


@dataclass(frozen=True)
class DescentTrace:
    """Record of one descent: the constant q and every applied switch."""

    q: float
    steps: tuple[DescentStep, ...]

    def to_json(self) -> list[dict]:
        """One object per step: the four switch vertices, the disorder kind,
        and the pseudo/plain index before and after."""
        return [
            {
                "u": s.plan.u,
                "v": s.plan.v,
                "w": s.plan.w,
                "t": s.plan.t,
                "kind": s.kind.value,
                "pso_before": s.pso_before,
                "pso_after": s.pso_after,
                "so_before": s.so_before,
                "so_after": s.so_after,
            }
            for s in self.steps
        ]


def descend(tree: LabeledTree, q: float) -> tuple[LabeledTree, DescentTrace]:
    """Apply disorder-removing switches until none remains.

    Requires the degree-ordered labeling deg(1) >= ... >= deg(n) and
    q in (0, 1/(2n)], so every step strictly lowers the pseudo index and the
    process terminates. The terminal tree is checked against the greedy
    construction; any discrepancy raises DescentInvariantError rather than
    being repaired.
    """
    degrees, ordered = degree_sequence_of(tree)
    if not ordered:
        raise ValueError(
            "descent requires the degree-ordered labeling deg(1) >= ... >= deg(n)"
        )
    if q <= 0 or (tree.n >= 2 and q > 1.0 / (2 * tree.n)):
        raise ValueError(f"q must lie in (0, 1/(2n)], got {q}")
    scores = score_assignment(tree, q)
    current = tree
    pso_current = pseudo_sombor(current, scores)
    steps = []
    while True:
        violation = find_violation(current, scores)
        if violation is None:
            break
        switched = apply_switch(current, violation.plan)
        rescored = score_assignment(switched, q)
        if rescored.values != scores.values:
            raise DescentInvariantError(
                "vertex scores changed across a degree-preserving switch"
            )
        pso_next = pseudo_sombor(switched, rescored)
        if not pso_next < pso_current:
            raise DescentInvariantError(
                f"switch failed to lower the pseudo index ({pso_current!r} -> {pso_next!r})"
            )
        steps.append(
            DescentStep(
                plan=violation.plan,
                kind=violation.kind,
                pso_before=pso_current,
                pso_after=pso_next,
                so_before=sombor(current),
                so_after=sombor(switched),
            )
        )
        current, scores, pso_current = switched, rescored, pso_next
    target = build_greedy(DegreeSequence(degrees))
    if current != target:
        raise DescentInvariantError(
            "descent stalled on a tree that is not the greedy construction"
        )
    return current, DescentTrace(q=q, steps=tuple(steps))
