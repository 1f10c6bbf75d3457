"""Exhaustive enumeration of the trees with a fixed degree sequence and
verification that the greedy tree attains the minimum Sombor index.

Enumeration walks the distinct permutations of the code multiset in which
label u occurs deg(u) - 1 times, decoding each permutation; that visits
every labeled tree of the class exactly once.
"""

import math
import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .degseq import DegreeSequence, require_tree_realizable
from .greedy import build_greedy
from .indices import (
    DEFAULT_VALUE_TOLERANCE,
    QConstant,
    SpectrumSummary,
    compute_q,
    pseudo_sombor,
    score_assignment,
    sombor,
)
from .tree_core import LabeledTree, PruferCode, prufer_decode

DEFAULT_TREE_CAP = 10_000_000


class ResourceCapExceededError(RuntimeError):
    """The tree class is too large for exhaustive verification."""


def count_trees(seq: DegreeSequence) -> int:
    """Number of labeled trees realizing the sequence:
    (n-2)! / prod((d_i - 1)!) for n >= 2, and 1 for the one-vertex tree."""
    require_tree_realizable(seq)
    if seq.n == 1:
        return 1
    denominator = 1
    for d in seq.degrees:
        denominator *= math.factorial(d - 1)
    return math.factorial(seq.n - 2) // denominator


def _code_multiset(seq: DegreeSequence) -> list[int]:
    """Label u repeated deg(u) - 1 times, in ascending order."""
    items: list[int] = []
    for label, d in enumerate(seq.degrees, start=1):
        items.extend([label] * (d - 1))
    return items


def _next_permutation(items: list[int]) -> bool:
    """Advance to the lexicographic successor in place; False at the end."""
    i = len(items) - 2
    while i >= 0 and items[i] >= items[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(items) - 1
    while items[j] <= items[i]:
        j -= 1
    items[i], items[j] = items[j], items[i]
    items[i + 1 :] = reversed(items[i + 1 :])
    return True


def enumerate_trees(seq: DegreeSequence) -> Iterator[LabeledTree]:
    """Yield every labeled tree with deg(u) = d_u exactly once, in the
    lexicographic order of the underlying codes."""
    require_tree_realizable(seq)
    if seq.n == 1:
        yield LabeledTree(1, [])
        return
    items = _code_multiset(seq)
    while True:
        yield prufer_decode(PruferCode(seq.n, tuple(items)))
        if not _next_permutation(items):
            break


def sample_tree(seq: DegreeSequence, rng: random.Random) -> LabeledTree:
    """Uniform sample from the tree class: shuffle the code multiset and
    decode (every distinct arrangement is equally likely)."""
    require_tree_realizable(seq)
    if seq.n == 1:
        return LabeledTree(1, [])
    items = _code_multiset(seq)
    rng.shuffle(items)
    return prufer_decode(PruferCode(seq.n, tuple(items)))


def sombor_value_counts(seq: DegreeSequence) -> Counter:
    """Exact index value -> number of trees attaining it.

    Counter addition merges partial counts from any partition of the
    enumeration, in any order, without changing the final spectrum.
    """
    counts: Counter = Counter()
    for tree in enumerate_trees(seq):
        counts[sombor(tree)] += 1
    return counts


def spectrum_from_counts(
    counts: Counter, tolerance: float = DEFAULT_VALUE_TOLERANCE
) -> SpectrumSummary:
    """Cluster exact values whose consecutive gap is at most the tolerance;
    each cluster is represented by its smallest member."""
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    if not counts:
        raise ValueError("no values to summarize")
    values: list[float] = []
    multiplicities: list[int] = []
    previous = None
    for value in sorted(counts):
        if previous is not None and value - previous <= tolerance:
            multiplicities[-1] += counts[value]
        else:
            values.append(value)
            multiplicities.append(counts[value])
        previous = value
    return SpectrumSummary(tuple(values), tuple(multiplicities))


def sombor_spectrum(
    seq: DegreeSequence, tolerance: float = DEFAULT_VALUE_TOLERANCE
) -> SpectrumSummary:
    """Distinct Sombor values over the whole tree class, with multiplicities."""
    return spectrum_from_counts(sombor_value_counts(seq), tolerance)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the exhaustive minimality check for one degree sequence.

    ``minimum_attained`` is |SO(greedy) - z1| <= tolerance. ``sandwich_holds``
    reports whether every tree's pseudo index lies strictly between
    SO - (z2 - z1)/2 and SO; it is None when the class has a single value
    (no gap to measure) or n = 1.
    """

    seq: DegreeSequence
    tree_count: int
    z1: float
    z2: float | None
    greedy_so: float
    minimum_attained: bool
    greedy_is_argmin: bool
    sandwich_holds: bool | None
    q_used: QConstant | None
    tolerance: float

    def to_json_dict(self) -> dict:
        return {
            "degrees": self.seq.render(),
            "n": self.seq.n,
            "tree_count": self.tree_count,
            "z1": self.z1,
            "z2": self.z2,
            "greedy_so": self.greedy_so,
            "minimum_attained": self.minimum_attained,
            "greedy_is_argmin": self.greedy_is_argmin,
            "sandwich_holds": self.sandwich_holds,
            "q": self.q_used.value if self.q_used else None,
            "q_branch": self.q_used.branch if self.q_used else None,
            "tolerance": self.tolerance,
        }


def verify_greedy_minimum(
    seq: DegreeSequence,
    tolerance: float = DEFAULT_VALUE_TOLERANCE,
    cap: int = DEFAULT_TREE_CAP,
) -> VerificationReport:
    """Exhaustively check that the greedy tree attains the smallest Sombor
    value of its class, and that every pseudo index respects the half-gap
    sandwich when at least two distinct values exist.

    Refuses classes larger than ``cap`` trees: verification is
    all-or-nothing, never truncated.
    """
    require_tree_realizable(seq)
    total = count_trees(seq)
    if total > cap:
        raise ResourceCapExceededError(
            f"class of {seq.render()} holds {total} trees, over the cap of {cap}"
        )
    greedy_tree = build_greedy(seq)
    greedy_so = sombor(greedy_tree)
    if seq.n == 1:
        return VerificationReport(
            seq=seq,
            tree_count=1,
            z1=greedy_so,
            z2=None,
            greedy_so=greedy_so,
            minimum_attained=True,
            greedy_is_argmin=True,
            sandwich_holds=None,
            q_used=None,
            tolerance=tolerance,
        )
    spectrum = sombor_spectrum(seq, tolerance)
    if spectrum.tree_count != total:
        raise RuntimeError(
            f"enumeration yielded {spectrum.tree_count} trees, expected {total}"
        )
    q = compute_q(seq, spectrum)
    z1 = spectrum.z1
    z2 = spectrum.z2
    minimum_attained = abs(greedy_so - z1) <= tolerance
    greedy_is_argmin = greedy_so <= z1 + tolerance
    sandwich: bool | None = None
    if z2 is not None:
        half_gap = (z2 - z1) / 2
        # Scores depend only on the per-label degrees, which every tree of
        # the class shares, so one assignment serves the whole sweep.
        scores = score_assignment(greedy_tree, q.value)
        sandwich = True
        for tree in enumerate_trees(seq):
            so = sombor(tree)
            pso = pseudo_sombor(tree, scores)
            if not (so - half_gap < pso < so):
                sandwich = False
                break
    return VerificationReport(
        seq=seq,
        tree_count=total,
        z1=z1,
        z2=z2,
        greedy_so=greedy_so,
        minimum_attained=minimum_attained,
        greedy_is_argmin=greedy_is_argmin,
        sandwich_holds=sandwich,
        q_used=q,
        tolerance=tolerance,
    )


def _partitions(total: int, parts: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of ``parts`` positive integers summing to
    ``total``, first part at most ``max_part``, in descending lex order."""
    if parts == 1:
        if 1 <= total <= max_part:
            yield (total,)
        return
    lowest = -(-total // parts)  # ceil: keep the remainder fillable non-increasingly
    highest = min(max_part, total - (parts - 1))
    for first in range(highest, lowest - 1, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def realizable_sequences(max_n: int, min_n: int = 2) -> Iterator[DegreeSequence]:
    """All non-increasing tree-realizable degree sequences with
    min_n <= n <= max_n, ordered by length then descending lexicographically."""
    if max_n < min_n:
        return
    for n in range(min_n, max_n + 1):
        if n == 1:
            yield DegreeSequence((0,))
            continue
        for partition in _partitions(2 * (n - 1), n, n - 1):
            yield DegreeSequence(partition)


def format_report_table(reports: list[VerificationReport], digits: int = 10) -> str:
    """Fixed-width text table, one row per verified degree sequence."""

    def fmt(x) -> str:
        if x is None:
            return "-"
        if isinstance(x, bool):
            return "yes" if x else "no"
        if isinstance(x, float):
            return format(x, f".{digits}g")
        return str(x)

    headers = [
        "degrees", "n", "trees", "z1", "z2", "greedy_SO",
        "q", "q_rule", "min", "argmin", "sandwich",
    ]
    rows = []
    for r in reports:
        rows.append([
            r.seq.render(),
            str(r.seq.n),
            str(r.tree_count),
            fmt(r.z1),
            fmt(r.z2),
            fmt(r.greedy_so),
            fmt(r.q_used.value if r.q_used else None),
            r.q_used.branch if r.q_used else "-",
            fmt(r.minimum_attained),
            fmt(r.greedy_is_argmin),
            fmt(r.sandwich_holds),
        ])
    widths = [
        max(len(headers[col]), max((len(row[col]) for row in rows), default=0))
        for col in range(len(headers))
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"
