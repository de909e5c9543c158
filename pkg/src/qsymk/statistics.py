"""Permutations and the thirteen descent statistics.

A permutation here is any sequence of distinct positive integers, not
necessarily 1..n.  Every statistic in `StatisticId` is a descent
statistic: its value depends only on the descent composition.  The
permutation-level evaluators work directly from letter comparisons,
while the composition-level evaluators work from descent positions;
the two routes are independent implementations and the test suite
checks them against each other exhaustively.

Position conventions (1-based, word of length n):
  descent   i in [n-1]     with w_i > w_{i+1}
  peak      i in [2, n-1]  with w_{i-1} < w_i > w_{i+1}
  valley    i in [2, n-1]  with w_{i-1} > w_i < w_{i+1}
  left peak   a peak, or i = 1 with w_1 > w_2
  right peak  a peak, or i = n with w_{n-1} < w_n
  exterior peak  a left or right peak; for n = 1 the single position 1
"""

from __future__ import annotations

import enum
import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Union

from .compositions import Composition, compositions_of, index_of
from .errors import DisjointnessError

StatValue = Union[int, frozenset]


@dataclass(frozen=True)
class Permutation:
    """A sequence of distinct positive integers."""

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if not isinstance(x, int) or x < 1:
                raise ValueError(f"letters must be positive integers, got {letters!r}")
        if len(set(letters)) != len(letters):
            raise ValueError(f"letters must be distinct, got {letters!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if all(x <= 9 for x in self.letters):
            return "".join(str(x) for x in self.letters)
        return ",".join(str(x) for x in self.letters)


def parse_permutation(text: str) -> Permutation:
    """Parse `713649` (one-digit letters) or `10,2,7` (comma-separated)."""
    s = text.strip()
    if "," in s:
        return Permutation(tuple(int(x) for x in s.split(",")))
    return Permutation(tuple(int(ch) for ch in s))


class StatisticId(enum.Enum):
    """The closed set of descent statistics, named as usually written."""

    Des = "Des"
    des = "des"
    maj = "maj"
    Pk = "Pk"
    pk = "pk"
    Epk = "Epk"
    epk = "epk"
    Lpk = "Lpk"
    lpk = "lpk"
    Rpk = "Rpk"
    rpk = "rpk"
    Val = "Val"
    val = "val"


ALL_STATISTICS: tuple[StatisticId, ...] = tuple(StatisticId)


def parse_statistic(name: str) -> StatisticId:
    """Look up a statistic by its case-sensitive name."""
    for stat in StatisticId:
        if stat.value == name:
            return stat
    raise ValueError(f"unknown statistic {name!r}; expected one of "
                     + ", ".join(s.value for s in StatisticId))


# -- permutations -----------------------------------------------------------

def standardize(p: Permutation) -> Permutation:
    """Replace the smallest letter by 1, the second smallest by 2, and so on.

    >>> str(standardize(parse_permutation("83416")))
    '52314'
    """
    rank = {x: r + 1 for r, x in enumerate(sorted(p.letters))}
    return Permutation(tuple(rank[x] for x in p.letters))


def perm_descent_set(p: Permutation) -> frozenset[int]:
    w = p.letters
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def perm_descent_composition(p: Permutation) -> Composition:
    """Lengths of the maximal increasing runs, in order.

    >>> perm_descent_composition(parse_permutation("379426"))
    Composition(parts=(3, 1, 2))
    """
    w = p.letters
    if not w:
        return Composition(())
    parts = []
    run = 1
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return Composition(tuple(parts))


def _perm_peaks(w: tuple[int, ...]) -> frozenset[int]:
    n = len(w)
    return frozenset(
        i for i in range(2, n) if w[i - 2] < w[i - 1] > w[i]
    )


def _perm_valleys(w: tuple[int, ...]) -> frozenset[int]:
    n = len(w)
    return frozenset(
        i for i in range(2, n) if w[i - 2] > w[i - 1] < w[i]
    )


def _perm_left_peaks(w: tuple[int, ...]) -> frozenset[int]:
    out = set(_perm_peaks(w))
    if len(w) >= 2 and w[0] > w[1]:
        out.add(1)
    return frozenset(out)


def _perm_right_peaks(w: tuple[int, ...]) -> frozenset[int]:
    out = set(_perm_peaks(w))
    n = len(w)
    if n >= 2 and w[n - 2] < w[n - 1]:
        out.add(n)
    return frozenset(out)


def _perm_exterior_peaks(w: tuple[int, ...]) -> frozenset[int]:
    if len(w) == 1:
        return frozenset({1})
    return _perm_left_peaks(w) | _perm_right_peaks(w)


_PERM_EVAL: dict[StatisticId, Callable[[tuple[int, ...]], StatValue]] = {
    StatisticId.Des: lambda w: frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i]),
    StatisticId.des: lambda w: sum(1 for i in range(1, len(w)) if w[i - 1] > w[i]),
    StatisticId.maj: lambda w: sum(i for i in range(1, len(w)) if w[i - 1] > w[i]),
    StatisticId.Pk: _perm_peaks,
    StatisticId.pk: lambda w: len(_perm_peaks(w)),
    StatisticId.Epk: _perm_exterior_peaks,
    StatisticId.epk: lambda w: len(_perm_exterior_peaks(w)),
    StatisticId.Lpk: _perm_left_peaks,
    StatisticId.lpk: lambda w: len(_perm_left_peaks(w)),
    StatisticId.Rpk: _perm_right_peaks,
    StatisticId.rpk: lambda w: len(_perm_right_peaks(w)),
    StatisticId.Val: _perm_valleys,
    StatisticId.val: lambda w: len(_perm_valleys(w)),
}


def eval_on_permutation(stat: StatisticId, p: Permutation) -> StatValue:
    """Evaluate a statistic directly from letter comparisons."""
    return _PERM_EVAL[stat](p.letters)


# -- compositions -----------------------------------------------------------
#
# With D the descent set of L and n = |L|: i in [n-1] is a descent of
# every word with descent composition L, so peaks are the i in [2, n-1]
# with i in D and i-1 not in D, valleys the i with i not in D and i-1
# in D, and the boundary positions follow the same comparisons.

def _comp_peaks(n: int, mask: int) -> frozenset[int]:
    return frozenset(
        i for i in range(2, n)
        if (mask >> (i - 1)) & 1 and not (mask >> (i - 2)) & 1
    )


def _comp_valleys(n: int, mask: int) -> frozenset[int]:
    return frozenset(
        i for i in range(2, n)
        if not (mask >> (i - 1)) & 1 and (mask >> (i - 2)) & 1
    )


def _comp_left_peaks(n: int, mask: int) -> frozenset[int]:
    out = set(_comp_peaks(n, mask))
    if n >= 2 and mask & 1:
        out.add(1)
    return frozenset(out)


def _comp_right_peaks(n: int, mask: int) -> frozenset[int]:
    out = set(_comp_peaks(n, mask))
    if n >= 2 and not (mask >> (n - 2)) & 1:
        out.add(n)
    return frozenset(out)


def _comp_exterior_peaks(n: int, mask: int) -> frozenset[int]:
    if n == 1:
        return frozenset({1})
    return _comp_left_peaks(n, mask) | _comp_right_peaks(n, mask)


def _mask_positions(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1)


_COMP_EVAL: dict[StatisticId, Callable[[int, int], StatValue]] = {
    StatisticId.Des: lambda n, m: _mask_positions(m),
    StatisticId.des: lambda n, m: m.bit_count(),
    StatisticId.maj: lambda n, m: sum(_mask_positions(m)),
    StatisticId.Pk: _comp_peaks,
    StatisticId.pk: lambda n, m: len(_comp_peaks(n, m)),
    StatisticId.Epk: _comp_exterior_peaks,
    StatisticId.epk: lambda n, m: len(_comp_exterior_peaks(n, m)),
    StatisticId.Lpk: _comp_left_peaks,
    StatisticId.lpk: lambda n, m: len(_comp_left_peaks(n, m)),
    StatisticId.Rpk: _comp_right_peaks,
    StatisticId.rpk: lambda n, m: len(_comp_right_peaks(n, m)),
    StatisticId.Val: _comp_valleys,
    StatisticId.val: lambda n, m: len(_comp_valleys(n, m)),
}


def eval_on_composition(stat: StatisticId, comp: Composition) -> StatValue:
    """Evaluate a statistic from the descent set alone; agrees with
    :func:`eval_on_permutation` on any word with that descent composition."""
    return _COMP_EVAL[stat](comp.n, index_of(comp))


DescentStatistic = Union[StatisticId, Callable[[Composition], Hashable]]


def comp_stat_value(stat: DescentStatistic, comp: Composition) -> Hashable:
    """Value of a statistic on a composition; accepts a StatisticId or
    any callable on compositions (used for planted control statistics)."""
    if isinstance(stat, StatisticId):
        return eval_on_composition(stat, comp)
    return stat(comp)


def stat_name(stat: DescentStatistic) -> str:
    if isinstance(stat, StatisticId):
        return stat.value
    return getattr(stat, "__name__", str(stat))


def equivalence_classes(stat: DescentStatistic, n: int) -> list[list[Composition]]:
    """Partition of the compositions of n into blocks of equal statistic
    value.  Blocks and their members are in ascending index order."""
    blocks: dict[Hashable, list[Composition]] = {}
    for comp in compositions_of(n):
        blocks.setdefault(comp_stat_value(stat, comp), []).append(comp)
    return sorted(blocks.values(), key=lambda block: index_of(block[0]))


# -- shuffles ---------------------------------------------------------------

def shuffles(p: Permutation, q: Permutation) -> set[Permutation]:
    """All interleavings of two disjoint permutations.

    >>> sorted(str(t) for t in shuffles(parse_permutation("13"), parse_permutation("42")))
    ['1342', '1423', '1432', '4123', '4132', '4213']
    """
    if set(p.letters) & set(q.letters):
        raise DisjointnessError(f"permutations share letters: {p} and {q}")
    total = len(p) + len(q)
    out = set()
    for spots in combinations(range(total), len(p)):
        word: list[int] = [0] * total
        chosen = set(spots)
        it_p = iter(p.letters)
        it_q = iter(q.letters)
        for i in range(total):
            word[i] = next(it_p) if i in chosen else next(it_q)
        out.add(Permutation(tuple(word)))
    return out


PermStatistic = Union[StatisticId, Callable[[Permutation], Hashable]]


def _perm_evaluator(stat: PermStatistic) -> Callable[[Permutation], Hashable]:
    if isinstance(stat, StatisticId):
        return lambda p: eval_on_permutation(stat, p)
    return stat


def shuffle_distribution(stat: PermStatistic, p: Permutation, q: Permutation) -> Counter:
    """Multiset of statistic values over all shuffles of p and q."""
    evaluate = _perm_evaluator(stat)
    return Counter(evaluate(t) for t in shuffles(p, q))


def realize_permutation(comp: Composition, offset: int = 0) -> Permutation:
    """A word on {offset+1, ..., offset+n} with the given descent composition.

    Built block by block: the r-th part takes the consecutive values
    immediately above everything used by the later parts, written in
    increasing order, which forces a descent exactly between blocks.

    >>> str(realize_permutation(Composition((2, 1))))
    '231'
    """
    letters: list[int] = []
    remaining = comp.n
    for j in comp.parts:
        base = offset + remaining - j
        letters.extend(range(base + 1, base + j + 1))
        remaining -= j
    return Permutation(tuple(letters))


def _random_representatives(
    a_comp: Composition, b_comp: Composition, rng: random.Random
) -> tuple[Permutation, Permutation]:
    """A second disjoint pair with the same descent compositions, on a
    randomly interleaved alphabet."""
    a, b = a_comp.n, b_comp.n
    pool = rng.sample(range(1, 3 * (a + b) + 2), a + b) if a + b else []
    first = set(rng.sample(pool, a)) if a else set()
    vals_a = sorted(x for x in pool if x in first)
    vals_b = sorted(x for x in pool if x not in first)

    def order_copy(p: Permutation, values: list[int]) -> Permutation:
        rank = {x: r for r, x in enumerate(sorted(p.letters))}
        return Permutation(tuple(values[rank[x]] for x in p.letters))

    return (
        order_copy(realize_permutation(a_comp), vals_a),
        order_copy(realize_permutation(b_comp), vals_b),
    )


@dataclass(frozen=True)
class ShuffleCompatibilityReport:
    statistic: str
    max_total_length: int
    compatible: bool
    witness: dict | None = None

    def as_dict(self) -> dict:
        out = {
            "statistic": self.statistic,
            "max_total_length": self.max_total_length,
            "compatible": self.compatible,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def check_shuffle_compatible(
    stat: PermStatistic, max_total_len: int, seed: int = 0
) -> ShuffleCompatibilityReport:
    """Brute-force shuffle-compatibility oracle.

    For every pair of lengths (a, b) with a + b <= max_total_len and
    every pair of descent compositions, the multiset of statistic values
    over all shuffles is computed for a canonical disjoint pair of
    representatives and for a second randomized pair; the distributions
    must agree between representative choices, and across all
    composition pairs with the same (a, b, value, value) signature.
    """
    rng = random.Random(seed)
    evaluate = _perm_evaluator(stat)
    name = stat.value if isinstance(stat, StatisticId) else getattr(stat, "__name__", str(stat))
    for total in range(1, max_total_len + 1):
        for a in range(0, total + 1):
            b = total - a
            groups: dict = {}
            for left in compositions_of(a):
                for right in compositions_of(b):
                    p1 = realize_permutation(left)
                    q1 = realize_permutation(right, offset=a)
                    dist = Counter(evaluate(t) for t in shuffles(p1, q1))
                    p2, q2 = _random_representatives(left, right, rng)
                    dist2 = Counter(evaluate(t) for t in shuffles(p2, q2))
                    if dist != dist2:
                        return ShuffleCompatibilityReport(
                            name, max_total_len, False,
                            witness={
                                "kind": "representative-dependence",
                                "compositions": [str(left), str(right)],
                                "pair1": [str(p1), str(q1)],
                                "pair2": [str(p2), str(q2)],
                            },
                        )
                    key = (a, b, evaluate(p1), evaluate(q1))
                    seen = groups.get(key)
                    if seen is None:
                        groups[key] = (left, right, dist)
                    elif seen[2] != dist:
                        return ShuffleCompatibilityReport(
                            name, max_total_len, False,
                            witness={
                                "kind": "distribution-mismatch",
                                "pair1": [str(seen[0]), str(seen[1])],
                                "pair2": [str(left), str(right)],
                            },
                        )
    return ShuffleCompatibilityReport(name, max_total_len, True)
