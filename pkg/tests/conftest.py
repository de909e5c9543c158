"""Shared helpers for the test suite."""

from __future__ import annotations

from qsymk.statistics import Permutation


def complement_permutation(p: Permutation) -> Permutation:
    """Replace the i-th smallest letter by the i-th largest."""
    ordered = sorted(p.letters)
    swap = {x: ordered[len(ordered) - 1 - i] for i, x in enumerate(ordered)}
    return Permutation(tuple(swap[x] for x in p.letters))


def reverse_permutation(p: Permutation) -> Permutation:
    return Permutation(p.letters[::-1])
