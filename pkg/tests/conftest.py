"""Shared helpers: an independent dense rank oracle and small builders.

The dense elimination below deliberately uses fractions.Fraction and plain
row reduction so it shares no code path (and no arithmetic backend) with the
incremental echelon engine it is used to check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import pytest

from oscgk.poly import Poly, mono_key


def dense_rank(polys: Sequence[Poly]) -> int:
    """Rank of the coefficient matrix via dense Gaussian elimination over Q."""
    monos = sorted({m for p in polys for m in p.terms}, key=mono_key, reverse=True)
    col = {m: j for j, m in enumerate(monos)}
    rows: List[List[Fraction]] = []
    for p in polys:
        row = [Fraction(0)] * len(monos)
        for m, c in p.terms.items():
            row[col[m]] = Fraction(int(c.numerator), int(c.denominator))
        rows.append(row)
    rank = 0
    for j in range(len(monos)):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][j]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][j]
        for i in range(rank + 1, len(rows)):
            if rows[i][j]:
                f = rows[i][j] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def random_poly(rng: random.Random, n: int, terms: int = 4, max_exp: int = 3) -> Poly:
    d: Dict[Tuple[int, ...], int] = {}
    for _ in range(terms):
        m = tuple(rng.randint(0, max_exp) for _ in range(2 * n))
        d[m] = rng.randint(-5, 5)
    return Poly(n, d)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
