"""Incremental exact rank engine over the rationals.

An EchelonBasis keeps one monic polynomial per leading monomial (graded-lex
order).  Rows are only leading-term reduced against each other, not fully
inter-reduced: distinct leading monomials are all that rank and membership
need, and anything more is wasted exact arithmetic.

The basis is the single authority for every dimension count downstream; it
is single-writer (inserts mutate), while finished bases can be read freely.
"""

from __future__ import annotations

import enum
from collections import Counter
from heapq import heapify, heappop, heappush
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .poly import Exponents, Poly, RepConfig
from .rep import weight_of


class InsertResult(enum.Enum):
    ADDED = "added"
    DEPENDENT = "dependent"


def _heap_key(m: Exponents) -> Tuple[int, Exponents]:
    # heapq is a min-heap; negate degree and every exponent so the graded-lex
    # maximum surfaces first
    return (-sum(m), tuple(-e for e in m))


class EchelonBasis:
    """Ordered list of monic rows with pairwise distinct leading monomials."""

    __slots__ = ("n", "rows", "index", "_tails")

    def __init__(self, n: int):
        self.n = n
        self.rows: List[Poly] = []
        self.index: Dict[Exponents, int] = {}
        # row terms minus the leading monomial, for the reduction inner loop
        self._tails: List[Dict[Exponents, mpq]] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def insert(self, p: Poly) -> InsertResult:
        """Reduce p by matching leading monomials; adjoin the monic remainder.

        Returns ADDED when the rank grew by one, DEPENDENT when p reduced to
        zero.  Insertion order is the only source of row order, so identical
        insertion sequences produce identical bases.
        """
        if p.n != self.n:
            raise ValueError("polynomial lives in a different ring")
        work = dict(p.terms)
        if not work:
            return InsertResult.DEPENDENT
        index = self.index
        rows = self.rows
        heap = [(_heap_key(m), m) for m in work]
        heapify(heap)
        while True:
            lead: Optional[Exponents] = None
            while heap:
                _, m = heap[0]
                if m in work:
                    lead = m
                    break
                heappop(heap)
            if lead is None:
                return InsertResult.DEPENDENT
            ridx = index.get(lead)
            if ridx is None:
                lc = work[lead]
                if lc != 1:
                    inv = 1 / lc
                    work = {m: c * inv for m, c in work.items()}
                rows.append(Poly._raw(self.n, work))
                tail = dict(work)
                del tail[lead]
                self._tails.append(tail)
                index[lead] = len(rows) - 1
                return InsertResult.ADDED
            heappop(heap)
            c = work.pop(lead)
            tail = self._tails[ridx]
            get = work.get
            for m, rc in tail.items():
                v = get(m)
                if v is None:
                    work[m] = -c * rc
                    heappush(heap, (_heap_key(m), m))
                else:
                    v = v - c * rc
                    if v:
                        work[m] = v
                    else:
                        del work[m]

    def extend(self, polys: Sequence[Poly]) -> int:
        """Insert several polynomials; returns how many were added."""
        added = 0
        for p in polys:
            if self.insert(p) is InsertResult.ADDED:
                added += 1
        return added

    def contains_lead(self, m: Exponents) -> bool:
        return m in self.index

    def weight_ledger(self, cfg: RepConfig, cartan=None) -> Counter:
        """Histogram of row weights; every row must be a weight vector."""
        ledger: Counter = Counter()
        for row in self.rows:
            ledger[weight_of(row, cfg, cartan=cartan)] += 1
        return ledger

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)
