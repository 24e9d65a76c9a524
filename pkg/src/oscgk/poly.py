"""Exact sparse polynomials over the rationals in x1..xn, y1..yn.

A monomial is a flat tuple of 2n integer exponents (x-block first, then
y-block).  Negative exponents are permitted at the type level; "proper"
monomials (all exponents >= 0) are what every module boundary expects, the
Laurent case only ever appears transiently while building certain
highest-weight vectors.

Coefficients are gmpy2.mpq rationals throughout: every rank and dimension
computed downstream relies on exact arithmetic, so no floats ever enter the
algebra layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, NamedTuple, Optional, Tuple, Union

from gmpy2 import mpq

Exponents = Tuple[int, ...]
RationalLike = Union[int, str, mpq]


@dataclass(frozen=True)
class RepConfig:
    """Ring shape: 2n variables with distinguished index ranges 1..n1 and n2+1..n."""

    n: int
    n1: int
    n2: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if not (1 <= self.n1 <= self.n2 <= self.n):
            raise ValueError(
                f"need 1 <= n1 <= n2 <= n, got n1={self.n1}, n2={self.n2}, n={self.n}"
            )


class GradedPair(NamedTuple):
    l1: int
    l2: int


def mono_one(n: int) -> Exponents:
    return (0,) * (2 * n)


def mono_x(i: int, n: int, exp: int = 1) -> Exponents:
    """Monomial x_i^exp (1-based index)."""
    if not 1 <= i <= n:
        raise IndexError(f"x index {i} out of range 1..{n}")
    return tuple(exp if v == i - 1 else 0 for v in range(2 * n))


def mono_y(i: int, n: int, exp: int = 1) -> Exponents:
    """Monomial y_i^exp (1-based index)."""
    if not 1 <= i <= n:
        raise IndexError(f"y index {i} out of range 1..{n}")
    return tuple(exp if v == n + i - 1 else 0 for v in range(2 * n))


def mono_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(u + v for u, v in zip(a, b))


def mono_degree(m: Exponents) -> int:
    return sum(m)


def mono_is_proper(m: Exponents) -> bool:
    return all(e >= 0 for e in m)


def mono_key(m: Exponents) -> Tuple[int, Exponents]:
    """Sort key realizing the graded-lex order (degree first, then the
    exponent tuple itself with earlier positions more significant)."""
    return (sum(m), m)


def compare_monomials(a: Exponents, b: Exponents) -> int:
    """Total order on monomials: -1, 0 or 1 as a <, ==, > b."""
    if len(a) != len(b):
        raise ValueError("monomials live in different rings")
    ka, kb = mono_key(a), mono_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def grading(m: Exponents, cfg: RepConfig) -> GradedPair:
    """Double grading of a monomial.

    l1 counts x-exponents above index n1 minus those at or below; l2 counts
    y-exponents at or below index n2 minus those above.
    """
    n = cfg.n
    if len(m) != 2 * n:
        raise ValueError(f"monomial has {len(m)} exponents, config expects {2 * n}")
    l1 = sum(m[cfg.n1 : n]) - sum(m[: cfg.n1])
    l2 = sum(m[n : n + cfg.n2]) - sum(m[n + cfg.n2 :])
    return GradedPair(l1, l2)


def _coeff(c: RationalLike) -> mpq:
    return c if isinstance(c, mpq) else mpq(c)


class Poly:
    """Sparse polynomial: dict from exponent tuple to nonzero rational.

    Instances are value-like; nothing mutates ``terms`` after construction,
    so they are safe to share freely (including across threads/processes).
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Dict[Exponents, RationalLike]] = None):
        self.n = n
        clean: Dict[Exponents, mpq] = {}
        if terms:
            for m, c in terms.items():
                if len(m) != 2 * n:
                    raise ValueError("exponent tuple of wrong length")
                q = _coeff(c)
                if q:
                    clean[m] = q
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: Dict[Exponents, mpq]) -> "Poly":
        """Trusted constructor: terms already normalized (nonzero mpq values)."""
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "Poly":
        return cls._raw(n, {mono_one(n): mpq(1)})

    @classmethod
    def monomial(cls, m: Exponents, coeff: RationalLike = 1) -> "Poly":
        if len(m) % 2:
            raise ValueError("exponent tuple must have even length")
        q = _coeff(coeff)
        return cls._raw(len(m) // 2, {m: q} if q else {})

    @classmethod
    def x(cls, i: int, n: int, exp: int = 1) -> "Poly":
        return cls.monomial(mono_x(i, n, exp))

    @classmethod
    def y(cls, i: int, n: int, exp: int = 1) -> "Poly":
        return cls.monomial(mono_y(i, n, exp))

    def is_zero(self) -> bool:
        return not self.terms

    def is_proper(self) -> bool:
        return all(mono_is_proper(m) for m in self.terms)

    def total_degree(self) -> int:
        """Max term degree; the zero polynomial reports 0."""
        return max((sum(m) for m in self.terms), default=0)

    def lead_monomial(self) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=mono_key)

    def lead_coefficient(self) -> mpq:
        return self.terms[self.lead_monomial()]

    def coefficient(self, m: Exponents) -> mpq:
        return self.terms.get(m, mpq(0))

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(self.n, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly._raw(self.n, {m: -c for m, c in self.terms.items()})

    def scale(self, c: RationalLike) -> "Poly":
        q = _coeff(c)
        if not q:
            return Poly.zero(self.n)
        return Poly._raw(self.n, {m: q * v for m, v in self.terms.items()})

    def __mul__(self, other: Union["Poly", RationalLike]) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        out: Dict[Exponents, mpq] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(u + v for u, v in zip(ma, mb))
                c = ca * cb
                v = out.get(m)
                if v is None:
                    out[m] = c
                else:
                    v = v + c
                    if v:
                        out[m] = v
                    else:
                        del out[m]
        return Poly._raw(self.n, out)

    def __rmul__(self, other: RationalLike) -> "Poly":
        return self.scale(other)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = Poly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def _check(self, other: "Poly") -> None:
        if self.n != other.n:
            raise ValueError("polynomials live in different rings")

    def sorted_terms(self) -> Iterable[Tuple[Exponents, mpq]]:
        for m in sorted(self.terms, key=mono_key, reverse=True):
            yield m, self.terms[m]

    def render(self) -> str:
        """Canonical text form: descending terms, explicit rational coefficients,
        e.g. ``-1 x1^2 y2 + 3/2 y1``."""
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            body = render_monomial(m, self.n)
            text = str(c) if not body else f"{c} {body}"
            if not parts:
                parts.append(text)
            elif c > 0:
                parts.append(f" + {text}")
            else:
                neg = str(-c) if not body else f"{-c} {body}"
                parts.append(f" - {neg}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.render()})"


def render_monomial(m: Exponents, n: int) -> str:
    parts = []
    for v, e in enumerate(m):
        if e == 0:
            continue
        name = f"x{v + 1}" if v < n else f"y{v - n + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts)


def is_graded_homogeneous(p: Poly, cfg: RepConfig) -> Optional[GradedPair]:
    """Common grading of all terms, or None if they disagree.

    The zero polynomial counts as homogeneous of grading (0, 0).
    """
    if not p.terms:
        return GradedPair(0, 0)
    it = iter(p.terms)
    g = grading(next(it), cfg)
    for m in it:
        if grading(m, cfg) != g:
            return None
    return g
