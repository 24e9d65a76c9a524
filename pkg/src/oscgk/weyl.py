"""Normal-ordered differential operators on the 2n-variable polynomial ring.

An operator is a finite sum of terms (coefficient, multiply-by-monomial,
then apply partial derivatives).  Keeping every operator in that normal
order gives a canonical form, so operator identities can be decided by plain
term-by-term comparison; that is what the bracket verification relies on.

Derivatives follow the Laurent rule d/dx(x^e) = e*x^(e-1) for any integer e,
so operators act on improper monomials as well.
"""

from __future__ import annotations

from itertools import product
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from gmpy2 import mpq

from .poly import Exponents, Poly, RationalLike, mono_key, mono_one

OpKey = Tuple[Exponents, Exponents]  # (multiplication exponents, derivative orders)


def falling(e: int, d: int) -> int:
    """Falling factorial e(e-1)...(e-d+1); zero iff 0 <= e < d."""
    if 0 <= e < d:
        return 0
    out = 1
    for t in range(d):
        out *= e - t
    return out


class WeylOp:
    """Finite sum of normal-ordered terms, keyed by (mult, diff) exponent pairs."""

    __slots__ = ("n", "terms", "_compiled_cache")

    def __init__(self, n: int, terms: Optional[Dict[OpKey, RationalLike]] = None):
        self.n = n
        clean: Dict[OpKey, mpq] = {}
        if terms:
            for (mult, diff), c in terms.items():
                if len(mult) != 2 * n or len(diff) != 2 * n:
                    raise ValueError("operator term of wrong arity")
                if any(e < 0 for e in mult) or any(e < 0 for e in diff):
                    raise ValueError("operator exponents must be nonnegative")
                q = c if isinstance(c, mpq) else mpq(c)
                if q:
                    clean[(mult, diff)] = q
        self.terms = clean
        self._compiled_cache = None

    @classmethod
    def _raw(cls, n: int, terms: Dict[OpKey, mpq]) -> "WeylOp":
        op = cls.__new__(cls)
        op.n = n
        op.terms = terms
        op._compiled_cache = None
        return op

    @classmethod
    def zero(cls, n: int) -> "WeylOp":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, c: RationalLike, n: int) -> "WeylOp":
        q = c if isinstance(c, mpq) else mpq(c)
        key = (mono_one(n), mono_one(n))
        return cls._raw(n, {key: q} if q else {})

    @classmethod
    def term(cls, c: RationalLike, mult: Exponents, diff: Exponents) -> "WeylOp":
        if len(mult) != len(diff) or len(mult) % 2:
            raise ValueError("mult/diff tuples must share an even length")
        return cls(len(mult) // 2, {(mult, diff): c})

    # single-variable building blocks (1-based indices; x vars 1..n, y vars 1..n)

    @classmethod
    def x_mult(cls, i: int, n: int) -> "WeylOp":
        return cls.term(1, _unit(i - 1, n), mono_one(n))

    @classmethod
    def y_mult(cls, i: int, n: int) -> "WeylOp":
        return cls.term(1, _unit(n + i - 1, n), mono_one(n))

    @classmethod
    def dx(cls, i: int, n: int) -> "WeylOp":
        return cls.term(1, mono_one(n), _unit(i - 1, n))

    @classmethod
    def dy(cls, i: int, n: int) -> "WeylOp":
        return cls.term(1, mono_one(n), _unit(n + i - 1, n))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "WeylOp") -> "WeylOp":
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key)
            if v is None:
                out[key] = c
            else:
                v = v + c
                if v:
                    out[key] = v
                else:
                    del out[key]
        return WeylOp._raw(self.n, out)

    def __sub__(self, other: "WeylOp") -> "WeylOp":
        return self + (-other)

    def __neg__(self) -> "WeylOp":
        return WeylOp._raw(self.n, {k: -c for k, c in self.terms.items()})

    def scale(self, c: RationalLike) -> "WeylOp":
        q = c if isinstance(c, mpq) else mpq(c)
        if not q:
            return WeylOp.zero(self.n)
        return WeylOp._raw(self.n, {k: q * v for k, v in self.terms.items()})

    def __mul__(self, c: RationalLike) -> "WeylOp":
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeylOp) and self.n == other.n and self.terms == other.terms
        )

    __hash__ = None  # type: ignore[assignment]

    def _check(self, other: "WeylOp") -> None:
        if self.n != other.n:
            raise ValueError("operators act on different rings")

    def _compiled(self) -> List[Tuple[mpq, List[Tuple[int, int]], List[Tuple[int, int]]]]:
        """Per-term (coeff, sparse exponent shift, derivative list) for fast apply."""
        cached = self._compiled_cache
        if cached is None:
            cached = []
            for (mult, diff), c in self.terms.items():
                shift = [(v, m - d) for v, (m, d) in enumerate(zip(mult, diff)) if m != d]
                dlist = [(v, d) for v, d in enumerate(diff) if d]
                cached.append((c, shift, dlist))
            self._compiled_cache = cached
        return cached

    def apply(self, p: Poly) -> Poly:
        """Act on a polynomial; exact and linear, Laurent exponents allowed."""
        if p.n != self.n:
            raise ValueError("operator and polynomial live in different rings")
        out: Dict[Exponents, mpq] = {}
        for c, shift, dlist in self._compiled():
            for m, a in p.terms.items():
                ff = 1
                for v, d in dlist:
                    e = m[v]
                    if 0 <= e < d:
                        ff = 0
                        break
                    for t in range(d):
                        ff *= e - t
                if not ff:
                    continue
                if shift:
                    lm = list(m)
                    for v, s in shift:
                        lm[v] += s
                    mono = tuple(lm)
                else:
                    mono = m
                val = c * ff * a if ff != 1 else c * a
                prev = out.get(mono)
                if prev is None:
                    out[mono] = val
                else:
                    prev = prev + val
                    if prev:
                        out[mono] = prev
                    else:
                        del out[mono]
        return Poly._raw(self.n, out)

    def max_degree_shift(self) -> int:
        """Upper bound on total-degree increase under apply."""
        return max((sum(m) - sum(d) for m, d in self.terms), default=0)

    def sorted_terms(self) -> Iterable[Tuple[OpKey, mpq]]:
        for key in sorted(self.terms, key=lambda k: (mono_key(k[0]), mono_key(k[1])), reverse=True):
            yield key, self.terms[key]

    def render(self) -> str:
        """Readable normal-ordered form, e.g. ``-x1*x2 + y1*y2`` or ``x1 d/dx1 + 1``."""
        if not self.terms:
            return "0"
        parts = []
        for (mult, diff), c in self.sorted_terms():
            mult_str = "*".join(
                _var_power(v, e, self.n) for v, e in enumerate(mult) if e
            )
            diff_str = " ".join(
                f"d/d{_var_power(v, 1, self.n)}" + (f"^{e}" if e > 1 else "")
                for v, e in enumerate(diff)
                if e
            )
            body = " ".join(s for s in (mult_str, diff_str) if s)
            if not body:
                neg = c < 0
                text = str(-c if neg else c)
            elif c == 1:
                text, neg = body, False
            elif c == -1:
                text, neg = body, True
            else:
                neg = c < 0
                mag = -c if neg else c
                text = f"{mag} {body}"
            if not parts:
                parts.append(("-" if neg else "") + text)
            else:
                parts.append((" - " if neg else " + ") + text)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"WeylOp({self.render()})"


def _unit(v: int, n: int) -> Exponents:
    return tuple(1 if u == v else 0 for u in range(2 * n))


def _var_power(v: int, e: int, n: int) -> str:
    name = f"x{v + 1}" if v < n else f"y{v - n + 1}"
    return name if e == 1 else f"{name}^{e}"


def compose(a: WeylOp, b: WeylOp) -> WeylOp:
    """Normal-ordered product a∘b.

    Each derivative block of a is commuted past the multiplication block of b
    with the Leibniz rule, so apply(compose(a, b), p) == a.apply(b.apply(p)).
    """
    if a.n != b.n:
        raise ValueError("operators act on different rings")
    width = 2 * a.n
    out: Dict[OpKey, mpq] = {}
    for (m1, d1), c1 in a.terms.items():
        for (m2, d2), c2 in b.terms.items():
            c12 = c1 * c2
            overlap = [v for v in range(width) if d1[v] and m2[v]]
            ranges = [range(min(d1[v], m2[v]) + 1) for v in overlap]
            for js in product(*ranges):
                factor = 1
                for v, j in zip(overlap, js):
                    factor *= comb(d1[v], j) * falling(m2[v], j)
                if not factor:
                    continue
                mult = list(m2)
                diff = list(d1)
                for v, j in zip(overlap, js):
                    mult[v] -= j
                    diff[v] -= j
                mono = tuple(u + v for u, v in zip(m1, mult))
                der = tuple(u + v for u, v in zip(diff, d2))
                key = (mono, der)
                val = c12 * factor
                prev = out.get(key)
                if prev is None:
                    out[key] = val
                else:
                    prev = prev + val
                    if prev:
                        out[key] = prev
                    else:
                        del out[key]
    return WeylOp._raw(a.n, out)


def commutator(a: WeylOp, b: WeylOp) -> WeylOp:
    return compose(a, b) - compose(b, a)
