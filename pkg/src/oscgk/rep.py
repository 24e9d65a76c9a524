"""The double-graded oscillator action of gl(n)/sl(n) on F[x1..xn, y1..yn].

The action is obtained from the canonical one x_i d/dx_j - y_j d/dy_i by a
partial Fourier swap on the x-indices 1..n1 and the y-indices n2+1..n; the
swap is a Weyl-algebra automorphism, so all gl(n) bracket identities survive
it exactly and verify_brackets checks them as canonical operator equalities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .poly import Poly, RepConfig, is_graded_homogeneous
from .weyl import WeylOp, commutator, falling

Weight = Tuple[int, ...]


class NotWeightVector(Exception):
    """Some diagonal operator fails to act by a single scalar."""


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"index {i} out of range 1..{n}")


def _ex_op(i: int, j: int, cfg: RepConfig) -> WeylOp:
    """x-side building block of the matrix-unit action."""
    n, n1 = cfg.n, cfg.n1
    if i <= n1 and j <= n1:
        op = WeylOp.x_mult(j, n).scale(-1)
        op = _mul(op, WeylOp.dx(i, n))
        if i == j:
            op = op + WeylOp.constant(-1, n)
        return op
    if i <= n1 < j:
        return _mul(WeylOp.dx(i, n), WeylOp.dx(j, n))
    if j <= n1 < i:
        return _mul(WeylOp.x_mult(i, n), WeylOp.x_mult(j, n)).scale(-1)
    return _mul(WeylOp.x_mult(i, n), WeylOp.dx(j, n))


def _ey_op(i: int, j: int, cfg: RepConfig) -> WeylOp:
    """y-side building block of the matrix-unit action."""
    n, n2 = cfg.n, cfg.n2
    if i <= n2 and j <= n2:
        return _mul(WeylOp.y_mult(i, n), WeylOp.dy(j, n))
    if i <= n2 < j:
        return _mul(WeylOp.y_mult(i, n), WeylOp.y_mult(j, n)).scale(-1)
    if j <= n2 < i:
        return _mul(WeylOp.dy(i, n), WeylOp.dy(j, n))
    op = _mul(WeylOp.y_mult(j, n), WeylOp.dy(i, n)).scale(-1)
    if i == j:
        op = op + WeylOp.constant(-1, n)
    return op


def _mul(a: WeylOp, b: WeylOp) -> WeylOp:
    # the factors used above commute, so plain composition is already normal-ordered
    from .weyl import compose

    return compose(a, b)


def e_op(i: int, j: int, cfg: RepConfig) -> WeylOp:
    """Matrix unit E_{i,j} acting on the 2n-variable ring (diagonal shifts included)."""
    _check_index(i, cfg.n)
    _check_index(j, cfg.n)
    return _ex_op(i, j, cfg) - _ey_op(j, i, cfg)


def laplacian(cfg: RepConfig) -> WeylOp:
    """Deformed Laplace operator; its kernel slices out the harmonic subspaces."""
    n, n1, n2 = cfg.n, cfg.n1, cfg.n2
    op = WeylOp.zero(n)
    for i in range(1, n1 + 1):
        op = op - _mul(WeylOp.x_mult(i, n), WeylOp.dy(i, n))
    for r in range(n1 + 1, n2 + 1):
        op = op + _mul(WeylOp.dx(r, n), WeylOp.dy(r, n))
    for s in range(n2 + 1, n + 1):
        op = op - _mul(WeylOp.y_mult(s, n), WeylOp.dx(s, n))
    return op


def eta(cfg: RepConfig) -> WeylOp:
    """Dual of the deformed Laplacian; raises the double grading by (1, 1)."""
    n, n1, n2 = cfg.n, cfg.n1, cfg.n2
    op = WeylOp.zero(n)
    for i in range(1, n1 + 1):
        op = op + _mul(WeylOp.y_mult(i, n), WeylOp.dx(i, n))
    for r in range(n1 + 1, n2 + 1):
        op = op + _mul(WeylOp.x_mult(r, n), WeylOp.y_mult(r, n))
    for s in range(n2 + 1, n + 1):
        op = op + _mul(WeylOp.x_mult(s, n), WeylOp.dy(s, n))
    return op


@dataclass
class RootVectorSet:
    """Positive/negative root vectors and the Cartan operators of the action."""

    positive: List[Tuple[int, int, WeylOp]]
    negative: List[Tuple[int, int, WeylOp]]
    cartan: List[WeylOp]


def root_vectors(
    cfg: RepConfig, op_builder: Optional[Callable[[int, int], WeylOp]] = None
) -> RootVectorSet:
    """Triangular decomposition; op_builder defaults to the 2n-variable action."""
    build = op_builder or (lambda i, j: e_op(i, j, cfg))
    n = cfg.n
    positive = [(i, j, build(i, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    negative = [(j, i, build(j, i)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    cartan = [build(i, i) - build(i + 1, i + 1) for i in range(1, n)]
    return RootVectorSet(positive=positive, negative=negative, cartan=cartan)


def cartan_operators(cfg: RepConfig) -> List[WeylOp]:
    return [e_op(i, i, cfg) - e_op(i + 1, i + 1, cfg) for i in range(1, cfg.n)]


def diagonal_eigenvalue(op: WeylOp, mono: Tuple[int, ...]) -> mpq:
    """Scalar by which a diagonal operator (mult == diff termwise) acts on a monomial."""
    total = mpq(0)
    for (mult, diff), c in op.terms.items():
        if mult != diff:
            raise ValueError("operator is not diagonal on monomials")
        ff = 1
        for v, d in enumerate(diff):
            if d:
                ff *= falling(mono[v], d)
                if not ff:
                    break
        if ff:
            total += c * ff
    return total


def weight_of(p: Poly, cfg: RepConfig, cartan: Optional[Sequence[WeylOp]] = None) -> Weight:
    """Simultaneous Cartan eigenvalues of p in fundamental-weight coordinates.

    Raises NotWeightVector unless every Cartan operator acts on p by one
    scalar; the scalars are integers for these actions.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no weight")
    ops = list(cartan) if cartan is not None else cartan_operators(cfg)
    coeffs = []
    monos = list(p.terms)
    for idx, h in enumerate(ops):
        eig = diagonal_eigenvalue(h, monos[0])
        for m in monos[1:]:
            if diagonal_eigenvalue(h, m) != eig:
                raise NotWeightVector(
                    f"Cartan operator #{idx + 1} acts with distinct eigenvalues on {p.render()}"
                )
        if eig.denominator != 1:
            raise NotWeightVector(f"non-integral eigenvalue {eig}")
        coeffs.append(int(eig))
    return tuple(coeffs)


@dataclass
class BracketReport:
    """Outcome of checking all matrix-unit commutator identities for one config."""

    cfg: RepConfig
    checked_pairs: int
    violations: List[Dict[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> str:
        return json.dumps(
            {
                "config": {"n": self.cfg.n, "n1": self.cfg.n1, "n2": self.cfg.n2},
                "checked_pairs": self.checked_pairs,
                "violations": self.violations,
            }
        )


def verify_brackets(cfg: RepConfig, op_builder: Optional[Callable[[int, int], WeylOp]] = None) -> BracketReport:
    """Check [E_ij, E_kl] = delta_jk E_il - delta_li E_kj for all index quadruples.

    Exact canonical-form comparison; violations are reported, not raised.
    """
    n = cfg.n
    build = op_builder or (lambda i, j: e_op(i, j, cfg))
    ops = {(i, j): build(i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    report = BracketReport(cfg=cfg, checked_pairs=0)
    zero = WeylOp.zero(cfg.n)
    for (i, j), a in ops.items():
        for (k, l), b in ops.items():
            report.checked_pairs += 1
            lhs = commutator(a, b)
            rhs = zero
            if j == k:
                rhs = rhs + ops[(i, l)]
            if l == i:
                rhs = rhs - ops[(k, j)]
            if lhs != rhs:
                report.violations.append(
                    {"i": i, "j": j, "k": k, "l": l, "lhs": lhs.render(), "rhs": rhs.render()}
                )
    return report


@dataclass
class InvarianceReport:
    """Grading preservation and harmonic-kernel preservation on sample vectors."""

    cfg: RepConfig
    checked: int
    violations: List[Dict[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> str:
        return json.dumps(
            {
                "config": {"n": self.cfg.n, "n1": self.cfg.n1, "n2": self.cfg.n2},
                "checked": self.checked,
                "violations": self.violations,
            }
        )


def verify_module_invariance(cfg: RepConfig, samples: Sequence[Poly]) -> InvarianceReport:
    """Every matrix unit must preserve the double grading of each sample, and
    must keep harmonic samples inside the kernel of the deformed Laplacian."""
    report = InvarianceReport(cfg=cfg, checked=0)
    lap = laplacian(cfg)
    ops = [
        (i, j, e_op(i, j, cfg))
        for i in range(1, cfg.n + 1)
        for j in range(1, cfg.n + 1)
    ]
    for s_idx, sample in enumerate(samples):
        g = is_graded_homogeneous(sample, cfg)
        if g is None:
            raise ValueError(f"sample #{s_idx} is not graded-homogeneous")
        harmonic = lap.apply(sample).is_zero()
        for i, j, op in ops:
            report.checked += 1
            image = op.apply(sample)
            gi = is_graded_homogeneous(image, cfg)
            if not image.is_zero() and gi != g:
                report.violations.append(
                    {"sample": s_idx, "i": i, "j": j, "kind": "grading",
                     "expected": list(g), "got": None if gi is None else list(gi)}
                )
            if harmonic and not lap.apply(image).is_zero():
                report.violations.append(
                    {"sample": s_idx, "i": i, "j": j, "kind": "harmonic"}
                )
    return report
