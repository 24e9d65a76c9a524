"""Catalogue of highest-weight vectors carried by the double-graded action.

Seven configuration cases (C1..C7, split by how n1, n2 sit inside 1..n) each
carry a handful of parametric families of highest-weight vectors, plus the
single-graded family on the x-only subring (HOWE).  Every entry records the
vector itself together with its expected grading, weight and growth degree,
and validate_hwv re-derives all of those from scratch.

Expected weights are stored in fundamental-weight coordinates; contributions
at indices 0 or n are dropped (the rank is n-1, so those coordinates do not
exist).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .poly import GradedPair, Poly, RepConfig, is_graded_homogeneous
from .rep import (
    NotWeightVector,
    RootVectorSet,
    Weight,
    eta,
    laplacian,
    root_vectors,
    weight_of,
)
from .weyl import WeylOp

CASES = ("C1", "C2", "C3", "C4", "C5", "C6", "C7")
HOWE = "HOWE"


class IndexUnavailable(Exception):
    """A zeta vector needs a variable index that this configuration lacks."""


class LaurentResidue(Exception):
    """The Laurent construction left a negative exponent where none may remain."""


def case_of(cfg: RepConfig) -> str:
    n, n1, n2 = cfg.n, cfg.n1, cfg.n2
    if n1 < n2:
        if n1 + 1 < n2:
            return "C1" if n2 < n else "C2"
        return "C3" if n2 < n else "C4"
    if n1 < n - 1:
        return "C5"
    return "C6" if n1 == n - 1 else "C7"


def zeta1(cfg: RepConfig) -> Poly:
    """x_{n1-1} y_{n1} - x_{n1} y_{n1-1}; needs n1 >= 2."""
    if cfg.n1 < 2:
        raise IndexUnavailable(f"zeta1 needs n1 >= 2, got n1={cfg.n1}")
    n, k = cfg.n, cfg.n1
    return Poly.monomial(_xy(k - 1, k, n)) - Poly.monomial(_xy(k, k - 1, n))


def zeta2(cfg: RepConfig) -> Poly:
    """x_{n1+1} y_{n1+2} - x_{n1+2} y_{n1+1}; needs n1 + 2 <= n."""
    if cfg.n1 + 2 > cfg.n:
        raise IndexUnavailable(f"zeta2 needs n1 + 2 <= n, got n1={cfg.n1}, n={cfg.n}")
    n, k = cfg.n, cfg.n1
    return Poly.monomial(_xy(k + 1, k + 2, n)) - Poly.monomial(_xy(k + 2, k + 1, n))


def _xy(i: int, j: int, n: int) -> Tuple[int, ...]:
    """Exponent tuple of the monomial x_i y_j."""
    m = [0] * (2 * n)
    m[i - 1] += 1
    m[n + j - 1] += 1
    return tuple(m)


def _mono(n: int, xexp: Dict[int, int], yexp: Dict[int, int]) -> Poly:
    m = [0] * (2 * n)
    for i, e in xexp.items():
        m[i - 1] += e
    for i, e in yexp.items():
        m[n + i - 1] += e
    return Poly.monomial(tuple(m))


def fundamental_weight(n: int, contributions) -> Weight:
    """Assemble a weight from (fundamental index, coefficient) contributions.

    Contributions at a repeated index accumulate; indices outside 1..n-1 are
    silently dropped (the rank is n-1)."""
    w = [0] * (n - 1)
    for idx, c in contributions:
        if 1 <= idx <= n - 1:
            w[idx - 1] += c
    return tuple(w)


@dataclass
class HwModuleSpec:
    """One catalogued highest-weight module instance."""

    case_id: str
    cfg: RepConfig
    family: str
    m1: int
    m2: int
    hwv: Poly
    grading: GradedPair
    weight: Weight
    gk_expected: int

    def key(self) -> Tuple:
        return (
            self.case_id,
            self.cfg.n,
            self.cfg.n1,
            self.cfg.n2,
            self.m1,
            self.m2,
            self.grading.l1,
            self.grading.l2,
        )

    def to_json_dict(self) -> Dict[str, object]:
        return {
            "case": self.case_id,
            "n": self.cfg.n,
            "n1": self.cfg.n1,
            "n2": self.cfg.n2,
            "m1": self.m1,
            "m2": self.m2,
            "l1": self.grading.l1,
            "l2": self.grading.l2,
            "hwv": self.hwv.render(),
            "weight": list(self.weight),
            "gk_expected": self.gk_expected,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_dict())


@dataclass
class HwValidationReport:
    annihilated_by_positive: bool
    harmonic: bool
    grading_ok: bool
    weight_ok: bool
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (
            self.annihilated_by_positive
            and self.harmonic
            and self.grading_ok
            and self.weight_ok
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "annihilated_by_positive": self.annihilated_by_positive,
                "harmonic": self.harmonic,
                "grading_ok": self.grading_ok,
                "weight_ok": self.weight_ok,
                "passed": self.passed,
                "details": self.details,
            }
        )


def eta_power_hwv(cfg: RepConfig, m1: int, m2: int) -> Poly:
    """Highest-weight vector of the (m1, m2) family in case C4, built by
    applying the grading-raising operator m1+m2 times to the Laurent seed
    x_{n-1}^{m2} y_n^{-m1}.

    The intermediates carry negative y_n exponents; the final result must be
    a proper polynomial or the construction is wrong (LaurentResidue).
    """
    if m1 < 1 or m2 < 1:
        raise ValueError("this family needs m1, m2 >= 1")
    n = cfg.n
    seed = [0] * (2 * n)
    seed[n - 2] = m2  # x_{n-1}
    seed[2 * n - 1] = -m1  # y_n
    p = Poly.monomial(tuple(seed))
    raiser = eta(cfg)
    for _ in range(m1 + m2):
        p = raiser.apply(p)
    if p.is_zero():
        raise LaurentResidue(f"construction collapsed to zero for m1={m1}, m2={m2}")
    if not p.is_proper():
        raise LaurentResidue(
            f"negative exponents survived for m1={m1}, m2={m2}: {p.render()}"
        )
    return p


def _params(bound: int):
    for m1 in range(bound + 1):
        for m2 in range(bound + 1):
            yield m1, m2


def catalog(cfg: RepConfig, param_bound: int) -> List[HwModuleSpec]:
    """All catalogued families valid for cfg with parameters up to param_bound.

    Deterministic: families in a fixed order, parameters in lexicographic
    order.  The x-only (HOWE) entries are attached to configurations with
    n2 == n so each (n, n1) pair is emitted exactly once.
    """
    if param_bound < 0:
        raise ValueError("param_bound must be nonnegative")
    n, n1, n2 = cfg.n, cfg.n1, cfg.n2
    case = case_of(cfg)
    gk = _gk_formula(cfg)
    out: List[HwModuleSpec] = []

    def add(family: str, m1: int, m2: int, hwv: Poly, contrib, gk_value: int = -1):
        g = is_graded_homogeneous(hwv, cfg)
        assert g is not None, "catalogued vectors are graded-homogeneous by construction"
        out.append(
            HwModuleSpec(
                case_id=case if family[0] != "A" else HOWE,
                cfg=cfg,
                family=family,
                m1=m1,
                m2=m2,
                hwv=hwv,
                grading=g,
                weight=fundamental_weight(n, contrib),
                gk_expected=gk if gk_value < 0 else gk_value,
            )
        )

    if case == "C1":
        gap = n2 - n1 - 1
        for m1, m2 in _params(param_bound):
            if m1 + m2 >= gap:
                add("F1", m1, m2, _mono(n, {n1: m1}, {n2 + 1: m2}),
                    [(n1 - 1, m1), (n1, -(m1 + 1)), (n2, -(m2 + 1)), (n2 + 1, m2)])
        for m1, m2 in _params(param_bound):
            if m2 - m1 >= gap:
                add("F2", m1, m2, _mono(n, {n1 + 1: m1}, {n2 + 1: m2}),
                    [(n1, -(m1 + 1)), (n1 + 1, m1), (n2, -(m2 + 1)), (n2 + 1, m2)])
        for m1, m2 in _params(param_bound):
            if m1 - m2 >= gap:
                add("F3", m1, m2, _mono(n, {n1: m1}, {n2: m2}),
                    [(n1 - 1, m1), (n1, -(m1 + 1)), (n2 - 1, m2), (n2, -(m2 + 1))])
    elif case == "C2":
        for m1, m2 in _params(param_bound):
            add("F1", m1, m2, _mono(n, {n1 + 1: m1}, {n: m2}),
                [(n1, -(m1 + 1)), (n1 + 1, m1), (n - 1, m2)])
        for m1, m2 in _params(param_bound):
            if m1 <= n - n1 - 2 or m1 - m2 >= n - n1 - 1:
                add("F2", m1, m2, _mono(n, {n1: m1}, {n: m2}),
                    [(n1 - 1, m1), (n1, -(m1 + 1)), (n - 1, m2)])
    elif case == "C3":
        for m1, m2 in _params(param_bound):
            add("F1", m1, m2, _mono(n, {n1: m1}, {n1 + 2: m2}),
                [(n1 - 1, m1), (n1, -(m1 + 1)), (n1 + 1, -(m2 + 1)), (n1 + 2, m2)])
        for m1, m2 in _params(param_bound):
            if m2 >= m1:
                add("F2", m1, m2, _mono(n, {n1 + 1: m1}, {n1 + 2: m2}),
                    [(n1, -(m1 + 1)), (n1 + 1, m1 - m2 - 1), (n1 + 2, m2)])
        for m1, m2 in _params(param_bound):
            if m1 >= m2:
                add("F3", m1, m2, _mono(n, {n1: m1}, {n1 + 1: m2}),
                    [(n1 - 1, m1), (n1, m2 - m1 - 1), (n1 + 1, -(m2 + 1))])
    elif case == "C4":
        # the bare x_{n-1}^m family coincides with F1 at m2 = 0, so it is not
        # emitted separately
        for m1, m2 in _params(param_bound):
            if m2 <= m1:
                add("F1", m1, m2, _mono(n, {n - 1: m1}, {n: m2}),
                    [(n - 2, m1), (n - 1, m2 - m1 - 1)])
        for m1, m2 in _params(param_bound):
            if m1 >= 1 and m2 >= 1:
                add("F3", m1, m2, eta_power_hwv(cfg, m1, m2),
                    [(n - 2, m2), (n - 1, -(m1 + m2 + 1))])
    elif case == "C5":
        z1 = zeta1(cfg) if n1 >= 2 else None
        z2 = zeta2(cfg)
        for m1, m2 in _params(param_bound):
            add("F1", m1, m2, _mono(n, {n1: m1}, {n1 + 1: m2}),
                [(n1 - 1, m1), (n1, -(m1 + m2 + 2)), (n1 + 1, m2)])
        for m1, m2 in _params(param_bound):
            add("F2", m1, m2, _mono(n, {}, {n1 + 1: m2}) * z2 ** (m1 + 1),
                [(n1, -(m1 + m2 + 3)), (n1 + 1, m2), (n1 + 2, m1 + 1)])
        if z1 is not None:
            for m1, m2 in _params(param_bound):
                add("F3", m1, m2, _mono(n, {n1: m1}, {}) * z1 ** (m2 + 1),
                    [(n1 - 2, m2 + 1), (n1 - 1, m1), (n1, -(m1 + m2 + 3))])
    elif case == "C6":
        for m1, m2 in _params(param_bound):
            add("F1", m1, m2, _mono(n, {n - 1: m1}, {n: m2}),
                [(n - 2, m1), (n - 1, -(m1 + m2 + 2))])
        if n >= 3:
            z1 = zeta1(cfg)
            for m1, m2 in _params(param_bound):
                add("F2", m1, m2, _mono(n, {n - 1: m1}, {}) * z1 ** (m2 + 1),
                    [(n - 3, m2 + 1), (n - 2, m1), (n - 1, -(m1 + m2 + 3))])
    else:  # C7, finite-dimensional
        z1 = zeta1(cfg)
        for m1, m2 in _params(param_bound):
            add("F1", m1, m2, _mono(n, {n: m1}, {}) * z1 ** m2,
                [(n - 2, m2), (n - 1, m1)], gk_value=0)

    if n2 == n and n1 < n:
        for m1 in range(1, param_bound + 1):
            add("A-", m1, 0, _mono(n, {n1: m1}, {}),
                [(n1 - 1, m1), (n1, -(m1 + 1))], gk_value=n - 1)
        for m2 in range(param_bound + 1):
            add("A+", 0, m2, _mono(n, {n1 + 1: m2}, {}),
                [(n1, -(m2 + 1)), (n1 + 1, m2)], gk_value=n - 1)
    return out


def _gk_formula(cfg: RepConfig) -> int:
    # local import keeps catalog importable from growth without a cycle
    from .growth import gk_formula

    return gk_formula(cfg)


# ---------------------------------------------------------------------------
# the x-only oscillator action (single grading)


def howe_e_op(i: int, j: int, cfg: RepConfig) -> WeylOp:
    """Matrix-unit action on F[x1..xn] with the Fourier swap on indices 1..n1."""
    n, n1 = cfg.n, cfg.n1
    if not (1 <= n1 < n):
        raise ValueError("the x-only action needs 1 <= n1 < n")
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError("index out of range")
    from .weyl import compose

    if i <= n1 and j <= n1:
        op = compose(WeylOp.x_mult(j, n).scale(-1), WeylOp.dx(i, n))
        if i == j:
            op = op + WeylOp.constant(-1, n)
        return op
    if i <= n1 < j:
        return compose(WeylOp.dx(i, n), WeylOp.dx(j, n))
    if j <= n1 < i:
        return compose(WeylOp.x_mult(i, n), WeylOp.x_mult(j, n)).scale(-1)
    return compose(WeylOp.x_mult(i, n), WeylOp.dx(j, n))


def howe_root_vectors(cfg: RepConfig) -> RootVectorSet:
    return root_vectors(cfg, op_builder=lambda i, j: howe_e_op(i, j, cfg))


def howe_cartan(cfg: RepConfig) -> List[WeylOp]:
    return [
        howe_e_op(i, i, cfg) - howe_e_op(i + 1, i + 1, cfg) for i in range(1, cfg.n)
    ]


def howe_grading(p: Poly, cfg: RepConfig) -> Optional[int]:
    """Common single grading of an x-only polynomial, or None."""
    g = is_graded_homogeneous(p, cfg)
    return None if g is None else g.l1


# ---------------------------------------------------------------------------
# validation


def validate_hwv(spec: HwModuleSpec) -> HwValidationReport:
    """Re-derive everything the catalogue claims about one entry.

    (a) all positive root vectors annihilate the vector, (b) the deformed
    Laplacian annihilates it (skipped for x-only entries, which live on a
    ring without y variables), (c) its grading matches termwise, (d) its
    Cartan weight matches.
    """
    cfg = spec.cfg
    details: Dict[str, object] = {}
    howe = spec.case_id == HOWE
    if howe:
        rv = howe_root_vectors(cfg)
        cartan = rv.cartan
    else:
        rv = root_vectors(cfg)
        cartan = rv.cartan

    if spec.hwv.is_zero() or not spec.hwv.is_proper():
        details["hwv"] = "vector must be nonzero and proper"
        return HwValidationReport(False, False, False, False, details)

    bad = []
    for i, j, op in rv.positive:
        image = op.apply(spec.hwv)
        if not image.is_zero():
            bad.append({"i": i, "j": j, "residue": image.render()})
    annihilated = not bad
    if bad:
        details["positive_failures"] = bad

    if howe:
        harmonic = True
        details["harmonic"] = "skipped (x-only module)"
    else:
        residue = laplacian(cfg).apply(spec.hwv)
        harmonic = residue.is_zero()
        if not harmonic:
            details["laplacian_residue"] = residue.render()

    g = is_graded_homogeneous(spec.hwv, cfg)
    grading_ok = g is not None and g == spec.grading
    if not grading_ok:
        details["grading"] = {
            "expected": list(spec.grading),
            "got": None if g is None else list(g),
        }

    try:
        w = weight_of(spec.hwv, cfg, cartan=cartan)
        weight_ok = w == spec.weight
        if not weight_ok:
            details["weight"] = {"expected": list(spec.weight), "got": list(w)}
    except NotWeightVector as exc:
        weight_ok = False
        details["weight"] = {"error": str(exc)}

    return HwValidationReport(annihilated, harmonic, grading_ok, weight_ok, details)


class HwValidationError(Exception):
    """Raised when an operation requires a validated spec and validation failed."""

    def __init__(self, spec: HwModuleSpec, report: HwValidationReport):
        self.spec = spec
        self.report = report
        super().__init__(f"highest-weight validation failed for {spec.key()}: {report.to_json()}")


# ---------------------------------------------------------------------------
# complete pointedness (all weight multiplicities equal to one)


def pointed_expected(spec: HwModuleSpec) -> bool:
    """Whether this entry is on the completely-pointed list.

    The list is matched literally clause by clause; for the x_{n1}^{m1}
    family with n1 + 1 < n2 = n the two stated parameter ranges cover every
    m1, and they are treated as their union.
    """
    n, n1, n2 = spec.cfg.n, spec.cfg.n1, spec.cfg.n2
    fam, m1, m2 = spec.family, spec.m1, spec.m2
    if spec.case_id == HOWE:
        return False
    if n1 + 1 < n2 == n:  # clause 1
        return fam in ("F1", "F2") and m2 == 0
    if n1 + 1 == n2 == n:  # clause 2
        return fam == "F1" and (n == 2 or m2 == 0)
    # for n = 2 the next two clauses both apply to n1 = n2 = 1
    if n1 == n2 == 1:  # clause 3
        if fam == "F1" and m2 == 0:
            return True
        if fam == "F2" and n == 3 and m2 == 0:
            return True
    if n1 == n2 == n - 1:  # clause 4
        if fam == "F1" and m1 == 0:
            return True
        if fam == "F2" and n == 3 and m1 == 0:
            return True
    return False
