"""Filtration growth of highest-weight modules and its closed-form degree.

The central computation is a breadth-first closure: starting from a
highest-weight vector, repeatedly apply the negative root vectors to the
newest basis rows and record the exact rank after each layer.  The rank
sequence phi(k) eventually agrees with a polynomial in k; its degree is the
Gelfand-Kirillov dimension of the module and is certified from a finite
difference table, never guessed.

Budgets make the exact arithmetic fail soft: a sweep that runs out of time
or rows reports Inconclusive with the partial sequence it did complete.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .catalog import (
    HOWE,
    HwModuleSpec,
    HwValidationError,
    howe_cartan,
    howe_e_op,
    howe_root_vectors,
    pointed_expected,
    validate_hwv,
)
from .poly import Poly, RepConfig
from .rep import Weight, e_op, root_vectors, weight_of
from .span import EchelonBasis, InsertResult
from .weyl import WeylOp

MATCH = "Match"
MISMATCH = "Mismatch"
INCONCLUSIVE = "Inconclusive"


# ---------------------------------------------------------------------------
# closed formula


def gk_formula(cfg: RepConfig) -> int:
    """Growth degree of the modules attached to cfg.

    The branches are ordered and the first match wins; the n1 = n2 = n
    configuration is finite-dimensional and returns 0.
    """
    n, a, b = cfg.n, cfg.n1, cfg.n2
    if a == b == n:
        return 0
    if (1 < a < b < n - 1) or (3 <= a == b <= n - 3 and n >= 7):
        return 2 * n - 2
    if (a == 1 < b < n) or (a < b == n - 1) or (a == b == 3 and n == 6):
        return 2 * n - 3
    if (a == b == 2 < n - 1) or (1 < a == b == n - 2):
        return 2 * n - 4
    if 1 < a == b < n - 1:  # unreachable given the branch order; kept for fidelity
        return n
    return n - 1


def minimal_gk(cfg: RepConfig) -> int:
    """Smallest growth degree an infinite-dimensional module can have."""
    return cfg.n - 1


def is_minimal_case(cfg: RepConfig) -> bool:
    n, a, b = cfg.n, cfg.n1, cfg.n2
    return (a < b == n) or (a == b == 1) or (a == b == n - 1)


# ---------------------------------------------------------------------------
# degree fitting


def finite_difference_table(seq: Sequence[int]) -> List[List[int]]:
    """All iterated forward differences, level 0 being the sequence itself."""
    levels = [list(seq)]
    while len(levels[-1]) > 1:
        prev = levels[-1]
        levels.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    return levels


def estimate_degree(phi: Sequence[int], window: int = 3) -> Optional[int]:
    """Least d whose (d+1)-th difference vanishes on the last `window` entries
    while the d-th difference is a positive constant there.

    Returns None (inconclusive) when no level certifies within the available
    length, including the too-short case.
    """
    if window < 2:
        raise ValueError("window must be at least 2")
    if len(phi) < window + 1:
        return None
    levels = finite_difference_table(phi)
    for d in range(len(phi) - window):
        nxt = levels[d + 1]
        if all(v == 0 for v in nxt[-window:]) and levels[d][-1] > 0:
            return d
    return None


# ---------------------------------------------------------------------------
# breadth-first filtration sweeps


@dataclass
class SweepBudget:
    max_seconds: float = 300.0
    max_rows: int = 500_000


@dataclass
class SweepResult:
    phi: List[int]
    basis: EchelonBasis
    truncated: bool
    elapsed: float
    ledger: Optional[Counter] = None
    multiplicity_weight: Optional[Weight] = None
    multiplicity_depth: Optional[int] = None


def span_sweep(
    seed: Poly,
    generators: Sequence[WeylOp],
    max_k: int,
    budget: Optional[SweepBudget] = None,
    weight_fn: Optional[Callable[[Poly], Weight]] = None,
) -> SweepResult:
    """Layered closure of seed under generators.

    phi[k] is the exact dimension of the span of all products of at most k
    generators applied to the seed.  Only rows added in the previous layer
    receive generator applications: images of older rows already lie in the
    previous layer, so the frontier is enough.

    When a layer adds nothing the module has stabilized and phi is extended
    as a constant; when the budget is exhausted the sweep stops with
    truncated=True and phi holding completed layers only.
    """
    if max_k < 0:
        raise ValueError("max_k must be nonnegative")
    budget = budget or SweepBudget()
    t0 = time.monotonic()
    deadline = t0 + budget.max_seconds
    basis = EchelonBasis(seed.n)
    if basis.insert(seed) is not InsertResult.ADDED:
        raise ValueError("seed vector must be nonzero")
    ledger: Optional[Counter] = None
    mult_weight: Optional[Weight] = None
    mult_depth: Optional[int] = None
    if weight_fn is not None:
        ledger = Counter()
        ledger[weight_fn(basis.rows[0])] += 1
    phi = [1]
    frontier = [0]
    truncated = False
    for k in range(1, max_k + 1):
        new_rows: List[int] = []
        for ridx in frontier:
            row = basis.rows[ridx]
            for g in generators:
                if time.monotonic() > deadline or basis.rank >= budget.max_rows:
                    truncated = True
                    break
                q = g.apply(row)
                if not q.terms:
                    continue
                if basis.insert(q) is InsertResult.ADDED:
                    r = basis.rank - 1
                    new_rows.append(r)
                    if ledger is not None:
                        w = weight_fn(basis.rows[r])
                        ledger[w] += 1
                        if ledger[w] == 2 and mult_depth is None:
                            mult_weight, mult_depth = w, k
            if truncated:
                break
        if truncated:
            break
        phi.append(basis.rank)
        frontier = new_rows
        if not new_rows:
            phi.extend([basis.rank] * (max_k - k))
            break
    return SweepResult(
        phi=phi,
        basis=basis,
        truncated=truncated,
        elapsed=time.monotonic() - t0,
        ledger=ledger,
        multiplicity_weight=mult_weight,
        multiplicity_depth=mult_depth,
    )


def sweep_generators(spec: HwModuleSpec, generator_set: str = "negative") -> List[WeylOp]:
    """Operator set driving a sweep: the negative root vectors by default, or
    the full square of matrix units ("gl") as a stronger cross-check."""
    cfg = spec.cfg
    if spec.case_id == HOWE:
        if generator_set == "negative":
            return [op for _, _, op in howe_root_vectors(cfg).negative]
        if generator_set == "gl":
            return [
                howe_e_op(i, j, cfg)
                for i in range(1, cfg.n + 1)
                for j in range(1, cfg.n + 1)
            ]
    else:
        if generator_set == "negative":
            return [op for _, _, op in root_vectors(cfg).negative]
        if generator_set == "gl":
            return [
                e_op(i, j, cfg)
                for i in range(1, cfg.n + 1)
                for j in range(1, cfg.n + 1)
            ]
    raise ValueError(f"unknown generator set {generator_set!r}")


def spec_weight_fn(spec: HwModuleSpec) -> Callable[[Poly], Weight]:
    cfg = spec.cfg
    cartan = howe_cartan(cfg) if spec.case_id == HOWE else None
    return lambda p: weight_of(p, cfg, cartan=cartan)


@dataclass
class GrowthReport:
    """Filtration dimensions of one catalogued module and the fitted degree."""

    spec: HwModuleSpec
    phi: List[int]
    diffs: List[List[int]]
    degree_estimate: Optional[int]
    leading_coeff: Optional[mpq]
    formula_value: int
    verdict: str
    max_k: int
    elapsed: float
    truncated: bool

    def to_json_dict(self) -> Dict[str, object]:
        return {
            "case": self.spec.case_id,
            "n": self.spec.cfg.n,
            "n1": self.spec.cfg.n1,
            "n2": self.spec.cfg.n2,
            "m1": self.spec.m1,
            "m2": self.spec.m2,
            "l1": self.spec.grading.l1,
            "l2": self.spec.grading.l2,
            "phi": list(self.phi),
            "degree_estimate": self.degree_estimate,
            "formula": self.formula_value,
            "verdict": self.verdict,
            "elapsed_ms": int(self.elapsed * 1000),
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_dict())

    CSV_COLUMNS = (
        "case", "n", "n1", "n2", "m1", "m2", "l1", "l2",
        "phi", "degree_estimate", "formula", "verdict", "elapsed_ms",
    )

    def to_csv_row(self) -> str:
        d = self.to_json_dict()
        d["phi"] = ";".join(str(v) for v in d["phi"])
        d["degree_estimate"] = "" if d["degree_estimate"] is None else d["degree_estimate"]
        return ",".join(str(d[c]) for c in self.CSV_COLUMNS)


def filtration_sweep(
    spec: HwModuleSpec,
    max_k: int,
    window: int = 3,
    budget: Optional[SweepBudget] = None,
    generator_set: str = "negative",
) -> GrowthReport:
    """Sweep one catalogued module to depth max_k and fit the growth degree.

    The spec is re-validated first; a budget overrun yields the Inconclusive
    verdict with the completed part of phi.
    """
    report = validate_hwv(spec)
    if not report.passed:
        raise HwValidationError(spec, report)
    generators = sweep_generators(spec, generator_set)
    result = span_sweep(spec.hwv, generators, max_k, budget=budget)
    diffs = finite_difference_table(result.phi)
    if result.truncated:
        degree: Optional[int] = None
        verdict = INCONCLUSIVE
    else:
        degree = estimate_degree(result.phi, window=window)
        if degree is None:
            verdict = INCONCLUSIVE
        else:
            verdict = MATCH if degree == spec.gk_expected else MISMATCH
    leading = None
    if degree is not None:
        leading = mpq(diffs[degree][-1], factorial(degree))
    return GrowthReport(
        spec=spec,
        phi=result.phi,
        diffs=diffs,
        degree_estimate=degree,
        leading_coeff=leading,
        formula_value=spec.gk_expected,
        verdict=verdict,
        max_k=max_k,
        elapsed=result.elapsed,
        truncated=result.truncated,
    )


def default_depth(spec: HwModuleSpec) -> int:
    """Sweep depth that comfortably certifies the expected degree."""
    return spec.gk_expected + 4


# ---------------------------------------------------------------------------
# free-module fixture: j commuting multiplication operators acting on 1


def free_multiplication_ops(j: int) -> List[WeylOp]:
    return [WeylOp.x_mult(i, j) for i in range(1, j + 1)]


def free_module_phi(j: int, max_k: int) -> List[int]:
    """phi(k) = binomial(k + j, j): polynomials of degree <= k in j variables."""
    result = span_sweep(Poly.one(j), free_multiplication_ops(j), max_k)
    return result.phi


# ---------------------------------------------------------------------------
# counting oracles for the quadratic product families


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to `total`,
    in lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


@dataclass
class OracleReport:
    which: str
    k: int
    brute_value: int
    closed_value: Optional[int]
    agree: bool

    def to_json(self) -> str:
        return json.dumps(
            {
                "which": self.which,
                "k": self.k,
                "brute": self.brute_value,
                "closed": self.closed_value,
                "agree": self.agree,
            }
        )


def _report(which: str, k: int, brute: int, closed: Optional[int]) -> OracleReport:
    return OracleReport(
        which=which,
        k=k,
        brute_value=brute,
        closed_value=closed,
        agree=closed is not None and closed == brute,
    )


def _xpair_indices(cfg: RepConfig) -> List[Tuple[int, int]]:
    return [
        (i, t)
        for i in range(1, cfg.n1 + 1)
        for t in range(cfg.n1 + 1, cfg.n + 1)
    ]


def oracle_a_k(cfg: RepConfig, k: int) -> OracleReport:
    """Count distinct monomial products of the x_i x_t pairs of total power k
    and compare with the two-sided multiset count."""
    n, n1 = cfg.n, cfg.n1
    if not 1 <= n1 < n:
        raise ValueError("needs 1 <= n1 < n")
    pairs = _xpair_indices(cfg)
    seen = set()
    for comp in compositions(k, len(pairs)):
        exps = [0] * n
        for (i, t), e in zip(pairs, comp):
            exps[i - 1] += e
            exps[t - 1] += e
        seen.add(tuple(exps))
    closed = comb(n1 + k - 1, k) * comb(n - n1 + k - 1, k)
    return _report("A_K", k, len(seen), closed)


def _power_cache(base: Poly, up_to: int) -> List[Poly]:
    powers = [Poly.one(base.n), base]
    for _ in range(up_to - 1):
        powers.append(powers[-1] * base)
    return powers if up_to >= 1 else powers[:1]


def oracle_d_k(cfg: RepConfig, k: int) -> OracleReport:
    """Exact rank of the span of products of (x_i x_t - y_i y_t) with total
    power k; a closed count exists only for n1 = 1 or n1 = n - 1."""
    n, n1 = cfg.n, cfg.n1
    if not 1 <= n1 < n:
        raise ValueError("needs 1 <= n1 < n")
    pairs = _xpair_indices(cfg)
    quads = [
        Poly.x(i, n) * Poly.x(t, n) - Poly.y(i, n) * Poly.y(t, n) for i, t in pairs
    ]
    powers = [_power_cache(q, k) for q in quads]
    basis = EchelonBasis(n)
    for comp in compositions(k, len(pairs)):
        prod = Poly.one(n)
        for slot, e in enumerate(comp):
            if e:
                prod = prod * powers[slot][e]
        basis.insert(prod)
    closed = comb(n - 2 + k, k) if n1 in (1, n - 1) else None
    return _report("D_K", k, basis.rank, closed)


def oracle_dprime_k(cfg: RepConfig, k: int) -> OracleReport:
    """Exact rank of the mixed product family (x_i x_s, y_s y_t and the
    quadratic differences) with total power k; no closed count."""
    n, n1, n2 = cfg.n, cfg.n1, cfg.n2
    if not (2 < n1 + 1 <= n2 < n - 1):
        raise ValueError("needs 2 < n1 + 1 <= n2 < n - 1")
    gens: List[Poly] = []
    for i in range(1, n1 + 1):
        for s in range(n1 + 1, n2 + 1):
            gens.append(Poly.x(i, n) * Poly.x(s, n))
    for s in range(n1 + 1, n2 + 1):
        for t in range(n2 + 1, n + 1):
            gens.append(Poly.y(s, n) * Poly.y(t, n))
    for i in range(1, n1 + 1):
        for t in range(n2 + 1, n + 1):
            gens.append(Poly.x(i, n) * Poly.x(t, n) - Poly.y(i, n) * Poly.y(t, n))
    powers = [_power_cache(g, k) for g in gens]
    basis = EchelonBasis(n)
    for comp in compositions(k, len(gens)):
        prod = Poly.one(n)
        for slot, e in enumerate(comp):
            if e:
                prod = prod * powers[slot][e]
        basis.insert(prod)
    return _report("DPRIME_K", k, basis.rank, None)


# ---------------------------------------------------------------------------
# pointedness (weight multiplicities along the sweep)


@dataclass
class PointedReport:
    spec: HwModuleSpec
    depth: int
    all_one: bool
    multiplicity_weight: Optional[Weight]
    multiplicity_depth: Optional[int]
    expected: bool
    truncated: bool

    @property
    def verdict(self) -> str:
        if self.all_one:
            return "AllOne"
        return f"MultiplicityAt(weight={list(self.multiplicity_weight)}, depth={self.multiplicity_depth})"

    @property
    def agree(self) -> bool:
        return not self.truncated and self.all_one == self.expected

    def to_json(self) -> str:
        return json.dumps(
            {
                "case": self.spec.case_id,
                "n": self.spec.cfg.n,
                "n1": self.spec.cfg.n1,
                "n2": self.spec.cfg.n2,
                "l1": self.spec.grading.l1,
                "l2": self.spec.grading.l2,
                "depth": self.depth,
                "verdict": self.verdict,
                "expected_pointed": self.expected,
                "agree": self.agree,
                "truncated": self.truncated,
            }
        )


def pointed_check(
    spec: HwModuleSpec, depth: int, budget: Optional[SweepBudget] = None
) -> PointedReport:
    """Sweep to the given depth while histogramming row weights; AllOne means
    every weight multiplicity stayed at one."""
    report = validate_hwv(spec)
    if not report.passed:
        raise HwValidationError(spec, report)
    generators = sweep_generators(spec)
    result = span_sweep(
        spec.hwv, generators, depth, budget=budget, weight_fn=spec_weight_fn(spec)
    )
    assert result.ledger is not None
    all_one = result.multiplicity_depth is None
    return PointedReport(
        spec=spec,
        depth=depth,
        all_one=all_one,
        multiplicity_weight=result.multiplicity_weight,
        multiplicity_depth=result.multiplicity_depth,
        expected=pointed_expected(spec),
        truncated=result.truncated,
    )
