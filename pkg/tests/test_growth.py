from math import comb

import pytest

from oscgk.catalog import HwModuleSpec, HwValidationError, catalog
from oscgk.growth import (
    INCONCLUSIVE,
    MATCH,
    SweepBudget,
    compositions,
    estimate_degree,
    filtration_sweep,
    finite_difference_table,
    free_module_phi,
    gk_formula,
    is_minimal_case,
    minimal_gk,
    oracle_a_k,
    oracle_d_k,
    oracle_dprime_k,
    pointed_check,
    span_sweep,
    sweep_generators,
)
from oscgk.poly import RepConfig


def find_spec(cfg, family, m1, m2, bound=2):
    return next(
        s
        for s in catalog(cfg, bound)
        if s.family == family and (s.m1, s.m2) == (m1, m2)
    )


class TestEstimateDegree:
    def test_cubic(self):
        phi = [comb(k + 3, 3) for k in range(9)]
        assert estimate_degree(phi, window=3) == 3

    def test_constant(self):
        assert estimate_degree([1] * 8, window=3) == 0

    def test_too_short(self):
        assert estimate_degree([1, 2, 3], window=3) is None

    def test_window_validation(self):
        with pytest.raises(ValueError):
            estimate_degree([1, 2, 3, 4], window=1)

    def test_no_stabilized_level(self):
        phi = [2 ** k for k in range(10)]
        assert estimate_degree(phi, window=3) is None

    def test_difference_table(self):
        assert finite_difference_table([1, 4, 9, 16]) == [
            [1, 4, 9, 16],
            [3, 5, 7],
            [2, 2],
            [0],
        ]


class TestFormula:
    def test_published_values(self):
        assert gk_formula(RepConfig(5, 2, 3)) == 8
        assert gk_formula(RepConfig(4, 2, 3)) == 5
        assert gk_formula(RepConfig(5, 2, 2)) == 6
        assert gk_formula(RepConfig(4, 1, 4)) == 3
        assert gk_formula(RepConfig(3, 3, 3)) == 0
        assert gk_formula(RepConfig(6, 3, 3)) == 9
        assert gk_formula(RepConfig(7, 3, 3)) == 12

    def test_minimal(self):
        assert minimal_gk(RepConfig(4, 2, 4)) == 3
        assert is_minimal_case(RepConfig(4, 2, 4))
        assert is_minimal_case(RepConfig(4, 1, 1))
        assert not is_minimal_case(RepConfig(5, 2, 3))

    def test_minimal_iff_formula(self):
        for n in range(2, 13):
            for n1 in range(1, n + 1):
                for n2 in range(n1, n + 1):
                    if n1 == n2 == n:
                        continue
                    cfg = RepConfig(n, n1, n2)
                    assert is_minimal_case(cfg) == (gk_formula(cfg) == n - 1), cfg


def per_case_degree(cfg: RepConfig) -> int:
    """Independent transcription of the end-of-case degree values, written
    from the case analysis rather than the ordered formula branches."""
    n, a, b = cfg.n, cfg.n1, cfg.n2
    if a + 1 < b < n or a + 1 == b < n:  # split x/y blocks, top below n
        if a == 1 or b == n - 1:
            return 2 * n - 3
        return 2 * n - 2
    if b == n and a < b:  # top block reaches n
        return n - 1
    if a == b < n - 1:  # equal blocks, low
        if a == 1:
            return n - 1
        if a == 2 or a == n - 2:
            return 2 * n - 4
        if a == 3 and n == 6:
            return 2 * n - 3
        return 2 * n - 2
    if a == b == n - 1:
        return n - 1
    return 0  # a == b == n


class TestCrossTranscription:
    def test_formula_matches_case_analysis(self):
        for n in range(2, 13):
            for n1 in range(1, n + 1):
                for n2 in range(n1, n + 1):
                    cfg = RepConfig(n, n1, n2)
                    assert gk_formula(cfg) == per_case_degree(cfg), cfg


class TestOracles:
    def test_compositions(self):
        assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
        assert list(compositions(0, 0)) == [()]
        assert list(compositions(3, 1)) == [(3,)]

    def test_a_k_example(self):
        r = oracle_a_k(RepConfig(3, 1, 2), 2)
        assert (r.brute_value, r.closed_value, r.agree) == (3, 3, True)

    def test_a_k_zero(self):
        r = oracle_a_k(RepConfig(4, 2, 3), 0)
        assert (r.brute_value, r.closed_value) == (1, 1)

    def test_a_k_single_pair(self):
        r = oracle_a_k(RepConfig(2, 1, 1), 5)
        assert (r.brute_value, r.closed_value, r.agree) == (1, 1, True)

    def test_a_k_agreement_sample(self):
        for n in range(2, 6):
            for n1 in range(1, n):
                for k in range(7):
                    assert oracle_a_k(RepConfig(n, n1, n), k).agree

    def test_d_k_example(self):
        r = oracle_d_k(RepConfig(3, 1, 2), 2)
        assert (r.brute_value, r.closed_value, r.agree) == (3, 3, True)

    def test_d_k_zero(self):
        r = oracle_d_k(RepConfig(4, 1, 2), 0)
        assert (r.brute_value, r.closed_value) == (1, 1)

    def test_d_k_no_closed_form(self):
        r = oracle_d_k(RepConfig(4, 2, 2), 3)
        assert r.closed_value is None
        assert not r.agree
        assert r.brute_value > 0

    def test_d_k_precondition(self):
        with pytest.raises(ValueError):
            oracle_d_k(RepConfig(3, 3, 3), 1)

    def test_dprime_zero_and_one(self):
        cfg = RepConfig(5, 2, 3)
        assert oracle_dprime_k(cfg, 0).brute_value == 1
        assert oracle_dprime_k(cfg, 1).brute_value == 8

    def test_dprime_precondition(self):
        with pytest.raises(ValueError):
            oracle_dprime_k(RepConfig(4, 1, 2), 1)


class TestSweeps:
    def test_single_generator_line(self):
        cfg = RepConfig(2, 1, 1)
        spec = find_spec(cfg, "F1", 0, 0)
        report = filtration_sweep(spec, 6)
        assert report.phi == [1, 2, 3, 4, 5, 6, 7]
        assert report.degree_estimate == 1
        assert report.verdict == MATCH
        assert report.leading_coeff == 1

    def test_free_module_fixture(self):
        for j in range(1, 6):
            phi = free_module_phi(j, j + 5)
            assert phi == [comb(k + j, j) for k in range(j + 6)]
            assert estimate_degree(phi, window=3) == j

    def test_case2_n3(self):
        cfg = RepConfig(3, 1, 3)
        spec = find_spec(cfg, "F1", 0, 0)
        report = filtration_sweep(spec, 6)
        assert report.degree_estimate == 2 == gk_formula(cfg)
        assert report.verdict == MATCH

    def test_monotone_and_bounded(self):
        cfg = RepConfig(3, 1, 2)
        spec = find_spec(cfg, "F1", 1, 1)
        gens = sweep_generators(spec)
        result = span_sweep(spec.hwv, gens, 5)
        phi = result.phi
        assert all(a <= b for a, b in zip(phi, phi[1:]))
        assert all(
            phi[k] <= phi[k - 1] * (1 + len(gens)) for k in range(1, len(phi))
        )

    def test_generator_set_robustness(self):
        for cfg, family in ((RepConfig(2, 1, 1), "F1"), (RepConfig(3, 1, 3), "F2")):
            spec = find_spec(cfg, family, 0, 0)
            neg = filtration_sweep(spec, 6, generator_set="negative")
            full = filtration_sweep(spec, 6, generator_set="gl")
            assert neg.degree_estimate == full.degree_estimate

    def test_budget_yields_inconclusive(self):
        cfg = RepConfig(4, 1, 2)
        spec = find_spec(cfg, "F1", 0, 0)
        report = filtration_sweep(spec, 9, budget=SweepBudget(max_rows=20))
        assert report.truncated
        assert report.verdict == INCONCLUSIVE
        assert report.degree_estimate is None
        assert len(report.phi) >= 1

    def test_validation_failure_propagates(self):
        cfg = RepConfig(2, 1, 1)
        base = find_spec(cfg, "F1", 0, 0)
        broken = HwModuleSpec(
            case_id=base.case_id,
            cfg=cfg,
            family="F1",
            m1=0,
            m2=0,
            hwv=base.hwv,
            grading=base.grading,
            weight=(99,),
            gk_expected=base.gk_expected,
        )
        with pytest.raises(HwValidationError):
            filtration_sweep(broken, 3)

    def test_report_json_schema(self):
        import json

        cfg = RepConfig(2, 1, 2)
        spec = find_spec(cfg, "F1", 0, 0)
        report = filtration_sweep(spec, 5)
        d = json.loads(report.to_json_line())
        assert list(d.keys()) == [
            "case", "n", "n1", "n2", "m1", "m2", "l1", "l2",
            "phi", "degree_estimate", "formula", "verdict", "elapsed_ms",
        ]
        row = report.to_csv_row()
        assert row.split(",")[0] == "C4"
        assert ";".join(str(v) for v in report.phi) in row

    def test_stabilizing_module_reports_degree_zero(self):
        cfg = RepConfig(3, 3, 3)
        spec = find_spec(cfg, "F1", 1, 1)
        report = filtration_sweep(spec, 8)
        assert report.degree_estimate == 0
        assert report.verdict == MATCH
        assert report.phi[-1] == report.phi[-2]

    def test_howe_sweep(self):
        cfg = RepConfig(3, 1, 3)
        spec = find_spec(cfg, "A-", 1, 0)
        report = filtration_sweep(spec, 6)
        assert report.degree_estimate == 2
        assert report.verdict == MATCH

    def test_every_small_module_matches_formula(self):
        # every catalogued module with n <= 3 and parameters <= 2 reproduces
        # the closed-form degree; the pre-polynomial transient of phi grows
        # with m1 + m2, so the sweep depth has to clear it plus the window
        for n in (2, 3):
            for n1 in range(1, n + 1):
                for n2 in range(n1, n + 1):
                    cfg = RepConfig(n, n1, n2)
                    for spec in catalog(cfg, 2):
                        depth = spec.gk_expected + spec.m1 + spec.m2 + 4
                        report = filtration_sweep(spec, depth)
                        assert report.verdict == MATCH, (spec.key(), spec.family, report.phi)


class TestPointed:
    def test_pointed_power(self):
        cfg = RepConfig(3, 1, 1)
        spec = find_spec(cfg, "F1", 2, 0)
        report = pointed_check(spec, 8)
        assert report.all_one
        assert report.verdict == "AllOne"
        assert report.expected
        assert report.agree

    def test_unbounded_multiplicity(self):
        cfg = RepConfig(3, 1, 1)
        spec = find_spec(cfg, "F1", 1, 1)
        report = pointed_check(spec, 8)
        assert not report.all_one
        assert report.multiplicity_depth is not None
        assert report.multiplicity_depth <= 8
        assert not report.expected
        assert report.agree
        assert report.verdict.startswith("MultiplicityAt")

    def test_n2_bounded_family(self):
        cfg = RepConfig(2, 1, 2)
        spec = find_spec(cfg, "F1", 1, 1)
        report = pointed_check(spec, 8)
        assert report.all_one and report.expected and report.agree
