"""Deterministic sample vectors for invariance checks.

Single monomials are automatically graded-homogeneous; catalogued
highest-weight vectors bring in harmonic multi-term samples so the
kernel-preservation branch is actually exercised.
"""

from __future__ import annotations

import random
from typing import List

from .poly import Poly, RepConfig


def random_monomial(cfg: RepConfig, rng: random.Random, max_exp: int = 2) -> Poly:
    m = tuple(rng.randint(0, max_exp) for _ in range(2 * cfg.n))
    return Poly.monomial(m)


def invariance_samples(cfg: RepConfig, seed: int = 0, monomials: int = 5) -> List[Poly]:
    from .catalog import catalog

    rng = random.Random(seed)
    samples = [Poly.one(cfg.n)]
    samples.extend(random_monomial(cfg, rng) for _ in range(monomials))
    hwvs = [spec.hwv for spec in catalog(cfg, 1)]
    samples.extend(hwvs[:4])
    return samples
