"""Theorem-level checkers built on top of the other modules.

svt_check cross-examines the cohomology engine against the combinatorial
side (graph connectedness); hlv_check / grade_check / mayer_vietoris_check
are differential-testing sentinels that must return True on every input,
and the sweep hammers the vanishing equivalence on seeded random ideals.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional

from . import cech, graphs, simplicial
from .cech import CohomologyTable, DEFAULT_LIMITS, EngineLimits
from .fields import FieldSpec
from .ideals import (
    SquareFreeIdeal,
    VariableContext,
    dim_quotient,
    height,
    intersect,
    is_m_primary,
    minimal_primes,
    sum_ideals,
)


@dataclass
class Hypothesis:
    name: str
    holds: bool
    evidence: str
    model_level: bool = True  # evaluated on the equal-characteristic graded model
    vacuous: bool = False

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "evidence": self.evidence,
            "model_level": self.model_level,
            "vacuous": self.vacuous,
        }


@dataclass
class AnalysisReport:
    ideal: SquareFreeIdeal
    field: FieldSpec
    hypotheses: List[Hypothesis]
    connected: bool
    vanishing_top_minus_one: bool
    dim_quotient: int
    height: int
    cd: int
    q: Optional[int]
    depth: int
    table: CohomologyTable
    timings: Dict[str, float] = dc_field(default_factory=dict)
    cache_state: str = "off"

    @property
    def agreement(self) -> bool:
        return self.vanishing_top_minus_one == (self.connected and self.dim_quotient >= 2)

    def to_json(self) -> dict:
        return {
            "ideal": {
                "variables": list(self.ideal.context.names),
                "generators": self.ideal.generator_lists(),
            },
            "field": self.field.label(),
            "hypotheses": [h.to_json() for h in self.hypotheses],
            "verdicts": {
                "connected": self.connected,
                "vanishing_top_minus_one": self.vanishing_top_minus_one,
                "agreement": self.agreement,
                "cd": self.cd,
                "q": self.q,
                "depth": self.depth,
                "dim_quotient": self.dim_quotient,
                "height": self.height,
            },
            "table": self.table.entries(),
            "cache": self.cache_state,
            "timings": self.timings,
        }


def svt_check(
    I: SquareFreeIdeal,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
    table: Optional[CohomologyTable] = None,
) -> AnalysisReport:
    """Both sides of the vanishing equivalence plus the hypothesis checks.

    Hypothesis failures are recorded, never fatal: the verdicts are still
    computed so a disagreement outside the hypotheses is visible.
    """
    n = I.context.n
    timings: Dict[str, float] = {}

    t0 = time.monotonic()
    primes = minimal_primes(I)
    hypotheses = []
    for p in primes:
        d = n - p.height
        hypotheses.append(
            Hypothesis(
                name=f"dim(S/{p.label()}) >= 3",
                holds=d >= 3,
                evidence=f"dim(S/q) = {d}",
            )
        )
        fl = simplicial.finite_length(p.as_ideal(), 2, field)
        entry = sum(
            v for (i, f), v in simplicial.hochster_table(p.as_ideal(), field).items()
            if i == 2 and f == 0
        )
        hypotheses.append(
            Hypothesis(
                name=f"finite length of H^2_m(S/{p.label()})",
                holds=fl,
                evidence=f"length {entry} at the origin column" if fl else "an off-origin column is nonzero",
                # evaluated on the graded quotient model S/q itself
                vacuous=(n - p.height != 2),
            )
        )
    timings["hypotheses"] = time.monotonic() - t0

    t0 = time.monotonic()
    connected = graphs.punctured_spectrum_connected(I)
    dim_q = dim_quotient(I)
    ht = height(I)
    timings["combinatorics"] = time.monotonic() - t0

    t0 = time.monotonic()
    if table is None:
        table = cech.local_cohomology_table(I, field, limits)
    vanish = table.is_row_zero(n - 1)
    cd = cech.cohomological_dimension(I, field, limits, table)
    q = cech.q_invariant(I, field, limits, table)
    timings["cohomology"] = time.monotonic() - t0

    t0 = time.monotonic()
    depth = simplicial.depth_quotient(I, field)
    timings["depth"] = time.monotonic() - t0

    return AnalysisReport(
        ideal=I,
        field=field,
        hypotheses=hypotheses,
        connected=connected,
        vanishing_top_minus_one=vanish,
        dim_quotient=dim_q,
        height=ht,
        cd=cd,
        q=q,
        depth=depth,
        table=table,
        timings=timings,
    )


def hlv_check(
    I: SquareFreeIdeal,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
    table: Optional[CohomologyTable] = None,
) -> bool:
    """Hartshorne-Lichtenbaum sentinel: H^n nonzero iff I is m-primary.

    Always True; a False return flags an engine bug."""
    n = I.context.n
    if table is None:
        table = cech.local_cohomology_table(I, field, limits)
    return table.is_row_zero(n) == (not is_m_primary(I))


def grade_check(
    I: SquareFreeIdeal,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
    table: Optional[CohomologyTable] = None,
) -> bool:
    """Grade sentinel: rows below height(I) vanish and row height(I) does not."""
    if table is None:
        table = cech.local_cohomology_table(I, field, limits)
    h = height(I)
    below = all(table.is_row_zero(i) for i in range(h))
    return below and not table.is_row_zero(h)


def mayer_vietoris_check(
    I: SquareFreeIdeal,
    J: SquareFreeIdeal,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
) -> bool:
    """Exactness bookkeeping for the Mayer-Vietoris sequence of (I, J):
    per pattern, the alternating sum of dims of H^i_{I+J}, H^i_I + H^i_J,
    H^i_{I cap J} must cancel."""
    S = sum_ideals(I, J)
    C = intersect(I, J)
    for K in (I, J, S, C):
        if K.is_zero or K.is_unit:
            raise ValueError("Mayer-Vietoris check needs all four ideals proper and nonzero")
    tI = cech.local_cohomology_table(I, field, limits)
    tJ = cech.local_cohomology_table(J, field, limits)
    tS = cech.local_cohomology_table(S, field, limits)
    tC = cech.local_cohomology_table(C, field, limits)
    patterns = {p for t in (tI, tJ, tS, tC) for (_, p) in t.dims}
    top = max((i for t in (tI, tJ, tS, tC) for (i, _) in t.dims), default=0)
    for p in patterns:
        total = 0
        for i in range(top + 1):
            total += (-1) ** i * (
                tS.dim(i, p) - tI.dim(i, p) - tJ.dim(i, p) + tC.dim(i, p)
            )
        if total != 0:
            return False
    return True


def random_square_free_ideal(
    context: VariableContext, rng: random.Random, generator_bound: int = 4
) -> SquareFreeIdeal:
    """A random proper nonzero ideal with dim(S/I) >= 1, supports of size 2..n-1."""
    n = context.n
    if n < 3:
        raise ValueError("need at least 3 variables for the 2..n-1 support range")
    while True:
        g = rng.randint(1, generator_bound)
        masks = []
        for _ in range(g):
            size = rng.randint(2, n - 1)
            vs = rng.sample(range(n), size)
            m = 0
            for v in vs:
                m |= 1 << v
            masks.append(m)
        I = SquareFreeIdeal.from_supports(context, masks)
        if I.is_zero or I.is_unit:
            continue
        if dim_quotient(I) < 1:
            continue
        return I


@dataclass
class SweepSummary:
    n: int
    trials: int
    seed: int
    generator_bound: int
    field: str
    agreements: int = 0
    failures: int = 0
    first_counterexample: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "generator_bound": self.generator_bound,
            "field": self.field,
            "agreements": self.agreements,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
        }


def random_svt_sweep(
    n: int,
    generator_bound: int,
    trials: int,
    seed: int,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
) -> SweepSummary:
    """Seeded random instances of the vanishing equivalence.

    Asserting side: H^{n-1}_I(S) = 0 iff (dim(S/I) >= 2 and the punctured
    spectrum is connected); each side computed by an independent module.
    """
    context = VariableContext(tuple(f"x{i + 1}" for i in range(n)))
    rng = random.Random(seed)
    summary = SweepSummary(
        n=n,
        trials=trials,
        seed=seed,
        generator_bound=generator_bound,
        field=field.label(),
    )
    for _ in range(trials):
        I = random_square_free_ideal(context, rng, generator_bound)
        vanish = cech.is_vanishing(I, n - 1, field, limits)
        rhs = dim_quotient(I) >= 2 and graphs.punctured_spectrum_connected(I)
        if vanish == rhs:
            summary.agreements += 1
        else:
            summary.failures += 1
            if summary.first_counterexample is None:
                summary.first_counterexample = {
                    "variables": list(context.names),
                    "generators": I.generator_lists(),
                    "vanishing": vanish,
                    "dim_quotient": dim_quotient(I),
                    "connected": graphs.punctured_spectrum_connected(I),
                }
    return summary
