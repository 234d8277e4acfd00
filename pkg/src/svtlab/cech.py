"""The multigraded Cech engine.

For a square-free ideal I = (f_1, ..., f_r) the degree-a piece of the
localization S_{f_T} is one-dimensional exactly when every coordinate
that is negative in a lies in the support of f_T (a monomial survives
the localization iff its negative exponents can be cleared by the
inverted variables).  So the degree-a piece of the Cech complex depends
on a only through N = {j : a_j < 0}, and one finite sign complex per
"negativity pattern" N computes every graded piece of H^i_I(S).

Per pattern N, position k of the complex carries the k-subsets T of the
generators with N contained in union of supports; the differentials are
the usual Cech alternating signs restricted to the active terms.  Ranks
are taken exactly (integer elimination over Q, or mod p).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Optional, Tuple

from . import linalg
from .fields import FieldSpec
from .ideals import (
    CapExceededError,
    SquareFreeIdeal,
    SquareFreeMonomial,
    bits,
    popcount,
)


@dataclass(frozen=True)
class EngineLimits:
    """Resource guards; the defaults admit the 8-variable, 9-generator fixtures."""

    max_vars: int = 8
    max_generators: int = 20
    max_matrix_cells: int = 2_000_000  # per-pattern sum of |C^k| * |C^{k+1}|

    def check(self, I: SquareFreeIdeal):
        if I.context.n > self.max_vars:
            raise CapExceededError(
                f"{I.context.n} variables exceeds the engine cap {self.max_vars}"
                " (raise max_vars to override)"
            )
        if I.r > self.max_generators:
            raise CapExceededError(
                f"{I.r} generators exceeds the engine cap {self.max_generators}"
            )
        r = I.r
        cells = sum(
            _binom(r, k) * _binom(r, k + 1) for k in range(r)
        )
        if cells > self.max_matrix_cells:
            raise CapExceededError(
                f"estimated matrix cells {cells} exceed the budget "
                f"{self.max_matrix_cells}"
            )


DEFAULT_LIMITS = EngineLimits()


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


@dataclass(frozen=True)
class NegPattern:
    """The set of strictly negative coordinates of a multidegree."""

    mask: int

    def indices(self) -> tuple:
        return tuple(bits(self.mask))


@dataclass
class GradedComplex:
    """The degree-class complex of one negativity pattern."""

    r: int
    pattern: int
    supports: tuple  # generator support masks
    active: list  # active[k]: sorted list of k-subset masks of [r]

    def differential(self, k: int) -> list:
        """Sparse rows: sources = active[k], columns index active[k+1]."""
        if k < 0 or k >= self.r:
            return []
        src = self.active[k]
        tgt = {T: j for j, T in enumerate(self.active[k + 1])}
        rows = []
        for T in src:
            row = {}
            for s in range(self.r):
                b = 1 << s
                if T & b:
                    continue
                T2 = T | b
                j = tgt.get(T2)
                if j is not None:
                    row[j] = (-1) ** popcount(T & (b - 1))
            rows.append(row)
        return rows


def build_graded_complex(
    I: SquareFreeIdeal, pattern: int, limits: EngineLimits = DEFAULT_LIMITS
) -> GradedComplex:
    limits.check(I)
    supports = I.generators
    r = len(supports)
    unions = {0: 0}
    active: list = [[] for _ in range(r + 1)]
    if pattern == 0:
        active[0].append(0)
    # subsets in increasing mask order = lexicographic subset enumeration
    for T in range(1, 1 << r):
        low = T & -T
        u = unions[T ^ low] | supports[low.bit_length() - 1]
        unions[T] = u
        if pattern & u == pattern:
            active[popcount(T)].append(T)
    return GradedComplex(r, pattern, supports, active)


def _complex_dims(cx: GradedComplex, field: FieldSpec) -> Dict[int, int]:
    ranks = {}
    for k in range(cx.r):
        if cx.active[k] and cx.active[k + 1]:
            ranks[k] = linalg.rank(cx.differential(k), field)
        else:
            ranks[k] = 0
    dims = {}
    for k in range(cx.r + 1):
        h = len(cx.active[k]) - ranks.get(k, 0) - ranks.get(k - 1, 0)
        if h:
            dims[k] = h
    return dims


@dataclass
class CohomologyTable:
    """Nonzero k-dimensions of the graded pieces H^i_I(S)_N."""

    ideal: SquareFreeIdeal
    field: FieldSpec
    dims: Dict[Tuple[int, int], int]  # (i, pattern mask) -> dim > 0

    @property
    def n(self) -> int:
        return self.ideal.context.n

    def dim(self, i: int, pattern: int) -> int:
        return self.dims.get((i, pattern), 0)

    def row(self, i: int) -> Dict[int, int]:
        return {p: d for (j, p), d in self.dims.items() if j == i}

    def is_row_zero(self, i: int) -> bool:
        return not self.row(i)

    def nonzero_rows(self) -> list:
        return sorted({i for i, _ in self.dims})

    def entries(self) -> list:
        """Sorted JSON-ready triples, nonzero entries only."""
        names = self.ideal.context.names_of
        out = [
            {"i": i, "pattern": list(names(p)), "dim": d}
            for (i, p), d in self.dims.items()
        ]
        out.sort(key=lambda e: (e["i"], e["pattern"]))
        return out


def local_cohomology_table(
    I: SquareFreeIdeal,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
) -> CohomologyTable:
    """Every graded piece of H^*_I(S), one pattern class at a time.

    Patterns not contained in the union of the generator supports are zero
    (no active terms at all) and are skipped without building complexes.
    """
    if not I.is_proper or I.is_zero:
        raise ValueError("local cohomology table needs a proper nonzero ideal")
    limits.check(I)
    union = I.support_union()
    dims: Dict[Tuple[int, int], int] = {}
    sub = union
    patterns = [0]
    while sub:
        patterns.append(sub)
        sub = (sub - 1) & union
    for pattern in sorted(patterns):
        cx = build_graded_complex(I, pattern, limits)
        for i, d in _complex_dims(cx, field).items():
            dims[(i, pattern)] = d
    return CohomologyTable(I, field, dims)


def is_vanishing(
    I: SquareFreeIdeal,
    i: int,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
    table: Optional[CohomologyTable] = None,
) -> bool:
    table = table if table is not None else local_cohomology_table(I, field, limits)
    return table.is_row_zero(i)


def cohomological_dimension(
    I: SquareFreeIdeal,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
    table: Optional[CohomologyTable] = None,
) -> int:
    table = table if table is not None else local_cohomology_table(I, field, limits)
    return max(table.nonzero_rows())


def is_artinian(
    I: SquareFreeIdeal,
    i: int,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
    table: Optional[CohomologyTable] = None,
) -> bool:
    """H^i_I(S) is artinian iff it is supported only at the maximal ideal.

    Inverting any variable x_j kills an artinian module, and the graded
    pieces with j not in N assemble to H^i_I(S)_{x_j}; so artinian-ness is
    exactly the vanishing of every pattern except N = [n].
    """
    table = table if table is not None else local_cohomology_table(I, field, limits)
    full = I.context.full_mask
    return all(p == full for p in table.row(i))


def q_invariant(
    I: SquareFreeIdeal,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
    table: Optional[CohomologyTable] = None,
) -> Optional[int]:
    """Largest i with H^i_I(S) not artinian, or None when all are artinian."""
    table = table if table is not None else local_cohomology_table(I, field, limits)
    full = I.context.full_mask
    bad = [i for i, p in table.dims if p != full]
    return max(bad) if bad else None


@dataclass
class InducedMap:
    """Matrix of x_j on cohomology, from pattern N to N minus {j}."""

    i: int
    variable: int  # index j
    source_pattern: int  # contains j
    target_pattern: int
    matrix: list  # dense rows (target basis) x columns (source basis)
    source_dim: int
    target_dim: int
    field: FieldSpec

    @property
    def is_surjective(self) -> bool:
        if self.target_dim == 0:
            return True
        return linalg.dense_rank(self.matrix, self.field) == self.target_dim


def _cohomology_basis(cx: GradedComplex, i: int, field: FieldSpec):
    """(reducer seeded with the coboundaries, chosen cocycle class reps).

    Cocycle bases come from the left kernel of d_i in the lexicographic
    subset order, so serialized maps are reproducible.
    """
    m = len(cx.active[i])
    kernel = (
        linalg.left_kernel_basis(cx.differential(i), field)
        if i < cx.r and cx.active[i + 1]
        else [
            [field.one if k == t else field.zero for k in range(m)]
            for t in range(m)
        ]
    )
    red = linalg.Reducer(m, field)
    if i > 0 and cx.active[i - 1]:
        for row in cx.differential(i - 1):
            vec = [field.zero] * m
            for c, v in row.items():
                vec[c] = field.of(v)
            red.add(vec)
    reps = [z for z in kernel if red.add(z)]
    return red, reps


def multiplication_map(
    I: SquareFreeIdeal,
    i: int,
    variable: int,
    pattern: int,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
) -> InducedMap:
    """Induced map H^i(C(N)) -> H^i(C(N \\ {j})) for j in N.

    At the chain level the map is the inclusion of the active terms of
    C(N) into those of C(N \\ {j}) (where the source term is missing, the
    component is zero); patterns with j outside N change nothing and are
    isomorphisms, so only these comparison maps are materialized.
    """
    b = 1 << variable
    if not pattern & b:
        raise ValueError("the variable must lie in the source pattern")
    src = build_graded_complex(I, pattern, limits)
    tgt = build_graded_complex(I, pattern & ~b, limits)

    src_red, src_reps = _cohomology_basis(src, i, field)
    tgt_red, tgt_reps = _cohomology_basis(tgt, i, field)
    h_src = len(src_reps)
    h_tgt = len(tgt_reps)
    n_boundary = tgt_red.count - h_tgt  # boundary vectors were added first

    tgt_pos = {T: j for j, T in enumerate(tgt.active[i])}
    col_of_src = [tgt_pos[T] for T in src.active[i]]

    matrix = [[field.zero] * h_src for _ in range(h_tgt)]
    for col, rep in enumerate(src_reps):
        vec = [field.zero] * len(tgt.active[i])
        for k, v in enumerate(rep):
            if v != field.zero:
                vec[col_of_src[k]] = v
        combo = tgt_red.express(vec)
        if combo is None:
            raise AssertionError("image of a cocycle is not a cocycle")
        for k, v in combo.items():
            if k >= n_boundary:  # coefficient on a cohomology representative
                matrix[k - n_boundary][col] = field.neg(v)
    return InducedMap(
        i=i,
        variable=variable,
        source_pattern=pattern,
        target_pattern=pattern & ~b,
        matrix=matrix,
        source_dim=h_src,
        target_dim=h_tgt,
        field=field,
    )


def is_multiplication_surjective(
    I: SquareFreeIdeal,
    i: int,
    x: SquareFreeMonomial,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
    table: Optional[CohomologyTable] = None,
) -> bool:
    """Surjectivity of x on H^i_I(S).

    Multiplication by a monomial factors through variable steps, and each
    step is an isomorphism on the graded pieces whose pattern it does not
    change; so surjectivity reduces to the comparison maps at (i, N, j)
    for j in supp(x) and j in N.
    """
    if x.is_unit:
        raise ValueError("multiplication by the unit monomial is trivially the identity")
    table = table if table is not None else local_cohomology_table(I, field, limits)
    # only failures onto a nonzero target matter, so walk the nonzero row
    # entries whose pattern misses j; the source pattern is N | {j}
    for j in bits(x.support):
        b = 1 << j
        for target, _ in sorted(table.row(i).items()):
            if target & b:
                continue
            if table.dim(i, target | b) == 0:
                return False
            if not multiplication_map(I, i, j, target | b, field, limits).is_surjective:
                return False
    return True


def is_divisible(
    I: SquareFreeIdeal,
    i: int,
    field: FieldSpec = FieldSpec(0),
    limits: EngineLimits = DEFAULT_LIMITS,
    table: Optional[CohomologyTable] = None,
) -> bool:
    """Divisibility of H^i_I(S) by every nonzero monomial.

    Surjectivity for each single variable suffices: a monomial acts as the
    composition of its variables, and a composition of surjections is
    surjective.  (Whether this extends to arbitrary nonzero ring elements
    in the graded model is deliberately not claimed.)
    """
    table = table if table is not None else local_cohomology_table(I, field, limits)
    return all(
        is_multiplication_surjective(
            I, i, SquareFreeMonomial(I.context, 1 << j), field, limits, table
        )
        for j in range(I.context.n)
    )
