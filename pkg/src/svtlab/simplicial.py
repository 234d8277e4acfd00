"""Simplicial complexes, reduced cohomology, and the Hochster table.

Faces are bitmasks over the ambient vertex set.  The degenerate cases are
kept apart on purpose: VOID has no faces at all, EMPTY has exactly the
empty face, and Hochster's formula needs H~^{-1}(EMPTY) = k.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Tuple

from . import linalg
from .fields import FieldSpec
from .ideals import (
    SquareFreeIdeal,
    bits,
    popcount,
    stanley_reisner_facets,
)


@dataclass(frozen=True)
class SimplicialComplex:
    n: int  # ambient vertex count
    facets: tuple  # irredundant bitmasks; () with void=True is the VOID complex
    void: bool = False

    def __post_init__(self):
        if self.void and self.facets:
            raise ValueError("the void complex has no facets")
        facets = tuple(sorted(set(self.facets)))
        if any(
            f != g and f & g == f for f in facets for g in facets
        ):
            raise ValueError("facet list must be irredundant")
        object.__setattr__(self, "facets", facets)

    @classmethod
    def void_complex(cls, n: int) -> "SimplicialComplex":
        return cls(n, (), void=True)

    @classmethod
    def empty_complex(cls, n: int) -> "SimplicialComplex":
        return cls(n, (0,))

    @property
    def is_void(self) -> bool:
        return self.void

    @property
    def is_empty(self) -> bool:
        return self.facets == (0,)

    def dim(self) -> int:
        """-1 for EMPTY; undefined (ValueError) for VOID."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(popcount(f) for f in self.facets) - 1

    def contains(self, face: int) -> bool:
        if self.is_void:
            return False
        return any(face & f == face for f in self.facets)

    def faces_of_card(self, c: int) -> list:
        """All faces with exactly c vertices, sorted.  Lazy per cardinality."""
        if self.is_void:
            return []
        if c == 0:
            return [0]
        out = set()
        for f in self.facets:
            vs = bits(f)
            if len(vs) < c:
                continue
            for comb in combinations(vs, c):
                m = 0
                for v in comb:
                    m |= 1 << v
                out.add(m)
        return sorted(out)

    def all_faces(self) -> list:
        if self.is_void:
            return []
        out = []
        for c in range(self.dim() + 2):
            out.extend(self.faces_of_card(c))
        return sorted(out)


def complex_from_ideal(I: SquareFreeIdeal) -> SimplicialComplex:
    """Stanley-Reisner complex of a proper square-free ideal."""
    return SimplicialComplex(I.context.n, stanley_reisner_facets(I))


def link(delta: SimplicialComplex, face: int) -> SimplicialComplex:
    """{G : G disjoint from face, G union face in delta}."""
    if not delta.contains(face):
        raise ValueError("face is not in the complex")
    if face == 0:
        return delta
    link_facets = set()
    for f in delta.facets:
        if face & f == face:
            link_facets.add(f & ~face)
    # facets of the link are the maximal ones among these
    maximal = [
        g for g in link_facets
        if not any(h != g and g & h == g for h in link_facets)
    ]
    return SimplicialComplex(delta.n, tuple(maximal))


def reduced_euler_characteristic(delta: SimplicialComplex) -> int:
    """sum over nonempty-and-empty faces of (-1)^(|F|-1); VOID gives 0."""
    if delta.is_void:
        return 0
    chi = 0
    for c in range(delta.dim() + 2):
        chi += (-1) ** (c - 1) * len(delta.faces_of_card(c))
    return chi


def _coboundary_rows(delta: SimplicialComplex, c: int):
    """Rows = faces with c vertices, columns = faces with c+1 vertices."""
    src = delta.faces_of_card(c)
    tgt = {f: j for j, f in enumerate(delta.faces_of_card(c + 1))}
    rows = []
    for f in src:
        row = {}
        for v in range(delta.n):
            b = 1 << v
            if f & b:
                continue
            g = f | b
            if g in tgt:
                sign = (-1) ** popcount(f & (b - 1))
                row[tgt[g]] = sign
        rows.append(row)
    return rows


def reduced_cohomology(delta: SimplicialComplex, field: FieldSpec) -> Dict[int, int]:
    """dims of H~^d(delta; k) for d >= -1, nonzero entries only.

    Conventions: all dims of VOID are 0, and H~^{-1}(EMPTY) = 1.
    """
    if delta.is_void:
        return {}
    top = delta.dim()
    ranks = {}
    counts = {}
    for d in range(-1, top + 1):
        counts[d] = len(delta.faces_of_card(d + 1))
        ranks[d] = linalg.rank(_coboundary_rows(delta, d + 1), field)
    dims = {}
    for d in range(-1, top + 1):
        h = counts[d] - ranks[d] - ranks.get(d - 1, 0)
        if h:
            dims[d] = h
    return dims


def hochster_table(I: SquareFreeIdeal, field: FieldSpec) -> Dict[Tuple[int, int], int]:
    """Nonzero entries (i, face mask F) -> dim H~^{i-|F|-1}(link F; k).

    The degree-a piece of H^i_m(S/I) for a <= 0 with support F has this
    dimension when F is a face, and is 0 otherwise; so each nonempty F
    column carries infinitely many multidegrees.
    """
    delta = complex_from_ideal(I)
    table = {}
    for face in delta.all_faces():
        lk = link(delta, face)
        for d, h in reduced_cohomology(lk, field).items():
            table[(d + popcount(face) + 1, face)] = h
    return table


def depth_quotient(I: SquareFreeIdeal, field: FieldSpec) -> int:
    """depth(S/I) = min i with H^i_m(S/I) nonzero."""
    return min(i for i, _ in hochster_table(I, field))


def finite_length(I: SquareFreeIdeal, i: int, field: FieldSpec) -> bool:
    """True iff H^i_m(S/I) has finite length: only the F = empty column may be nonzero."""
    return all(
        face == 0 for (row, face) in hochster_table(I, field) if row == i
    )
