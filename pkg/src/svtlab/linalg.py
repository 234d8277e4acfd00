"""Exact linear algebra over Q and GF(p).

Matrices are stored as lists of sparse rows (dict column -> nonzero int).
Ranks over Q use fraction-free integer elimination: pivoting on a +-1
entry keeps the update integral; when only larger pivots remain, the
cross-multiplication step ``row <- pivot*row - entry*pivot_row`` followed
by a gcd reduction keeps everything in Z without changing the rank.
The dense helpers (kernels, coordinate solves) work over FieldSpec
elements and are only used on the small cohomology-sized matrices.
"""

from __future__ import annotations

from math import gcd
from typing import Optional

from .fields import FieldSpec

SparseRow = dict
SparseMatrix = list


def rank(rows: SparseMatrix, field: FieldSpec) -> int:
    if field.is_rationals:
        return rank_int(rows)
    return rank_mod(rows, field.characteristic)


def rank_int(rows: SparseMatrix) -> int:
    """Rank over Q of an integer matrix, exactly."""
    rows = [dict(r) for r in rows if r]
    col_rows: dict = {}
    alive = set(range(len(rows)))
    for i, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    rnk = 0
    while alive:
        # pivot choice: prefer a +-1 entry in a short row, else smallest |value|
        best = None
        for i in alive:
            r = rows[i]
            ln = len(r)
            for c, v in r.items():
                key = (abs(v) != 1, ln, abs(v))
                if best is None or key < best[0]:
                    best = (key, i, c)
            if not best[0][0] and best[0][1] <= 2:
                break
        _, pi, pc = best
        prow = rows[pi]
        pv = prow[pc]
        alive.discard(pi)
        for c in prow:
            col_rows[c].discard(pi)
        rnk += 1
        for j in [j for j in col_rows.get(pc, ()) if j in alive]:
            row = rows[j]
            w = row[pc]
            if w % pv == 0:
                f = w // pv
                for c, v in prow.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        if c not in row:
                            col_rows.setdefault(c, set()).add(j)
                        row[c] = nv
                    elif c in row:
                        del row[c]
                        col_rows[c].discard(j)
            else:
                g = 0
                for c in set(row) | set(prow):
                    nv = pv * row.get(c, 0) - w * prow.get(c, 0)
                    if nv:
                        if c not in row:
                            col_rows.setdefault(c, set()).add(j)
                        row[c] = nv
                        g = gcd(g, nv)
                    elif c in row:
                        del row[c]
                        col_rows[c].discard(j)
                if g > 1:
                    for c in row:
                        row[c] //= g
            if not row:
                alive.discard(j)
    return rnk


def rank_mod(rows: SparseMatrix, p: int) -> int:
    rows = [{c: v % p for c, v in r.items() if v % p} for r in rows]
    rows = [r for r in rows if r]
    col_rows: dict = {}
    alive = set(range(len(rows)))
    for i, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    rnk = 0
    while alive:
        pi = min(alive, key=lambda i: len(rows[i]))
        prow = rows[pi]
        pc = next(iter(prow))
        pinv = pow(prow[pc], p - 2, p)
        alive.discard(pi)
        for c in prow:
            col_rows[c].discard(pi)
        rnk += 1
        for j in [j for j in col_rows.get(pc, ()) if j in alive]:
            row = rows[j]
            f = (row[pc] * pinv) % p
            for c, v in prow.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    if c not in row:
                        col_rows.setdefault(c, set()).add(j)
                    row[c] = nv
                elif c in row:
                    del row[c]
                    col_rows[c].discard(j)
            if not row:
                alive.discard(j)
    return rnk


def left_kernel_basis(rows: SparseMatrix, field: FieldSpec) -> list:
    """Basis of {x : sum_i x_i * row_i = 0}, as dense vectors of length len(rows).

    Deterministic: elimination walks rows in their given order, so callers
    that fix the row order (e.g. lexicographic subset enumeration) get a
    reproducible kernel basis.
    """
    m = len(rows)
    work = [{c: field.of(v) for c, v in r.items()} for r in rows]
    # transformation matrix, tracks row operations applied to the identity
    trans = [{i: field.one} for i in range(m)]
    pivots: dict = {}  # column -> row index
    kernel = []
    for i in range(m):
        row = work[i]
        t = trans[i]
        while row:
            c = min(row)
            if c not in pivots:
                break
            j = pivots[c]
            f = field.mul(row[c], field.inv(work[j][c]))
            for cc, vv in work[j].items():
                nv = field.sub(row.get(cc, field.zero), field.mul(f, vv))
                if nv == field.zero:
                    row.pop(cc, None)
                else:
                    row[cc] = nv
            for cc, vv in trans[j].items():
                nv = field.sub(t.get(cc, field.zero), field.mul(f, vv))
                if nv == field.zero:
                    t.pop(cc, None)
                else:
                    t[cc] = nv
        if row:
            pivots[min(row)] = i
        else:
            vec = [field.zero] * m
            for cc, vv in t.items():
                vec[cc] = vv
            kernel.append(vec)
    return kernel


class Reducer:
    """Incremental echelon of dense vectors over a field.

    add() reports whether the vector enlarged the span; express() writes a
    vector as a combination of the previously added independent vectors.
    """

    def __init__(self, dim: int, field: FieldSpec):
        self.dim = dim
        self.field = field
        self.rows: list = []  # (pivot, vector, combo) with vector[pivot] == 1
        self.count = 0  # total vectors offered, used to index combos

    def _reduce(self, vec: list, combo: dict):
        f = self.field
        for piv, row, rcombo in self.rows:
            x = vec[piv]
            if x == f.zero:
                continue
            for k in range(piv, self.dim):
                if row[k] != f.zero:
                    vec[k] = f.sub(vec[k], f.mul(x, row[k]))
            for k, v in rcombo.items():
                nv = f.sub(combo.get(k, f.zero), f.mul(x, v))
                if nv == f.zero:
                    combo.pop(k, None)
                else:
                    combo[k] = nv
        return vec, combo

    def add(self, vec: list) -> bool:
        f = self.field
        idx = self.count
        self.count += 1
        vec, combo = self._reduce(list(vec), {idx: f.one})
        for piv in range(self.dim):
            if vec[piv] != f.zero:
                inv = f.inv(vec[piv])
                vec = [f.mul(inv, v) for v in vec]
                combo = {k: f.mul(inv, v) for k, v in combo.items()}
                self.rows.append((piv, vec, combo))
                self.rows.sort(key=lambda t: t[0])
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)

    def express(self, vec: list) -> Optional[dict]:
        """Coefficients {added-vector-index: coeff} with vec = -sum coeff*v_i,
        or None if vec is outside the span."""
        f = self.field
        vec, combo = self._reduce(list(vec), {})
        if any(v != f.zero for v in vec):
            return None
        return combo


def dense_rank(matrix: list, field: FieldSpec) -> int:
    """Rank of a dense matrix of field elements (rows as lists)."""
    if not matrix:
        return 0
    red = Reducer(len(matrix[0]), field)
    for row in matrix:
        red.add(row)
    return red.rank
