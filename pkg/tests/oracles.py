"""Independent brute-force oracles used by the tests.

Everything here recomputes quantities from first principles (monomial
membership, dense Cech complexes of the quotient ring, chain
enumeration) without touching the production code paths it checks.
"""

from itertools import combinations

from svtlab import linalg
from svtlab.fields import FieldSpec
from svtlab.ideals import SquareFreeIdeal, bits, popcount


def monomial_in_ideal(I: SquareFreeIdeal, support: int) -> bool:
    return any(g & support == g for g in I.generators)


def brute_force_intersection_supports(I, J):
    """All minimal square-free supports lying in both ideals, by enumeration."""
    n = I.context.n
    members = [
        s for s in range(1 << n)
        if monomial_in_ideal(I, s) and monomial_in_ideal(J, s)
    ]
    member_set = set(members)
    return sorted(
        s for s in members
        if not any(t != s and t & s == t for t in member_set)
    )


def brute_force_facets(I: SquareFreeIdeal):
    """Maximal F with no generator support inside, by full enumeration."""
    n = I.context.n
    faces = [F for F in range(1 << n) if not monomial_in_ideal(I, F)]
    fs = set(faces)
    return sorted(
        F for F in faces
        if all((F | (1 << v)) not in fs or F & (1 << v) for v in range(n))
    )


def localized_piece_dim(support_inverted: int, degree) -> int:
    """dim_k of the degree-a piece of S_{f}, f with the given support.

    Verified by explicit clearing: x^a lies in the localization iff some
    power of the inverted variables clears every negative exponent."""
    for m in range(0, 1 + max((-d for d in degree), default=0)):
        shifted = [
            d + m * (1 if support_inverted & (1 << j) else 0)
            for j, d in enumerate(degree)
        ]
        if all(s >= 0 for s in shifted):
            return 1
    return 0


def quotient_local_cohomology_dim(I: SquareFreeIdeal, i: int, degree, field=FieldSpec(0)) -> int:
    """dim H^i_m(S/I)_a from a dense Cech complex on all n variables over S/I.

    The degree-a piece of (S/I)_{x_T} is 1-dimensional iff the positive
    support of a union T is a face of the Stanley-Reisner complex and a
    is nonnegative off T; the differentials are the Cech signs wherever
    source and target are both nonzero."""
    n = I.context.n
    pos = 0
    for j, d in enumerate(degree):
        if d > 0:
            pos |= 1 << j
    neg = 0
    for j, d in enumerate(degree):
        if d < 0:
            neg |= 1 << j

    def active(T: int) -> bool:
        if neg & ~T:
            return False
        return not monomial_in_ideal(I, pos | T)

    terms = {k: [T for T in _subsets(n, k) if active(T)] for k in range(n + 1)}
    ranks = {}
    for k in range(n):
        tgt = {T: j for j, T in enumerate(terms[k + 1])}
        rows = []
        for T in terms[k]:
            row = {}
            for v in range(n):
                b = 1 << v
                if T & b:
                    continue
                j = tgt.get(T | b)
                if j is not None:
                    row[j] = (-1) ** popcount(T & (b - 1))
            rows.append(row)
        ranks[k] = linalg.rank(rows, field)
    return len(terms.get(i, [])) - ranks.get(i, 0) - ranks.get(i - 1, 0)


def _subsets(n: int, k: int):
    out = []
    for comb in combinations(range(n), k):
        m = 0
        for v in comb:
            m |= 1 << v
        out.append(m)
    return sorted(out)


def brute_force_quotient_height(I: SquareFreeIdeal, prime_mask: int) -> int:
    """Longest chain of coordinate primes of S/I descending from prime_mask.

    Coordinate primes of S/I are the variable sets containing a minimal
    prime; chains step one variable at a time inside prime_mask."""
    containing = [
        P for P in range(1 << I.context.n)
        if P & prime_mask == P and _contains_minimal_prime(I, P)
    ]
    cset = set(containing)
    best = {}

    def depth(P):
        if P in best:
            return best[P]
        d = 0
        for v in bits(P):
            Q = P & ~(1 << v)
            if Q in cset:
                d = max(d, 1 + depth(Q))
        best[P] = d
        return d

    if prime_mask not in cset:
        raise ValueError("prime does not contain I")
    return depth(prime_mask)


def _contains_minimal_prime(I: SquareFreeIdeal, P: int) -> bool:
    # P contains I iff P is a transversal of the generator supports
    return all(g & P for g in I.generators)
