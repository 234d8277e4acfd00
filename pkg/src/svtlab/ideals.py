"""Square-free monomials and monomial ideals, exactly.

Supports are bitmasks over the variable positions of a VariableContext.
All values are immutable; every operation is a pure function, so the
types are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


DEFAULT_MAX_VARS = 16


class ContextMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class IdealDomainError(ValueError):
    """The zero or unit ideal was handed to an operation that rejects it."""


class CapExceededError(RuntimeError):
    """A configurable resource cap (variables, generators, matrix budget) was hit."""


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> list:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class VariableContext:
    """The ambient polynomial ring k[names[0], ..., names[n-1]]."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a variable context needs at least one variable")
        if len(names) > DEFAULT_MAX_VARS:
            raise CapExceededError(
                f"{len(names)} variables exceeds the context cap {DEFAULT_MAX_VARS}"
            )
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if any(not isinstance(s, str) or not s for s in names):
            raise ValueError("variable names must be non-empty strings")

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    def mask_of(self, names: Iterable) -> int:
        m = 0
        for s in names:
            m |= 1 << self.index(s)
        return m

    def names_of(self, mask: int) -> tuple:
        return tuple(self.names[i] for i in bits(mask))


def _check_context(a, b):
    if a.context != b.context:
        raise ContextMismatchError("operands belong to different variable contexts")


@dataclass(frozen=True)
class SquareFreeMonomial:
    context: VariableContext
    support: int  # bitmask; 0 is the unit monomial

    def __post_init__(self):
        if self.support < 0 or self.support > self.context.full_mask:
            raise ValueError("support outside the variable context")

    @classmethod
    def from_names(cls, context: VariableContext, names: Iterable) -> "SquareFreeMonomial":
        return cls(context, context.mask_of(names))

    @property
    def is_unit(self) -> bool:
        return self.support == 0

    def variables(self) -> tuple:
        return self.context.names_of(self.support)

    def __str__(self):
        return "*".join(self.variables()) if self.support else "1"


def minimize_supports(masks: Iterable) -> tuple:
    """Drop generators whose support contains another generator's support."""
    masks = sorted(set(masks), key=lambda m: (popcount(m), m))
    kept = []
    for m in masks:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SquareFreeIdeal:
    """Minimized generator set; () is the zero ideal, (0,) the unit ideal."""

    context: VariableContext
    generators: tuple  # sorted tuple of support bitmasks

    def __post_init__(self):
        gens = minimize_supports(self.generators)
        object.__setattr__(self, "generators", gens)
        if any(g < 0 or g > self.context.full_mask for g in gens):
            raise ValueError("generator support outside the variable context")

    @classmethod
    def from_supports(cls, context: VariableContext, masks: Iterable) -> "SquareFreeIdeal":
        return cls(context, tuple(masks))

    @classmethod
    def from_variable_lists(cls, context: VariableContext, lists: Iterable) -> "SquareFreeIdeal":
        return cls(context, tuple(context.mask_of(g) for g in lists))

    @classmethod
    def zero(cls, context: VariableContext) -> "SquareFreeIdeal":
        return cls(context, ())

    @classmethod
    def maximal(cls, context: VariableContext) -> "SquareFreeIdeal":
        return cls(context, tuple(1 << i for i in range(context.n)))

    @classmethod
    def intersection_of_primes(cls, context: VariableContext, prime_lists: Iterable) -> "SquareFreeIdeal":
        result = None
        for vars_ in prime_lists:
            p = cls(context, tuple(1 << i for i in bits(context.mask_of(vars_))))
            result = p if result is None else intersect(result, p)
        if result is None:
            raise ValueError("empty intersection of primes")
        return result

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == (0,)

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def r(self) -> int:
        return len(self.generators)

    def support_union(self) -> int:
        u = 0
        for g in self.generators:
            u |= g
        return u

    def contains_monomial(self, support: int) -> bool:
        return any(g & support == g for g in self.generators)

    def generator_lists(self) -> list:
        return [list(self.context.names_of(g)) for g in self.generators]

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(
            str(SquareFreeMonomial(self.context, g)) for g in self.generators
        ) + ")"


@dataclass(frozen=True)
class CoordinatePrime:
    """The prime generated by the single variables in `variables`."""

    context: VariableContext
    variables: int  # nonempty bitmask

    def __post_init__(self):
        if self.variables == 0:
            raise ValueError("a coordinate prime needs at least one variable")
        if self.variables > self.context.full_mask:
            raise ValueError("variables outside the context")

    @property
    def height(self) -> int:
        return popcount(self.variables)

    def as_ideal(self) -> SquareFreeIdeal:
        return SquareFreeIdeal(self.context, tuple(1 << i for i in bits(self.variables)))

    def names(self) -> tuple:
        return self.context.names_of(self.variables)

    def label(self) -> str:
        return "P{" + ",".join(self.names()) + "}"


# ---------------------------------------------------------------------------
# operations


def intersect(I: SquareFreeIdeal, J: SquareFreeIdeal) -> SquareFreeIdeal:
    """Set-theoretic intersection: pairwise lcms (support unions), minimized."""
    _check_context(I, J)
    if I.is_zero or J.is_zero:
        return SquareFreeIdeal.zero(I.context)
    return SquareFreeIdeal(I.context, tuple(g | h for g in I.generators for h in J.generators))


def sum_ideals(I: SquareFreeIdeal, J: SquareFreeIdeal) -> SquareFreeIdeal:
    _check_context(I, J)
    return SquareFreeIdeal(I.context, I.generators + J.generators)


def _require_analyzable(I: SquareFreeIdeal):
    if I.is_zero:
        raise IdealDomainError("the zero ideal is not accepted here")
    if I.is_unit:
        raise IdealDomainError("the unit ideal is not accepted here")


def minimal_primes(I: SquareFreeIdeal, max_generators: int = 20) -> tuple:
    """Minimal primes over I, as minimal transversals of the generator supports.

    Incremental hitting-set expansion: branch on the variables of the first
    generator the partial transversal misses, with a final irredundancy
    filter.  Returned in lexicographic order of variable index sets.
    """
    _require_analyzable(I)
    if I.r > max_generators:
        raise CapExceededError(
            f"{I.r} generators exceeds the transversal cap {max_generators}"
        )
    gens = sorted(I.generators, key=popcount)
    found = []

    def extend(chosen: int, banned: int):
        for g in gens:
            if g & chosen == 0:
                break
        else:
            found.append(chosen)
            return
        for v in bits(g & ~banned):
            # ban later branches from reusing v so each transversal is built once
            extend(chosen | (1 << v), banned | (1 << v))
            banned |= 1 << v

    extend(0, 0)
    minimal = [
        t for t in found
        if not any(s != t and s & t == s for s in found)
    ]
    minimal.sort(key=lambda m: tuple(bits(m)))
    return tuple(CoordinatePrime(I.context, m) for m in minimal)


def is_m_primary(I: SquareFreeIdeal) -> bool:
    """True iff sqrt(I) is the maximal ideal, i.e. every variable is a generator."""
    if I.is_unit:
        raise IdealDomainError("the unit ideal is not accepted here")
    singles = {g for g in I.generators if popcount(g) == 1}
    return len(singles) == I.context.n


def stanley_reisner_facets(I: SquareFreeIdeal) -> tuple:
    """Facets of {F : no generator support contained in F}, by direct enumeration.

    Deliberately independent of minimal_primes (the two are dual and the
    test suite pits them against each other).
    """
    _require_analyzable(I)
    n = I.context.n
    faces = [F for F in range(1 << n) if not I.contains_monomial(F)]
    face_set = set(faces)
    facets = [
        F for F in faces
        if all((F | (1 << v)) not in face_set for v in range(n) if not F & (1 << v))
    ]
    return tuple(sorted(facets))


def dim_quotient(I: SquareFreeIdeal) -> int:
    """Krull dimension of S/I: the maximal facet cardinality."""
    return max(popcount(F) for F in stanley_reisner_facets(I))


def height(I: SquareFreeIdeal) -> int:
    """min over minimal primes of the number of variables."""
    return min(p.height for p in minimal_primes(I))
