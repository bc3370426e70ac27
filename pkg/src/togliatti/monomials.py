"""Monomials, degree-d monomial ideals and lattice points of the dilated simplex.

An exponent vector ``(a_0, ..., a_n)`` stands both for the monomial
``x_0^a_0 ... x_n^a_n`` and for a lattice point of ``d * Delta_n``.  All
point sets are emitted in descending lexicographic order (largest power of
``x_0`` first).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .errors import DegreeError, IdealSyntaxError, NotArtinian, VariableIndexError

Exponent = tuple[int, ...]


def sort_points(points: Iterable[Sequence[int]]) -> tuple[Exponent, ...]:
    """Deduplicate and sort in descending lexicographic order."""
    return tuple(sorted({tuple(p) for p in points}, reverse=True))


@lru_cache(maxsize=None)
def simplex_points(n: int, d: int) -> tuple[Exponent, ...]:
    """All exponent vectors of degree ``d`` in ``n + 1`` variables."""
    if n < 0 or d < 0:
        raise ValueError("n and d must be nonnegative")
    if n == 0:
        return ((d,),)
    return tuple((a,) + rest for a in range(d, -1, -1) for rest in simplex_points(n - 1, d - a))


def vertices(n: int, d: int) -> tuple[Exponent, ...]:
    """The pure powers ``d * e_i``."""
    return tuple(tuple(d if j == i else 0 for j in range(n + 1)) for i in range(n + 1))


def generator_bound(n: int, d: int) -> int:
    """Largest generator count C(n+d-1, n-1) for which the Togliatti notion is defined."""
    return comb(n + d - 1, n - 1)


def is_pure_power(e: Sequence[int]) -> bool:
    return sum(1 for a in e if a) == 1


def render_monomial(e: Sequence[int]) -> str:
    factors = [f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e) if a]
    return "*".join(factors) if factors else "1"


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Exponent:
    exps = [0] * (n + 1)
    token = "".join(text.split())
    if not token:
        raise IdealSyntaxError("empty monomial")
    for factor in token.split("*"):
        match = _FACTOR.match(factor)
        if match is None:
            raise IdealSyntaxError(f"malformed factor {factor!r}")
        index = int(match.group(1))
        power = int(match.group(2)) if match.group(2) is not None else 1
        if power < 1:
            raise IdealSyntaxError(f"exponent must be >= 1 in {factor!r}")
        if index > n:
            raise VariableIndexError(f"variable x{index} exceeds n={n}")
        exps[index] += power
    return tuple(exps)


@dataclass(frozen=True)
class MonomialIdeal:
    """Artinian-or-not monomial ideal generated by distinct degree-``d`` monomials.

    Generators are stored deduplicated in descending lexicographic order.
    """

    n: int
    d: int
    generators: tuple[Exponent, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least two variables (n >= 1)")
        if self.d < 2:
            raise ValueError("generation degree must be >= 2")
        gens = sort_points(self.generators)
        for g in gens:
            if len(g) != self.n + 1:
                raise VariableIndexError(f"exponent vector {g} has wrong length for n={self.n}")
            if any(a < 0 for a in g):
                raise ValueError(f"negative exponent in {g}")
            if sum(g) != self.d:
                raise DegreeError(f"{render_monomial(g)} has degree {sum(g)}, expected {self.d}")
        object.__setattr__(self, "generators", gens)

    @property
    def r(self) -> int:
        return len(self.generators)

    def render(self) -> str:
        return ",".join(render_monomial(g) for g in self.generators)

    def __str__(self) -> str:
        return self.render()

    def with_generators(self, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return MonomialIdeal(self.n, self.d, tuple(tuple(g) for g in gens))

    def without(self, g: Sequence[int]) -> "MonomialIdeal":
        g = tuple(g)
        return self.with_generators(h for h in self.generators if h != g)

    def permuted(self, perm: Sequence[int]) -> "MonomialIdeal":
        """Apply the substitution ``x_i -> x_perm[i]``."""
        out = []
        for g in self.generators:
            e = [0] * (self.n + 1)
            for i, a in enumerate(g):
                e[perm[i]] = a
            out.append(tuple(e))
        return self.with_generators(out)

    def non_pure_generators(self) -> tuple[Exponent, ...]:
        return tuple(g for g in self.generators if not is_pure_power(g))


def parse_ideal(text: str, n: int, d: int) -> MonomialIdeal:
    """Parse ``"x0^3, x1^3, x0*x1*x2"``-style text into an ideal."""
    if not text.strip():
        raise IdealSyntaxError("empty ideal")
    gens = [parse_monomial(part, n) for part in text.split(",")]
    return MonomialIdeal(n, d, tuple(gens))


def is_artinian(ideal: MonomialIdeal) -> bool:
    gens = set(ideal.generators)
    return all(v in gens for v in vertices(ideal.n, ideal.d))


def require_artinian(ideal: MonomialIdeal) -> None:
    if not is_artinian(ideal):
        raise NotArtinian(f"ideal ({ideal}) misses a pure power x_i^{ideal.d}")


def inverse_system_points(ideal: MonomialIdeal) -> tuple[Exponent, ...]:
    """Degree-d monomials outside the ideal (the point set A_I)."""
    gens = set(ideal.generators)
    return tuple(p for p in simplex_points(ideal.n, ideal.d) if p not in gens)


@lru_cache(maxsize=None)
def _permutations(k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(k)))


def canonical_generators(n: int, gens: Iterable[Sequence[int]]) -> tuple[Exponent, ...]:
    """Lexicographically least sorted generator list over all variable permutations."""
    gens = [tuple(g) for g in gens]
    best = None
    for perm in _permutations(n + 1):
        image = tuple(sorted((tuple(g[perm[i]] for i in range(n + 1)) for g in gens), reverse=True))
        if best is None or image < best:
            best = image
    return best if best is not None else ()


def canonical_form(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(ideal.n, ideal.d, canonical_generators(ideal.n, ideal.generators))
