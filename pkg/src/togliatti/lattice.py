"""Togliatti test via hypersurfaces through A_I, and the two minimality tests.

Points of ``d * Delta_n`` lie on ``t_0 + ... + t_n = d``; dropping the last
coordinate identifies that hyperplane with ``Z^n``, so a degree-(d-1)
hypersurface through A_I is a polynomial of degree <= d-1 in
``t_0, ..., t_{n-1}`` vanishing at the projected points.  Polynomial
coefficient vectors are indexed by ``simplex_points(n, deg)``: the entry
for ``e`` multiplies ``t_0^e_0 ... t_{n-1}^e_{n-1}`` (``e_n`` pads the degree).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from . import exactmat
from .errors import NotTogliatti
from .exactmat import Matrix
from .lefschetz import require_within_bound
from .monomials import (
    Exponent,
    MonomialIdeal,
    inverse_system_points,
    is_pure_power,
    require_artinian,
    simplex_points,
)


@dataclass(frozen=True)
class HypersurfaceSpace:
    n: int
    d: int
    basis: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def monomials(self) -> tuple[Exponent, ...]:
        """Column labels: exponent ``e`` means ``t_0^e_0 ... t_{n-1}^e_{n-1}``."""
        return simplex_points(self.n, self.d - 1)


@dataclass(frozen=True)
class MinimalityVerdict:
    route: str  # "removal" or "prop33"
    witnesses: tuple[Exponent, ...]

    @property
    def minimal(self) -> bool:
        return not self.witnesses


def _evaluate_row(point: Sequence[int], monomials: Sequence[Exponent], n: int) -> list[int]:
    row = []
    for e in monomials:
        v = 1
        for i in range(n):
            if e[i]:
                v *= point[i] ** e[i]
        row.append(v)
    return row


def evaluation_matrix(points: Sequence[Sequence[int]], deg_bound: int, n: int | None = None) -> Matrix:
    """Rows: points (last coordinate dropped); columns: monomials of degree <= deg_bound."""
    if n is None:
        if not points:
            raise ValueError("n is required for an empty point set")
        n = len(points[0]) - 1
    monomials = simplex_points(n, deg_bound)
    return Matrix.from_rows((_evaluate_row(p, monomials, n) for p in points), len(monomials))


def _binomial_matrix(points: Sequence[Sequence[int]], deg_bound: int, n: int) -> Matrix:
    # prod_i C(t_i, e_i) spans the same polynomials as t^e (triangular change
    # of basis), so ranks agree, but the entries stay far smaller.
    monomials = simplex_points(n, deg_bound)
    rows = []
    for p in points:
        row = []
        for e in monomials:
            v = 1
            for i in range(n):
                if e[i]:
                    v *= comb(p[i], e[i])
                    if not v:
                        break
            row.append(v)
        rows.append(row)
    return Matrix.from_rows(rows, len(monomials))


def hypersurface_space(ideal: MonomialIdeal) -> HypersurfaceSpace:
    require_artinian(ideal)
    mat = evaluation_matrix(inverse_system_points(ideal), ideal.d - 1, ideal.n)
    return HypersurfaceSpace(ideal.n, ideal.d, tuple(exactmat.nullspace_basis(mat)))


def hypersurface_dim(ideal: MonomialIdeal) -> int:
    """Dimension of the hypersurface space without building a basis."""
    require_artinian(ideal)
    return exactmat.nullity(_binomial_matrix(inverse_system_points(ideal), ideal.d - 1, ideal.n))


def is_togliatti(ideal: MonomialIdeal) -> bool:
    require_artinian(ideal)
    require_within_bound(ideal)
    return hypersurface_dim(ideal) > 0


def _require_togliatti(ideal: MonomialIdeal) -> None:
    if not is_togliatti(ideal):
        raise NotTogliatti(f"({ideal}) is not a Togliatti system")


def is_minimal_removal(ideal: MonomialIdeal, *, checked: bool = False) -> MinimalityVerdict:
    """Minimality by dropping one generator at a time.

    Pure powers are skipped: dropping one leaves a non-artinian ideal.
    Pass ``checked=True`` when the Togliatti property is already known.
    """
    if not checked:
        _require_togliatti(ideal)
    witnesses = tuple(g for g in ideal.non_pure_generators() if is_togliatti(ideal.without(g)))
    return MinimalityVerdict("removal", witnesses)


def is_minimal_prop33(ideal: MonomialIdeal, *, checked: bool = False) -> MinimalityVerdict:
    """Minimality by asking whether every hypersurface through A_I can also
    pass through a non-vertex lattice point outside A_I."""
    if not checked:
        _require_togliatti(ideal)
    a_i = list(inverse_system_points(ideal))
    witnesses = []
    for p in ideal.generators:
        if is_pure_power(p):
            continue
        mat = _binomial_matrix(a_i + [p], ideal.d - 1, ideal.n)
        if exactmat.nullity(mat):
            witnesses.append(p)
    return MinimalityVerdict("prop33", tuple(witnesses))
