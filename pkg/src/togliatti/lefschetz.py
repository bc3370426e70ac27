"""Failure of the weak Lefschetz property from degree d-1 to degree d.

Both tests use the linear form ``l = x_0 + ... + x_n``, which is a
Lefschetz element for every artinian monomial ideal whenever one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from . import exactmat
from .errors import BoundExceeded
from .exactmat import Matrix
from .monomials import (
    Exponent,
    MonomialIdeal,
    generator_bound,
    inverse_system_points,
    require_artinian,
    simplex_points,
)


@dataclass(frozen=True)
class WlpVerdict:
    fails_wlp: bool
    domain_dim: int
    codomain_dim: int
    map_rank: int

    @property
    def kernel_dim(self) -> int:
        return self.domain_dim - self.map_rank


def require_within_bound(ideal: MonomialIdeal) -> None:
    bound = generator_bound(ideal.n, ideal.d)
    if ideal.r > bound:
        raise BoundExceeded(f"{ideal.r} generators exceed C(n+d-1, n-1) = {bound}")


def multiplication_matrix(ideal: MonomialIdeal) -> Matrix:
    """Matrix of ``x l : [R/I]_{d-1} -> [R/I]_d`` in monomial bases.

    Columns follow ``simplex_points(n, d-1)`` (no such monomial lies in I);
    rows follow ``inverse_system_points(I)``.
    """
    require_artinian(ideal)
    n = ideal.n
    domain = simplex_points(n, ideal.d - 1)
    codomain = inverse_system_points(ideal)
    row_of = {p: i for i, p in enumerate(codomain)}
    rows = [[0] * len(domain) for _ in codomain]
    for j, q in enumerate(domain):
        for k in range(n + 1):
            target = q[:k] + (q[k] + 1,) + q[k + 1 :]
            i = row_of.get(target)
            if i is not None:
                rows[i][j] = 1
    return Matrix.from_rows(rows, len(domain))


def fails_wlp_d_minus_1(ideal: MonomialIdeal) -> WlpVerdict:
    require_artinian(ideal)
    require_within_bound(ideal)
    mat = multiplication_matrix(ideal)
    rk = exactmat.rank(mat)
    return WlpVerdict(
        fails_wlp=rk < min(mat.rows, mat.cols),
        domain_dim=mat.cols,
        codomain_dim=mat.rows,
        map_rank=rk,
    )


def _multinomial(total: int, parts: Sequence[int]) -> int:
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


@lru_cache(maxsize=None)
def restricted_form(exponent: Exponent) -> tuple[int, ...]:
    """Coefficients of ``x^e`` after substituting ``x_n = -(x_0 + ... + x_{n-1})``.

    Indexed by ``simplex_points(n-1, d)``, the degree-d monomials in the
    remaining n variables.
    """
    n = len(exponent) - 1
    d = sum(exponent)
    head, tail = exponent[:n], exponent[n]
    sign = -1 if tail % 2 else 1
    coeffs = []
    for b in simplex_points(n - 1, d):
        rest = tuple(bi - ai for bi, ai in zip(b, head))
        if min(rest) < 0:
            coeffs.append(0)
        else:
            coeffs.append(sign * _multinomial(tail, rest))
    return tuple(coeffs)


def restricted_matrix(ideal: MonomialIdeal) -> Matrix:
    """``r x C(n+d-1, n-1)`` coefficient matrix of the generators on the hyperplane ``l = 0``."""
    return Matrix.from_rows(
        [restricted_form(g) for g in ideal.generators],
        len(simplex_points(ideal.n - 1, ideal.d)),
    )


def restricted_dependence(ideal: MonomialIdeal) -> bool:
    """True iff the generators become linearly dependent on ``x_0 + ... + x_n = 0``."""
    require_artinian(ideal)
    require_within_bound(ideal)
    return exactmat.rank(restricted_matrix(ideal)) < ideal.r
