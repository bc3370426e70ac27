"""Slow, independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import Sequence


def det_expand(m: Sequence[Sequence[int]]) -> int:
    """Laplace expansion along the first row."""
    k = len(m)
    if k == 0:
        return 1
    if k == 1:
        return m[0][0]
    total = 0
    for j in range(k):
        if m[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            total += (-1) ** j * m[0][j] * det_expand(minor)
    return total


def minors(m: Sequence[Sequence[int]], k: int):
    rows, cols = len(m), len(m[0]) if m else 0
    for ri in itertools.combinations(range(rows), k):
        for ci in itertools.combinations(range(cols), k):
            yield det_expand([[m[i][j] for j in ci] for i in ri])


def rank_by_minors(m: Sequence[Sequence[int]]) -> int:
    """Largest k with a nonzero k x k minor."""
    if not m or not m[0]:
        return 0
    for k in range(min(len(m), len(m[0])), 0, -1):
        if any(minors(m, k)):
            return k
    return 0


def rank_fraction(m: Sequence[Sequence]) -> int:
    """Textbook Gaussian elimination over Fraction."""
    rows = [[Fraction(x) for x in r] for r in m]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def divisor_chain(m: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors as ratios of successive gcds of k x k minors."""
    out = []
    prev = 1
    for k in range(1, min(len(m), len(m[0])) + 1):
        g = 0
        for v in minors(m, k):
            g = gcd(g, v)
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def _hull2(pts):
    pts = sorted(set(pts))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def hull_vertices_2d(points) -> list[tuple[int, int]]:
    """Vertices (first two coordinates) of a planar configuration on t0+t1+t2 = d."""
    return _hull2([(p[0], p[1]) for p in points])


def smooth_by_vertex_charts_2d(points) -> bool:
    """Planar smoothness: at each hull vertex the two primitive edge vectors
    are present in the set and span Z^2."""
    proj = {(p[0], p[1]) for p in points}
    hull = _hull2(list(proj))
    if len(hull) < 3:
        raise ValueError("expects a two-dimensional configuration")
    k = len(hull)
    for i, v in enumerate(hull):
        edges = []
        for w in (hull[i - 1], hull[(i + 1) % k]):
            e = (w[0] - v[0], w[1] - v[1])
            g = gcd(*e)
            e = (e[0] // g, e[1] // g)
            if (v[0] + e[0], v[1] + e[1]) not in proj:
                return False
            edges.append(e)
        if abs(edges[0][0] * edges[1][1] - edges[0][1] * edges[1][0]) != 1:
            return False
    return True


# ---- tiny sparse polynomials: dict exponent-tuple -> coefficient


def poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for a, x in p.items():
        for b, y in q.items():
            e = tuple(i + j for i, j in zip(a, b))
            out[e] = out.get(e, 0) + x * y
    return {e: c for e, c in out.items() if c}


def poly_add(*ps: dict) -> dict:
    out: dict = {}
    for p in ps:
        for e, c in p.items():
            out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def poly_scale(p: dict, s) -> dict:
    return {e: c * s for e, c in p.items()}


def poly_eval(p: dict, point: Sequence[int]):
    total = 0
    for e, c in p.items():
        v = c
        for x, k in zip(point, e):
            v *= x**k
        total += v
    return total
