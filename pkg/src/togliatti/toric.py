"""Smoothness of the toric variety of a lattice point configuration.

For every nonempty face of ``P = conv(A)`` two things are checked:

* lattice condition: the affine lattice generated by the points of A on
  the face is all of ``Z^{n+1}`` inside the face's real affine span;
* semigroup condition: the image of the semigroup generated by A (and 0)
  in ``Z(A) / Z(A on face)`` is free commutative of rank
  ``dim P - dim face``.

Faces come from an exact convex hull: facets are found among hyperplanes
through affinely independent candidate vertices, all other faces are
intersections of facets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exactmat
from .errors import EmptySet, LatticeConditionUnmet
from .exactmat import Matrix
from .monomials import Exponent, MonomialIdeal, inverse_system_points, require_artinian, sort_points


@dataclass(frozen=True)
class Face:
    dim: int
    points: tuple[Exponent, ...]
    # Linear functional maximized exactly on the face (all zeros for P itself).
    normal: tuple[int, ...]
    offset: int


@dataclass(frozen=True)
class SmoothnessVerdict:
    failures: tuple[tuple[Face, str], ...]  # (face, "lattice" | "semigroup")

    @property
    def smooth(self) -> bool:
        return not self.failures


def affine_dimension(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return -1
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return exactmat.rank(Matrix.from_rows(diffs, len(base))) if diffs else 0


def _hyperplane_normal(vectors: list[list[int]], k: int) -> list[int]:
    """Integer normal to k-1 vectors in Z^k via signed maximal minors."""
    normal = []
    for j in range(k):
        minor = [[v[c] for c in range(k) if c != j] for v in vectors]
        det = exactmat.determinant(Matrix.from_rows(minor, k - 1)) if minor else 1
        normal.append(det if j % 2 == 0 else -det)
    return normal


def _vertex_candidates(pts: list[tuple[int, ...]]) -> list[int]:
    # A midpoint of two other points of the set is never a vertex.
    present = set(pts)
    out = []
    for i, p in enumerate(pts):
        twice = tuple(2 * x for x in p)
        if not any(q != p and tuple(t - x for t, x in zip(twice, q)) in present for q in pts):
            out.append(i)
    return out


def polytope_faces(points: Sequence[Sequence[int]]) -> list[Face]:
    """All nonempty faces of conv(points), including the polytope itself.

    Sorted by dimension, then by point list.
    """
    pts = list(sort_points(points))
    if not pts:
        raise EmptySet("convex hull of an empty set")
    dim_total = len(pts[0])
    base = pts[0]
    diffs = Matrix.from_rows([[a - b for a, b in zip(p, base)] for p in pts], dim_total)
    _, chart = exactmat.rref(diffs)  # coordinates injective on the affine span
    k = len(chart)
    top = Face(k, tuple(pts), (0,) * dim_total, 0)
    if k == 0:
        return [top]

    proj = [tuple(p[c] for c in chart) for p in pts]
    candidates = _vertex_candidates(proj)
    facets: dict[frozenset[int], tuple[list[int], int]] = {}
    for subset in itertools.combinations(candidates, k):
        if any(set(subset) <= f for f in facets):
            continue
        s0 = proj[subset[0]]
        vectors = [[a - b for a, b in zip(proj[i], s0)] for i in subset[1:]]
        normal = _hyperplane_normal(vectors, k)
        if not any(normal):
            continue
        g = exactmat.content(normal)
        normal = [x // g for x in normal]
        offset = sum(a * b for a, b in zip(normal, s0))
        values = [sum(a * b for a, b in zip(normal, q)) for q in proj]
        if all(v <= offset for v in values):
            pass
        elif all(v >= offset for v in values):
            normal = [-x for x in normal]
            offset = -offset
            values = [-v for v in values]
        else:
            continue
        on = frozenset(i for i, v in enumerate(values) if v == offset)
        facets[on] = (normal, offset)

    faces = set(facets)
    frontier = set(facets)
    while frontier:
        fresh = set()
        for f in frontier:
            for g in facets:
                h = f & g
                if h and h not in faces:
                    fresh.add(h)
        faces |= fresh
        frontier = fresh

    result = [top]
    for f in faces:
        normal = [0] * k
        offset = 0
        for g, (nrm, off) in facets.items():
            if f <= g:
                normal = [a + b for a, b in zip(normal, nrm)]
                offset += off
        lifted = [0] * dim_total
        for c, v in zip(chart, normal):
            lifted[c] = v
        members = [pts[i] for i in sorted(f)]
        result.append(Face(affine_dimension(members), tuple(members), tuple(lifted), offset))
    result.sort(key=lambda face: (face.dim, face.points))
    return result


def face_lattice_condition(points: Sequence[Sequence[int]], face: Face) -> bool:
    """Does Aff_Z(A on face) exhaust the lattice points of the face's affine span?"""
    base = face.points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in face.points[1:]]
    if not diffs:
        return True
    return exactmat.is_saturated(Matrix.from_rows(diffs))


def _lattice_coordinates(basis: list[list[int]], pivots: list[int], v: Sequence[int]) -> list[int]:
    """Integer coordinates of v in an echelon lattice basis."""
    coords = []
    for i, p in enumerate(pivots):
        rest = v[p] - sum(c * basis[j][p] for j, c in enumerate(coords))
        q, rem = divmod(rest, basis[i][p])
        if rem:
            raise ValueError("vector outside the lattice")
        coords.append(q)
    check = [sum(c * basis[j][t] for j, c in enumerate(coords)) for t in range(len(v))]
    if check != list(v):
        raise ValueError("vector outside the lattice")
    return coords


def _quotient_images(points: list[Exponent], face: Face) -> tuple[list[tuple[int, ...]], int] | None:
    """Images of the points in Z(A)/Z(face points), or None if that group has torsion."""
    hnf, _ = exactmat.hermite_normal_form(Matrix.from_rows(points))
    basis = [list(r) for r in hnf.entries if any(r)]
    pivots = [next(j for j, x in enumerate(r) if x) for r in basis]
    coords = {p: _lattice_coordinates(basis, pivots, p) for p in points}
    sub = Matrix.from_rows([coords[p] for p in face.points], len(basis))
    snf, _, v = exactmat.smith_normal_form(sub)
    factors = [snf[i, i] for i in range(min(snf.shape)) if snf[i, i]]
    if any(f != 1 for f in factors):
        return None
    k = len(factors)
    images = []
    for p in points:
        y = v.T.apply(coords[p])  # row vector coords[p] @ V
        images.append(tuple(y[k:]))
    return images, len(basis) - k


def face_semigroup_condition(points: Sequence[Sequence[int]], face: Face) -> bool:
    """Is the semigroup of A, localized at the face and taken modulo its units, free of full rank?"""
    pts = list(sort_points(points))
    if not face_lattice_condition(pts, face):
        raise LatticeConditionUnmet("lattice condition fails on this face")
    quotient = _quotient_images(pts, face)
    if quotient is None:
        return False
    images, rank = quotient
    # Linear grading vanishing on the face and positive off it.
    grades = {}
    for p, img in zip(pts, images):
        g = face.offset - sum(a * b for a, b in zip(face.normal, p))
        if (g == 0) != (not any(img)):
            raise AssertionError("grading inconsistent with the quotient map")
        if g:
            grades[img] = g
    if rank == 0:
        return not grades

    gens = sorted(grades.items(), key=lambda kv: (kv[1], kv[0]))
    memo: dict[tuple[int, ...], bool] = {}

    def member(x: tuple[int, ...], grade: int) -> bool:
        if grade == 0:
            return not any(x)
        if x in memo:
            return memo[x]
        found = False
        for h, gh in gens:
            if gh > grade:
                break
            if member(tuple(a - b for a, b in zip(x, h)), grade - gh):
                found = True
                break
        memo[x] = found
        return found

    irreducible = []
    for g, grade in gens:
        reducible = any(
            member(tuple(a - b for a, b in zip(g, h)), grade - gh) for h, gh in gens if gh < grade
        )
        if not reducible:
            irreducible.append(g)
    if len(irreducible) != rank:
        return False
    det = exactmat.determinant(Matrix.from_rows(irreducible))
    return abs(det) == 1


def smoothness(points: Sequence[Sequence[int]]) -> SmoothnessVerdict:
    pts = list(sort_points(points))
    failures = []
    for face in polytope_faces(pts):
        if not face_lattice_condition(pts, face):
            failures.append((face, "lattice"))
        elif not face_semigroup_condition(pts, face):
            failures.append((face, "semigroup"))
    return SmoothnessVerdict(tuple(failures))


def is_smooth(ideal: MonomialIdeal) -> SmoothnessVerdict:
    require_artinian(ideal)
    points = inverse_system_points(ideal)
    if not points:
        raise EmptySet("A_I is empty")
    return smoothness(points)
