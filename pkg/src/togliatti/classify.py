"""Exhaustive classification of minimal monomial Togliatti systems.

Candidates are the n+1 pure powers plus every choice of ``mu - n - 1``
further degree-d monomials.  Each candidate is first run through a cheap
exact screen based on the restriction of the generators to the hyperplane
``x_0 + ... + x_n = 0``: the kernel of multiplication by that linear form
from degree d-1 to d has dimension ``r - rank(restricted generators)``, so
the screen decides the Togliatti property and single-removal minimality
with ``(mu-n-1)``-row integer matrices instead of ``C(n+d, n)``-row ones.
Survivors are deduplicated up to coordinate permutation and then re-checked
with the full hypersurface / WLP / minimality tests.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import comb, lcm
from pathlib import Path
from typing import Iterable, Sequence

from . import exactmat, toric
from .errors import BoundViolation, TooLarge, UnsupportedParameters
from .lefschetz import restricted_form
from .monomials import (
    Exponent,
    MonomialIdeal,
    canonical_generators,
    generator_bound,
    is_pure_power,
    parse_monomial,
    render_monomial,
    simplex_points,
    vertices,
)
from .report import CheckReport, check_ideal

DEFAULT_CEILING = 5_000_000
THEOREMS = ("T36", "T37", "MAIN1", "MAIN2", "REM1", "REM2")


@dataclass(frozen=True, order=True)
class FamilyId:
    theorem: str
    item: str

    def __str__(self) -> str:
        return f"{self.theorem}:{self.item}"


# ---------------------------------------------------------------- fixtures


def _fixture_path(name: str, fixtures_dir: str | Path | None) -> Path:
    if fixtures_dir is not None:
        return Path(fixtures_dir) / name
    return Path(str(resources.files("togliatti") / "fixtures" / name))


def read_fixture(name: str, fixtures_dir: str | Path | None = None, n: int = 2) -> list[tuple[Exponent, ...]]:
    """Monomial lists from a fixture file: one comma-separated list per line."""
    out = []
    for line in _fixture_path(name, fixtures_dir).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(tuple(parse_monomial(tok, n) for tok in line.split(",")))
    return out


def fixture_repairs(name: str, fixtures_dir: str | Path | None = None) -> list[str]:
    """The ``# repair:`` annotations of a fixture file."""
    text = _fixture_path(name, fixtures_dir).read_text(encoding="utf-8")
    return [f"{name}: {line[len('# repair:'):].strip()}" for line in text.splitlines() if line.startswith("# repair:")]


def read_labeled_verdicts(fixtures_dir: str | Path | None = None) -> list[tuple[bool, MonomialIdeal]]:
    """Entries of ``labeled_verdicts.txt`` as (smooth, ideal)."""
    out = []
    text = _fixture_path("labeled_verdicts.txt", fixtures_dir).read_text(encoding="utf-8")
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, ideal_text = line.split(":", 1)
        label, n, d = head.split()
        n, d = int(n), int(d)
        gens = tuple(parse_monomial(tok, n) for tok in ideal_text.split(","))
        out.append((label == "smooth", MonomialIdeal(n, d, gens)))
    return out


# ---------------------------------------------------------------- families


def monomials_m(k: int) -> list[Exponent]:
    """Degree-k monomials in x0, x1, x2 that are not pure powers."""
    return [e for e in simplex_points(2, k) if max(e) <= k - 1]


def monomials_m0(k: int) -> list[Exponent]:
    """Degree-k monomials in x0, x1, x2 involving every variable."""
    return [e for e in simplex_points(2, k) if min(e) >= 1]


def _mul(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _ideal(n: int, d: int, extra: Iterable[Sequence[int]]) -> MonomialIdeal:
    return MonomialIdeal(n, d, vertices(n, d) + tuple(tuple(e) for e in extra))


def _canonical(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(ideal.n, ideal.d, canonical_generators(ideal.n, ideal.generators))


_Q1 = ((2, 0, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1))
_Q2 = ((2, 0, 0), (0, 2, 0), (1, 1, 0), (0, 0, 2))
_C3 = ((3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1))


def _rem2_fixture(d: int) -> str:
    return f"rem2_d{d}.txt"


def family_members(
    theorem: str, d: int, n: int = 2, fixtures_dir: str | Path | None = None
) -> list[tuple[FamilyId, MonomialIdeal]]:
    """Every listed ideal of a theorem at the given (n, d), labelled, not deduplicated."""
    out: list[tuple[FamilyId, MonomialIdeal]] = []

    def add(item: str, ideal: MonomialIdeal) -> None:
        out.append((FamilyId(theorem, item), ideal))

    def label(e: Sequence[int]) -> str:
        return render_monomial(e) if any(e) else "1"

    if theorem == "T36":
        if n < 2 or d < 4:
            raise UnsupportedParameters("T36 needs n >= 2 and d >= 4")
        gens = [tuple(d if j == i else 0 for j in range(n + 1)) for i in range(1, n + 1)]
        gens += [tuple((d - 1 if j == 0 else 0) + (j == i) for j in range(n + 1)) for i in range(n + 1)]
        add("i", MonomialIdeal(n, d, tuple(gens)))
        if (n, d) == (2, 5):
            add("ii", _ideal(2, 5, [(3, 1, 1), (1, 2, 2)]))
        if (n, d) == (2, 4):
            add("iii", _ideal(2, 4, [(1, 1, 2), (2, 2, 0)]))
    elif theorem == "T37":
        if n < 2 or d < 4:
            raise UnsupportedParameters("T37 needs n >= 2 and d >= 4")
        for m in simplex_points(n, d - 1):
            if list(m) != sorted(m, reverse=True) or m[2] == 0:
                continue
            add(f"i:m[{label(m)}]", _ideal(n, d, [_mul(m, v) for v in vertices(n, 1)]))
        if (n, d) == (2, 5):
            for k, extra in enumerate(
                (
                    [(3, 1, 1), (2, 2, 1), (1, 3, 1)],
                    [(3, 1, 1), (1, 3, 1), (1, 1, 3)],
                    [(2, 2, 1), (2, 1, 2), (1, 2, 2)],
                ),
                start=1,
            ):
                add(f"ii[{k}]", _ideal(2, 5, extra))
        if (n, d) == (2, 7):
            for k, extra in enumerate(
                (
                    [(3, 3, 1), (3, 1, 3), (1, 3, 3)],
                    [(5, 1, 1), (1, 5, 1), (1, 1, 5)],
                    [(1, 1, 5), (3, 3, 1), (2, 2, 3)],
                    [(4, 1, 2), (2, 4, 1), (1, 2, 4)],
                ),
                start=1,
            ):
                add(f"iii[{k}]", _ideal(2, 7, extra))
    elif theorem in ("MAIN1", "MAIN2"):
        if n != 2:
            if theorem == "MAIN2":
                return out
            raise UnsupportedParameters("MAIN1 is a statement about three variables")
        if d < 6:
            raise UnsupportedParameters(f"{theorem} needs d >= 6")
        pick = monomials_m if theorem == "MAIN1" else monomials_m0
        tag, items = ("M", ("1", "2", "3")) if theorem == "MAIN1" else ("M0", ("i", "ii", "iii"))
        for item, quad, shift in ((items[0], _Q1, 2), (items[1], _Q2, 2), (items[2], _C3, 3)):
            for m in pick(d - shift):
                add(f"{item}:{tag}[{label(m)}]", _ideal(2, d, [_mul(m, q) for q in quad]))
        if theorem == "MAIN1":
            for item, name, shift in (("4", "A", 3), ("5", "B", 4), ("6", "C", 5)):
                prefix = (d - shift, 0, 0)
                for k, j in enumerate(read_fixture(f"set{name}.txt", fixtures_dir), start=1):
                    add(f"{item}:{name}[{k}]", _ideal(2, d, [_mul(prefix, e) for e in j]))
    elif theorem == "REM1":
        if n != 3 or d < 3:
            raise UnsupportedParameters("REM1 is the four-variable example, d >= 3")
        quads = ((1, 1, 0, 0), (0, 0, 1, 1), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2))
        add("1", _ideal(3, d, [_mul((d - 2, 0, 0, 0), q) for q in quads]))
    elif theorem == "REM2":
        if n != 2 or not 6 <= d <= 9:
            raise UnsupportedParameters("REM2 lists exist for n = 2, 6 <= d <= 9")
        for k, j in enumerate(read_fixture(_rem2_fixture(d), fixtures_dir), start=1):
            add(f"d{d}[{k}]", _ideal(2, d, j))
    else:
        raise UnsupportedParameters(f"unknown theorem {theorem!r}")
    return out


def theorem_families(
    theorem: str, d: int, n: int = 2, fixtures_dir: str | Path | None = None
) -> list[MonomialIdeal]:
    """Canonical, deduplicated, sorted ideals listed by a theorem at (n, d)."""
    seen = {_canonical(ideal) for _, ideal in family_members(theorem, d, n, fixtures_dir)}
    return sorted(seen, key=lambda i: i.generators)


def theorem_repairs(theorem: str, d: int, fixtures_dir: str | Path | None = None) -> list[str]:
    if theorem == "MAIN1":
        return [r for name in ("setA.txt", "setB.txt", "setC.txt") for r in fixture_repairs(name, fixtures_dir)]
    if theorem == "REM2":
        return fixture_repairs(_rem2_fixture(d), fixtures_dir)
    return []


def family_lookup(n: int, d: int, mu: int, fixtures_dir: str | Path | None = None) -> dict[Exponent, FamilyId]:
    """Map canonical generator tuples with ``mu`` generators to the first family listing them."""
    table: dict = {}
    for theorem in THEOREMS:
        try:
            members = family_members(theorem, d, n, fixtures_dir)
        except UnsupportedParameters:
            continue
        for fid, ideal in members:
            if ideal.r == mu:
                table.setdefault(canonical_generators(n, ideal.generators), fid)
    return table


# ---------------------------------------------------------------- screen


def _small_rank(rows: list[list[int]]) -> int:
    rows = [r[:] for r in rows]
    nr = len(rows)
    if not nr:
        return 0
    nc = len(rows[0])
    rank = 0
    prev = 1
    for c in range(nc):
        p = next((i for i in range(rank, nr) if rows[i][c]), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        prow = rows[rank]
        pc = prow[c]
        for i in range(rank + 1, nr):
            row = rows[i]
            f = row[c]
            rows[i] = [(pc * a - f * b) // prev for a, b in zip(row, prow)]
        prev = pc
        rank += 1
        if rank == nr:
            break
    return rank


@lru_cache(maxsize=None)
def _screen_rows(n: int, d: int) -> tuple[tuple[Exponent, ...], tuple[tuple[int, ...], ...]]:
    """Non-pure monomials and their restricted forms reduced modulo the pure powers' span.

    The rank of the full restricted matrix of an artinian ideal equals
    ``n + 1`` plus the rank of the reduced rows of its other generators.
    """
    pure = [restricted_form(v) for v in vertices(n, d)]
    red, pivots = exactmat.rref(pure)
    if len(pivots) != n + 1:
        raise AssertionError("pure powers must stay independent on the hyperplane")
    keep = [j for j in range(len(pure[0])) if j not in set(pivots)]
    others = tuple(e for e in simplex_points(n, d) if not is_pure_power(e))
    rows = []
    for e in others:
        v = [Fraction(x) for x in restricted_form(e)]
        for i, p in enumerate(pivots):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, red.entries[i])]
        part = [v[j] for j in keep]
        den = 1
        for x in part:
            den = lcm(den, x.denominator)
        ints = [int(x * den) for x in part]
        g = exactmat.content(ints) or 1
        rows.append(tuple(x // g for x in ints))
    return others, tuple(rows)


def screen_is_togliatti(n: int, d: int, extra: Sequence[Sequence[int]]) -> bool:
    """Restricted-dependence test for (pure powers) + extra."""
    others, rows = _screen_rows(n, d)
    index = {e: i for i, e in enumerate(others)}
    sub = [list(rows[index[tuple(e)]]) for e in extra]
    return _small_rank(sub) < len(sub)


def _search_chunk(args: tuple[int, int, int, int]) -> list[tuple[Exponent, ...]]:
    n, d, k, first = args
    others, rows = _screen_rows(n, d)
    found = []
    rest_range = range(first + 1, len(others))
    for tail in itertools.combinations(rest_range, k - 1):
        combo = (first,) + tail
        sub = [list(rows[i]) for i in combo]
        if _small_rank(sub) == k:
            continue
        # Single removals; every smaller subset is covered by monotonicity.
        minimal = True
        for drop in range(k):
            part = sub[:drop] + sub[drop + 1 :]
            if _small_rank(part) < k - 1:
                minimal = False
                break
        if minimal:
            gens = vertices(n, d) + tuple(others[i] for i in combo)
            found.append(canonical_generators(n, gens))
    return found


def search_minimal(n: int, d: int, mu: int, jobs: int = 1) -> list[tuple[Exponent, ...]]:
    """Canonical generator tuples of all screen-minimal Togliatti candidates.

    No parameter checks; :func:`enumerate_minimal` validates ``mu`` first.
    """
    k = mu - n - 1
    if k < 1:
        return []
    others, _ = _screen_rows(n, d)
    tasks = [(n, d, k, first) for first in range(len(others) - k + 1)]
    found: set[tuple[Exponent, ...]] = set()
    if jobs <= 1:
        for t in tasks:
            found.update(_search_chunk(t))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_search_chunk, tasks):
                found.update(part)
    return sorted(found)


# ---------------------------------------------------------------- enumeration


@dataclass
class ClassificationResult:
    n: int
    d: int
    mu: int
    found: list[MonomialIdeal]
    reports: list[CheckReport]
    matched_families: dict[str, str]
    missing_from_enumeration: list[str] = field(default_factory=list)
    smooth_only: bool = False

    def to_dict(self) -> dict:
        return {
            "parameters": {"n": self.n, "d": self.d, "mu": self.mu, "smooth_only": self.smooth_only},
            "count": len(self.found),
            "found": [r.to_dict() for r in self.reports],
            "matched_families": self.matched_families,
            "missing_from_enumeration": self.missing_from_enumeration,
        }


def candidate_count(n: int, d: int, mu: int) -> int:
    return comb(comb(n + d, n) - n - 1, mu - n - 1)


def check_parameters(n: int, d: int, mu: int, ceiling: int | None, lower_bound: bool = True) -> None:
    bound = generator_bound(n, d)
    low = 2 * n + 1 if lower_bound else n + 2
    if not low <= mu <= bound:
        raise BoundViolation(f"mu={mu} outside [{low}, {bound}]")
    if ceiling is not None and candidate_count(n, d, mu) > ceiling:
        raise TooLarge(f"{candidate_count(n, d, mu)} candidates exceed the ceiling {ceiling}")


def enumerate_minimal(
    n: int,
    d: int,
    mu: int,
    *,
    jobs: int = 1,
    ceiling: int | None = DEFAULT_CEILING,
    smooth_only: bool = False,
    with_smooth: bool = False,
    fixtures_dir: str | Path | None = None,
    lower_bound: bool = True,
) -> ClassificationResult:
    """All minimal monomial Togliatti systems with ``mu`` generators, up to permutation.

    ``lower_bound=False`` admits ``n + 2 <= mu < 2n + 1``; the cubic
    ``(x0^3, x1^3, x2^3, x0*x1*x2)`` shows the lower bound needs ``d >= 4``.
    """
    check_parameters(n, d, mu, ceiling, lower_bound)
    lookup = family_lookup(n, d, mu, fixtures_dir)
    found, reports = [], []
    for gens in search_minimal(n, d, mu, jobs):
        ideal = MonomialIdeal(n, d, gens)
        fid = lookup.get(gens)
        report = check_ideal(ideal, with_smooth=with_smooth or smooth_only, family=str(fid) if fid else None)
        if not (report.togliatti and report.minimal_removal and report.minimal_prop33):
            raise AssertionError(f"screen and full checks disagree on ({ideal})")
        if report.wlp_kernel_dim != report.hypersurface_dim:
            raise AssertionError(f"kernel dimensions disagree on ({ideal})")
        if smooth_only and not report.smooth:
            continue
        found.append(ideal)
        reports.append(report)
    found_set = {i.generators for i in found}
    missing = []
    for fid_gens, fid in sorted(lookup.items(), key=lambda kv: kv[0]):
        if fid_gens not in found_set and fid.theorem not in ("REM2",):
            missing.append(f"{fid}: {MonomialIdeal(n, d, fid_gens)}")
    return ClassificationResult(
        n=n,
        d=d,
        mu=mu,
        found=found,
        reports=reports,
        matched_families={r.ideal: r.matched_family for r in reports},
        missing_from_enumeration=missing if not smooth_only else [],
        smooth_only=smooth_only,
    )


# ---------------------------------------------------------------- verification

_EXPECTED_SMOOTH_T36 = {"i": True, "ii": True, "iii": False}


@dataclass
class VerifyReport:
    theorem: str
    n: int
    d: int
    mu: int
    found: list[str]
    expected: list[str]
    fixture: list[str]
    extras: list[str]
    missing: list[str]
    explained_by_fixture: list[str]
    unexplained: list[str]
    fixture_not_found: list[str]
    smooth_mismatches: list[str]
    repairs: list[str]

    @property
    def agrees(self) -> bool:
        """The theorem's list matches the enumeration exactly."""
        return not (self.extras or self.missing or self.smooth_mismatches)

    @property
    def agrees_with_fixture(self) -> bool:
        """Enumeration equals theorem families together with the sporadic fixture list."""
        return not (self.unexplained or self.missing or self.fixture_not_found or self.smooth_mismatches)

    def to_dict(self) -> dict:
        out = dict(self.__dict__)
        out["agrees"] = self.agrees
        out["agrees_with_fixture"] = self.agrees_with_fixture
        return out


def verify_theorem(
    theorem: str,
    d: int,
    n: int | None = None,
    *,
    jobs: int = 1,
    ceiling: int | None = DEFAULT_CEILING,
    fixtures_dir: str | Path | None = None,
) -> VerifyReport:
    """Compare an exhaustive enumeration against a theorem's list at (n, d)."""
    if theorem not in ("T36", "T37", "MAIN1", "MAIN2"):
        raise UnsupportedParameters(f"cannot verify {theorem!r}")
    if n is None:
        n = 2
    if theorem == "MAIN1" and n != 2:
        raise UnsupportedParameters("MAIN1 is a statement about three variables")
    mu = {"T36": 2 * n + 1, "T37": 2 * n + 2, "MAIN1": 2 * n + 3, "MAIN2": 2 * n + 3}[theorem]
    smooth_filter = theorem in ("T37", "MAIN2")
    result = enumerate_minimal(
        n, d, mu, jobs=jobs, ceiling=ceiling, smooth_only=smooth_filter,
        with_smooth=theorem == "T36", fixtures_dir=fixtures_dir,
    )
    found = {i.generators: i for i in result.found}
    expected = {i.generators: i for i in theorem_families(theorem, d, n, fixtures_dir)}
    fixture: dict = {}
    repairs = theorem_repairs(theorem, d, fixtures_dir)
    if theorem == "MAIN1" and 6 <= d <= 9:
        fixture = {i.generators: i for i in theorem_families("REM2", d, n, fixtures_dir)}
        repairs += theorem_repairs("REM2", d, fixtures_dir)

    smooth_mismatches = []
    if theorem == "T36":
        for fid, ideal in family_members("T36", d, n, fixtures_dir):
            gens = canonical_generators(n, ideal.generators)
            if gens in found:
                actual = toric.is_smooth(found[gens]).smooth
                if actual != _EXPECTED_SMOOTH_T36[fid.item]:
                    smooth_mismatches.append(f"{fid}: smooth={actual}")

    def texts(keys) -> list[str]:
        return [MonomialIdeal(n, d, k).render() for k in sorted(keys)]

    extras = set(found) - set(expected)
    return VerifyReport(
        theorem=theorem,
        n=n,
        d=d,
        mu=mu,
        found=texts(found),
        expected=texts(expected),
        fixture=texts(fixture),
        extras=texts(extras),
        missing=texts(set(expected) - set(found)),
        explained_by_fixture=texts(extras & set(fixture)),
        unexplained=texts(extras - set(fixture)),
        fixture_not_found=texts(set(fixture) - set(found)),
        smooth_mismatches=smooth_mismatches,
        repairs=repairs,
    )
