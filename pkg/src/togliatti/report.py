"""Per-ideal verdicts collected into one serializable record."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

from . import lattice, lefschetz, toric
from .monomials import MonomialIdeal, canonical_form, is_artinian, render_monomial


@dataclass
class CheckReport:
    ideal: str
    n: int
    d: int
    r: int
    artinian: bool
    togliatti: bool
    wlp_kernel_dim: int
    hypersurface_dim: int
    minimal_removal: bool | None = None
    minimal_prop33: bool | None = None
    smooth: bool | str = "skipped"
    matched_family: str = "unlisted"
    witnesses: dict[str, list[str]] = field(default_factory=dict)

    @property
    def minimal(self) -> bool:
        return bool(self.minimal_removal and self.minimal_prop33)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def check_ideal(
    ideal: MonomialIdeal,
    *,
    with_smooth: bool = False,
    family: str | None = None,
) -> CheckReport:
    """Run every test on one artinian ideal within the generator bound.

    Raises NotArtinian / BoundExceeded like the underlying checks.
    """
    wlp = lefschetz.fails_wlp_d_minus_1(ideal)
    hdim = lattice.hypersurface_dim(ideal)
    report = CheckReport(
        ideal=canonical_form(ideal).render(),
        n=ideal.n,
        d=ideal.d,
        r=ideal.r,
        artinian=is_artinian(ideal),
        togliatti=hdim > 0,
        wlp_kernel_dim=wlp.kernel_dim,
        hypersurface_dim=hdim,
    )
    if report.togliatti:
        removal = lattice.is_minimal_removal(ideal, checked=True)
        prop33 = lattice.is_minimal_prop33(ideal, checked=True)
        report.minimal_removal = removal.minimal
        report.minimal_prop33 = prop33.minimal
        report.witnesses = {
            "removal": [render_monomial(w) for w in removal.witnesses],
            "prop33": [render_monomial(w) for w in prop33.witnesses],
        }
    if with_smooth:
        report.smooth = toric.is_smooth(ideal).smooth
    if family is not None:
        report.matched_family = family
    return report
