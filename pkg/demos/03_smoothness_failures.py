"""Show which face breaks smoothness for a non-smooth minimal system."""

from togliatti import toric
from togliatti.classify import family_members
from togliatti.monomials import render_monomial

for fid, ideal in family_members("T36", 4, 2):
    verdict = toric.is_smooth(ideal)
    print(f"{fid}: {ideal}  smooth={verdict.smooth}")
    for face, condition in verdict.failures[:3]:
        pts = ", ".join(render_monomial(p) for p in face.points)
        print(f"    {condition} fails on the {face.dim}-face [{pts}]")
