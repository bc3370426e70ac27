"""Walk through every verdict for the classical cubic (x0^3, x1^3, x2^3, x0*x1*x2)."""

from togliatti import lattice, lefschetz, toric
from togliatti.monomials import inverse_system_points, parse_ideal, render_monomial

ideal = parse_ideal("x0^3,x1^3,x2^3,x0*x1*x2", 2, 3)
print("ideal:", ideal)

a_i = inverse_system_points(ideal)
print(f"{len(a_i)} monomials outside the ideal:", ", ".join(render_monomial(p) for p in a_i))

wlp = lefschetz.fails_wlp_d_minus_1(ideal)
print(f"multiplication by x0+x1+x2 from degree 2 to 3: rank {wlp.map_rank} of {wlp.domain_dim}")
print("fails WLP:", wlp.fails_wlp)

space = lattice.hypersurface_space(ideal)
print("conics through A_I:", space.dim)
for coeffs in space.basis:
    terms = [f"{c}*{render_monomial(m)}" for c, m in zip(coeffs, space.monomials) if c]
    print("   ", " + ".join(terms))

print("restricted dependence:", lefschetz.restricted_dependence(ideal))
print("minimal (removal):", lattice.is_minimal_removal(ideal).minimal)
print("minimal (lattice points):", lattice.is_minimal_prop33(ideal).minimal)
print("smooth:", toric.is_smooth(ideal).smooth)
