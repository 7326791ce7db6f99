"""Optimized ground-state bounds for the three short-range test potentials.

For each potential the bound  M >= alpha m - (const) m^(3-3/q) ||V^-||_{q/(q-1)}
is maximized over the admissible exponent window.  The report carries the
optimal q, the norm it uses, and the trivial q -> 1 comparison value.
"""

from salpeter_bounds import bounds, potentials

m, alpha = 1.0, 2.0

for label, V in (
    ("exponential       V = -(g/R) e^(-r/R),      g=1, R=1", potentials.exponential(1.0, 1.0)),
    ("power-exponential V = -(g/R^2) r e^(-r/R),  g=2, R=1", potentials.power_exponential(2.0, 1.0)),
    ("singular          V = -g e^(-r/R)/sqrt(rR), g=1, R=1", potentials.singular(1.0, 1.0)),
):
    rep = bounds.optimize_mass_bound_3d(V, m, alpha)
    print(label)
    print(f"  optimal q           : {rep.q_opt:.6f}")
    print(f"  ||V^-||_q/(q-1)     : {rep.norm_value:.6f}")
    print(f"  mass bound          : M >= {rep.mass_bound:.6f} GeV"
          + ("   [vacuous]" if rep.vacuous else ""))
    print(f"  binding bound       : E >= {rep.energy_bound:.6f} GeV")
    trivial = rep.trivial_limit_bound
    shown = f"{trivial:.6f}" if trivial > -1e300 else "-inf (sup norm infinite)"
    print(f"  q->1 comparison     : M >= {shown}")
    print()

print("The singular kind needs q > 6/5 (its norm diverges for q/(q-1) >= 6);")
print("the optimizer finds that window on its own.")
print()

print("Binding-energy bounds scale linearly with the coupling:")
for g in (0.5, 1.0, 2.0):
    e = bounds.binding_energy_bound_3d(potentials.exponential(g, 1.0), m, alpha)
    print(f"  g = {g:<4} ->  E >= {e:.6f} GeV")
