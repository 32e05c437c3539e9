"""Tour of the real quadratic layer: continued fractions, units,
indecomposables and one-sided best approximations."""

from totpos.contfrac import (
    best_one_sided_approximations,
    cf_expand,
    fundamental_unit,
    omega,
    totally_positive_fundamental_unit,
)
from totpos.quadindec import (
    decomposition_witness_quad,
    iota_quad,
    quad_indecomposables,
)

# --- periodic continued fractions -----------------------------------------
# The expansion of -omega' (the conjugate trick keeps the period purely
# periodic) drives everything downstream: units, indecomposables, one-sided
# approximations.

for d in (2, 5, 13, 19, 26, 31):
    cf = cf_expand(d)
    print(f"D = {d:>3}: omega = {omega(d)},  -omega' = [{cf.u0}; "
          + ",".join(map(str, cf.period)) + "]")

# --- fundamental units ------------------------------------------------------
print()
for d in (2, 5, 13, 19, 26, 91):
    eps = fundamental_unit(d)
    plus = totally_positive_fundamental_unit(d)
    tag = "" if eps == plus else f"   (totally positive: {plus})"
    print(f"D = {d:>3}: eps = {eps}, norm {int(eps.norm())}{tag}")

# --- indecomposable classes -------------------------------------------------
# One representative per class modulo totally positive units; the class
# number iota(D) is what the biquadratic tables cite per subfield.
print()
for d in (2, 5, 6, 13, 26, 65):
    items = quad_indecomposables(d)
    print(f"D = {d:>3}: iota = {iota_quad(d)}  " +
          ", ".join(str(x) for x in items))

# A decomposable element comes with an explicit splitting.
print()
from totpos.exactalg import QuadElem

alpha = QuadElem(2, 3, 1)                       # 3 + sqrt 2
w = decomposition_witness_quad(alpha)
print(f"{alpha} splits as ({w[0]}) + ({w[1]})")

# --- one-sided best approximations -----------------------------------------
# Semiconvergent-driven lists, exact against brute force in the tests.
print()
for upper in (False, True):
    side = "above" if upper else "below"
    best = best_one_sided_approximations(13, 60, upper)
    frs = ", ".join(f"{s}/{t}" for s, t in best)
    print(f"best approximations to sqrt(13) from {side}, t <= 60: {frs}")
