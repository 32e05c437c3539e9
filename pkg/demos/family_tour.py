"""The three parametric families with closed-form indecomposables."""

from totpos.families import family, family_cone_contents, verify_family

# --- closed forms ------------------------------------------------------------
# Family 1: radicands (2n-1)(2n+1), (2n-1)(2n+3), (2n+1)(2n+3), iota 10n-15.
# Family 2: radicands 4n^2-1, (4n-3)(4n+1) and their product, iota 4n-1.
# Family 3: radicands 4n^2-1, (4n-1)(4n+3) and their product, iota 4n.

for label, n in (("1", 6), ("2", 9), ("3", 2)):
    fam = family(label, n)
    F = fam.field
    print(f"family {label}, n = {n}: K = Q(sqrt({F.p}), sqrt({F.q})), "
          f"disc {F.disc}, iota = {fam.iota}")

# --- a family-1 member in detail ---------------------------------------------
fam = family("1", 6)
print(f"\nfamily 1, n = 6 (radicands 143, 165, 195):")
print("  subfield units:", ", ".join(str(e) for e in fam.eps))
print("  half-integral pivot mu =", fam.mu)
print("  first classes:", ", ".join(str(x) for x in fam.indec[:5]), "...")

# The square classes of the subfield units decide which products of units
# are squares in K; only the trivial pattern and eps_p * eps_r pass.
print("  square indicators:", fam.kubota_deltas())
print("  exponent patterns giving squares:", fam.kubota_accepted())

# The six cones have linear-size parallelepipeds here, which is what makes
# the closed forms provable by finite inspection.
print("  cone parallelepiped sizes:", family_cone_contents(6))

# --- cross-check against the generic pipeline --------------------------------
for label, n in (("1", 6), ("2", 9), ("3", 2)):
    print()
    print(verify_family(label, n).describe())
