"""Indecomposables of a quadratic subfield may or may not stay
indecomposable upstairs; the designated subfields always preserve, the
third one can fail with an explicit splitting."""

from fractions import Fraction

from totpos.census import biquadratic_fields
from totpos.exactalg import BiquadField, QuadElem
from totpos.indecenum import (
    decomposition_witness,
    indecomposables,
    preservation_check,
)

# --- the two designated subfields preserve everywhere ------------------------
for F in biquadratic_fields(10**4):
    result = indecomposables(F)
    verdicts = []
    for rad in (F.p, F.q):
        rep = preservation_check(F, rad, result=result)
        verdicts.append(f"sqrt({rad}): {len(rep.preserved)} stay")
    print(f"({F.p:>2},{F.q:>3},{F.r:>3})  " + "; ".join(verdicts))

# --- the famous failures ------------------------------------------------------
# 26 + 5 sqrt 26 is indecomposable in Q(sqrt 26) but splits in
# Q(sqrt 14, sqrt 91) into a conjugate pair of half-integral elements.
print()
F = BiquadField(14, 91)
alpha = F.from_quad(QuadElem(26, 26, 5))
beta, gamma = decomposition_witness(alpha)
print(f"in Q(sqrt 14, sqrt 91):  26+5*sqrt(26) = ({beta}) + ({gamma})")

# (25 + 3 sqrt 65)/2 does the same in Q(sqrt 5, sqrt 13).
G = BiquadField(5, 13)
alpha = G.from_quad(QuadElem(65, Fraction(25, 2), Fraction(3, 2)))
beta, gamma = decomposition_witness(alpha)
print(f"in Q(sqrt 5, sqrt 13):   (25+3*sqrt(65))/2 = ({beta}) + ({gamma})")
