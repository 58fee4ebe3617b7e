#!/usr/bin/env python3
"""Exhibit the kernel: the family is never injective.

The B-side image is upper triangular, so its commutator subgroup lands in
the abelian unipotent group (1, *; 0, 1).  Commutators of commutators are
therefore killed: [[x,y],[x^2,y]] is a nontrivial word of length 16 whose
image is exactly the identity matrix, for every parameter choice and every t.
"""

from slcert import build_representation, evaluate, kernel_witness
from slcert.rep import SURFACE_GENUS2, SURFACE_PUNCTURED_TORUS
from slcert.words import abelianize, commutator, format_word

inner_one = commutator("x", "y")
inner_two = commutator("xx", "y")
witness = commutator(inner_one, inner_two)
print(f"w0 = [[x,y],[x^2,y]] = {format_word(witness)}  ({len(witness)} letters)")
print(f"abelianization: {abelianize(witness)} (dies in homology, as it must)\n")

for surface in (SURFACE_GENUS2, SURFACE_PUNCTURED_TORUS):
    rep = build_representation(surface=surface)
    print(f"on {surface}:")
    print(f"phi_t([x,y]) =\n{evaluate(rep, inner_one)}")
    print(f"phi_t([x^2,y]) =\n{evaluate(rep, inner_two)}")
    word, cert = kernel_witness(rep)
    print(f"phi_t(w0) =\n{evaluate(rep, word)}")
    print(f"certificate: {cert.verdict}\n")

print(
    "both commutators are unipotent upper triangular, and such matrices\n"
    "commute, so their commutator collapses to I -- while w0 is visibly a\n"
    "nontrivial reduced word in the free group.  Non-injectivity, certified."
)
