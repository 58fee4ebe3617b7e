#!/usr/bin/env python3
"""Walk through the construction of the glued representation family.

Two once-punctured tori share their boundary curve c.  Side B gets the
upper-triangular pair, side A a genuinely Fuchsian pair conjugated so that
both boundary images coincide, and the B side is then twisted by the
one-parameter shear lambda_t.  Everything below is exact arithmetic over
Q[t]; nothing is ever evaluated numerically.
"""

from slcert import (
    SURFACE_GENUS2,
    build_phi_A,
    build_phi_B,
    build_representation,
    evaluate,
    lambda_t,
    validate_params,
)

params = validate_params(2, -3)
print(f"parameters: alpha = {params.alpha}, beta = {params.beta}")
print(f"kappa = beta*(alpha^2 - 1) = {params.kappa}  (the boundary shear)\n")

phi_b = build_phi_B(params)
print("side B, the solvable punctured torus:")
for g in "xy":
    print(f"phi_B({g}) =\n{phi_b[g]}")
boundary_b = phi_b["x"] * phi_b["y"] * phi_b["x"].inverse() * phi_b["y"].inverse()
print(f"phi_B([x,y]) =\n{boundary_b}")
print("a parabolic: the whole B image is upper triangular, hence solvable.\n")

phi_a = build_phi_A(params)
print("side A, the Fuchsian punctured torus (conjugated modular seed):")
for g in "ab":
    print(f"phi_A({g}) =\n{phi_a[g]}")
boundary_a = phi_a["a"] * phi_a["b"] * phi_a["a"].inverse() * phi_a["b"].inverse()
print(f"phi_A([a,b]) =\n{boundary_a}")
print(
    "boundary matches projectively:",
    boundary_a.projectively_equal(boundary_b),
)

lam = lambda_t(1)
print(f"\ntwist lambda_t =\n{lam}")
conjugated = lam * boundary_b * lambda_t(-1)
print("lambda_t phi_B([x,y]) lambda_t^-1 == phi_B([x,y]):", conjugated == boundary_b)
print("so the piecewise assignment is well defined for every t.\n")

rep = build_representation(params, SURFACE_GENUS2)
print("twisted images on the glued surface:")
print(f"phi_t(x) =\n{evaluate(rep, 'x')}")
print(f"phi_t(a) =\n{evaluate(rep, 'a')}")
word = "ax"
print(f"\nphi_t({word}) =\n{evaluate(rep, word)}")
print(f"trace = {evaluate(rep, word).trace()}  <- degree 1 in t, keep this in mind")
