"""A walk through the scalar field and the vector strata.

The whole construction lives in a 3-dimensional space over GF(4).  This
script shows the arithmetic conventions and counts the strata the hermitian
form carves out of the 63 nonzero vectors.
"""

from splithex.algebra import (
    f4_conj,
    f4_mul,
    f4_trace,
    hermitian,
    symplectic,
    to_gf2,
)
from splithex.geometry import (
    enumerate_strata,
    exterior_points,
    nonzero_vectors,
    projective_points,
    unital_points,
)

NAMES = {0: "0", 1: "1", 2: "w", 3: "w+1"}

print("=== GF(4) = {0, 1, w, w+1} with w^2 = w + 1 ===\n")
print("multiplication table:")
header = "      " + "  ".join(f"{NAMES[b]:>4}" for b in range(4))
print(header)
for a in range(4):
    row = "  ".join(f"{NAMES[f4_mul(a, b)]:>4}" for b in range(4))
    print(f"{NAMES[a]:>4} | {row}")

print("\nconjugation (the Frobenius x -> x^2) and the trace into GF(2):")
for a in range(4):
    print(f"  conj({NAMES[a]:>3}) = {NAMES[f4_conj(a)]:>3}   trace = {f4_trace(a)}")

print("\n=== vectors and the two forms ===\n")
x, y = (1, 2, 0), (0, 1, 0)
print(f"hermitian({x}, {y}) = {NAMES[hermitian(x, y)]}")
print(f"symplectic({x}, {y}) = {symplectic(x, y)}  (trace of the hermitian value)")
print(f"bit view of (w, 0, 1): {to_gf2((2, 0, 1))}")

print("\n=== strata of the 63 nonzero vectors ===\n")
strata = enumerate_strata()
print(f"nonzero vectors : {len(nonzero_vectors())}")
print(f"isotropic       : {len(strata.isotropic)}  (hermitian norm 0)")
print(f"norm one        : {len(strata.norm_one)}")
assert len(strata.isotropic) == 27 and len(strata.norm_one) == 36

print(f"\nprojective points: {len(projective_points())}")
print(f"  on the unital  : {len(unital_points())}")
print(f"  exterior       : {len(exterior_points())}")
assert len(unital_points()) == 9 and len(exterior_points()) == 12

print("\nEach projective point covers 3 vectors: 9*3 = 27 isotropic,")
print("12*3 = 36 norm-one.  Everything checks out.")
