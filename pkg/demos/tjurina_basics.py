"""Tjurina and Milnor numbers of isolated hypersurface germs.

Walks through the basic workflow: parse a polynomial with exact rational
coefficients, compute the two classical deformation invariants, and
cross-check the standard-basis answer with the independent truncation
oracle.  Run with:  python3 demos/tjurina_basics.py
"""

from singkit import (
    LocalIdeal,
    milnor_number,
    parse_polynomial,
    quasi_homogeneous_weights,
    stabilized_oracle_dim,
    tjurina_number,
)

VARS = ("x", "y", "z", "w")

# The suspended A_1 singularity x^2 + y^2 + z^2 + w^(2n) has tau = 2n - 1.
print("A family of compound A_1 germs:")
for n in (1, 2, 3, 4):
    f = parse_polynomial(f"x^2 + y^2 + z^2 + w^{2*n}", VARS)
    print(f"  n = {n}:  tau({f}) = {tjurina_number(f)}")

# The cone over the Fermat cubic surface has 16 first-order deformations;
# its one-parameter deformation by the monomial xyzw drops that to 15.
cone = parse_polynomial("x^3 + y^3 + z^3 + w^3", VARS)
deformed = parse_polynomial("x^3 + y^3 + z^3 + w^3 + x*y*z*w", VARS)
print("\nCone over a cubic surface:")
print(f"  tau = {tjurina_number(cone)},  mu = {milnor_number(cone)}")
print(f"  after deforming by x*y*z*w:  tau = {tjurina_number(deformed)},"
      f"  mu = {milnor_number(deformed)}")

# tau = mu exactly when the germ is quasi-homogeneous.  The weight finder
# returns integer weights and the weighted degree, or None.
print("\nQuasi-homogeneity:")
for f in (cone, deformed):
    w = quasi_homogeneous_weights(f)
    print(f"  {f}:  weights = {w}")

# Every dimension can be recomputed without standard bases: take the
# quotient by a high power of the maximal ideal and do exact linear
# algebra.  The value is accepted once two consecutive cutoffs agree.
gens = [deformed] + [deformed.differentiate(v) for v in VARS]
dim, cutoff = stabilized_oracle_dim(LocalIdeal(VARS, gens))
print(f"\nTruncation oracle for the deformed cone: dim = {dim}, "
      f"stabilized at cutoff {cutoff}")
assert dim == tjurina_number(deformed)

# A germ whose singular locus has positive dimension reports INFINITE.
bad = parse_polynomial("x^2 + y^2", VARS)
print(f"\nNon-isolated example: tau({bad}) = {tjurina_number(bad)}")
