"""Schur polynomials, Kostka numbers and decomposition of symmetric polynomials."""

from ncinv import TPoly, kostka, partitions_of, schur_decompose, schur_poly

print("s_(2,1)(t1,t2,t3) =", schur_poly((2, 1), 3).to_str())
print("K_(3,1),(2,1,1) =", kostka((3, 1), (2, 1, 1)))

t = [TPoly.variable(3, i) for i in range(3)]
power_sum = t[0] ** 4 + t[1] ** 4 + t[2] ** 4
print("p_4 in three variables:")
for lam, c in schur_decompose(power_sum).items():
    print(f"  {c:>3} * s_({','.join(map(str, lam))})")

print("partitions of 6 in at most 3 parts:", partitions_of(6, 3))
