"""Invariants of Sp, O and SO in the relatively free Grassmann algebra.

The Hilbert series of F_d is read off its closed form, split into Schur
pieces, and both the filter and the substitution route are run per group.
"""

from ncinv import AlgebraSpec, GroupSpec, dual_check, hilbert_form, multiplicity_table

ORDER = 12


def show(coeffs):
    return " ".join(str(c) for c in coeffs)


for d in range(2, 6):
    H = hilbert_form(AlgebraSpec("grassmann", d)).expand(ORDER)
    table = multiplicity_table(H)
    # every cocharacter of the Grassmann algebra is a hook
    assert all(len(lam) < 2 or lam[1] <= 1 for (_, lam), _ in table.items())
    print(f"d = {d}")
    kinds = ["O", "SO", "SL", "UT"] + (["Sp"] if d % 2 == 0 else [])
    for kind in kinds:
        g = GroupSpec(kind, d)
        print(f"  {str(g):<6} {show(dual_check(table, g).coeffs)}")
