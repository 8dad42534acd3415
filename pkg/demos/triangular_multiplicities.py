"""Cocharacters of the 2x2 upper triangular matrices, two ways.

The multiplicities can be written down combinatorially or recovered from the
Hilbert series by Schur decomposition; this script prints both for two
generators and checks they agree for a few d.
"""

from ncinv import (
    AlgebraSpec,
    hilbert_form,
    multiplicity_table,
    table_to_M,
    table_to_Mprime,
    triangular_cocharacter_table,
)

table = multiplicity_table(hilbert_form(AlgebraSpec("ut2", 2)).expand(6))
print("degree  partition  multiplicity")
for (n, lam), m in table.items():
    print(f"{n:>6}  {str(lam):<10} {m}")

print("M  =", table_to_M(table).to_str("t"))
print("M' =", table_to_Mprime(table).to_str("u"))

for d in (1, 2, 3, 4):
    same = multiplicity_table(hilbert_form(AlgebraSpec("ut2", d)).expand(9)) == triangular_cocharacter_table(d, 9)
    print(f"d = {d}: series decomposition equals the cocharacter formula: {same}")
