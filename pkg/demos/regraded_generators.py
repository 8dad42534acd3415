"""Three Grassmann generators spanning the symmetric square of C^2.

GL_2 acts on x_1, x_2, x_3 as on V_2(2), so t_1, t_2, t_3 become the weights
t1^2, t1 t2, t2^2.  The resulting invariants are compared with closed forms.
"""

from ncinv import (
    AlgebraSpec,
    GroupSpec,
    ModuleSpec,
    dual_check,
    hilbert_form,
    module_weights,
    multiplicity_table,
    parse_form,
    regrade_form,
    table_to_Mprime,
)

ORDER = 14

module = ModuleSpec(2, (((2,), 1),))
weights = module_weights(module)
print(f"{module}: weights {weights}")

form = regrade_form(hilbert_form(AlgebraSpec("grassmann", 3)), weights)
table = multiplicity_table(form.expand(ORDER))
print("M' =", table_to_Mprime(table).truncate(5).to_str("u"))

closed = {"Sp": "1 + z^2/(1-z)", "O": "1/(1-z) + z^2/(1-z)^2", "SO": "1/(1-z) + 2z^2/(1-z)^2"}
for kind, text in closed.items():
    got = dual_check(table, GroupSpec(kind, 2))
    want = tuple(int(c) for c in parse_form(text, 0).expand(ORDER).scalars())
    print(f"{kind}_2: {got.coeffs}  matches {text}: {got.coeffs == want}")
