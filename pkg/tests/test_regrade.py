import pytest
from hypothesis import given, settings, strategies as st

from ncinv.algebras import AlgebraSpec, hilbert_form
from ncinv.errors import VariableMismatch
from ncinv.polyring import TPoly
from ncinv.regrade import ModuleSpec, module_weights, regrade_form, regrade_hilbert
from ncinv.symfunc import is_symmetric, schur_poly


def V(d, *summands):
    return ModuleSpec(d, tuple(summands))


def test_weights():
    assert module_weights(V(2, ((2,), 1))) == [(2, 0), (1, 1), (0, 2)]
    assert module_weights(V(2, ((1,), 2))) == [(1, 0), (1, 0), (0, 1), (0, 1)]
    assert module_weights(V(3, ((1, 1), 1))) == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]


def test_weight_count_is_dimension():
    for spec in (V(2, ((2,), 1)), V(3, ((2,), 1), ((1,), 2)), V(3, ((2, 1), 1)), V(4, ((1, 1), 1))):
        assert len(module_weights(spec)) == spec.dimension


def test_module_spec_text_and_json():
    assert str(V(2, ((2,), 1))) == "V_2(2)"
    assert str(V(2, ((1,), 2))) == "2*V_2(1)"
    spec = V(3, ((1, 1), 1))
    assert ModuleSpec.from_dict(spec.to_dict()) == spec
    with pytest.raises(ValueError):
        V(2, ((1, 1, 1), 1))


def test_degree_two_coefficient_of_regraded_grassmann():
    # degree 2 of F_3 is Sym^2 of the span plus one commutator per pair; with
    # weights a=t1^2, b=t1 t2, c=t2^2 that is h_2(a,b,c) + (ab + ac + bc)
    t1, t2 = TPoly.variable(2, 0), TPoly.variable(2, 1)
    a, b, c = t1**2, t1 * t2, t2**2
    sym2 = a * a + b * b + c * c + a * b + a * c + b * c
    by_hand = sym2 + a * b + a * c + b * c
    expected = t1**4 + 2 * t1**3 * t2 + 3 * t1**2 * t2**2 + 2 * t1 * t2**3 + t2**4
    H = regrade_hilbert(hilbert_form(AlgebraSpec("grassmann", 3)).expand(2), module_weights(V(2, ((2,), 1))))
    assert H[2] == by_hand == expected
    assert expected == schur_poly((4,), 2) + schur_poly((3, 1), 2) + schur_poly((2, 2), 2)


def test_identity_regrade():
    H = hilbert_form(AlgebraSpec("ut2", 3)).expand(6)
    assert regrade_hilbert(H, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == H


def test_collapse_to_one_variable():
    H = hilbert_form(AlgebraSpec("grassmann", 3)).expand(6)
    t = TPoly.variable(1, 0)
    collapsed = regrade_hilbert(H, [(1,)] * 3)
    assert collapsed == H.substitute([t, t, t], 1)


@pytest.mark.parametrize("family", ["grassmann", "ut2"])
@pytest.mark.parametrize("spec", [V(2, ((2,), 1)), V(2, ((1,), 2)), V(3, ((1, 1), 1)), V(2, ((1,), 1), ((0,), 1))])
def test_regrade_commutes_with_expansion(family, spec):
    m = spec.dimension
    f = hilbert_form(AlgebraSpec(family, m))
    w = module_weights(spec)
    H = regrade_form(f, w).expand(7)
    assert H == regrade_hilbert(f.expand(7), w)
    assert all(is_symmetric(c) for c in H.coeffs)


@settings(max_examples=20, deadline=None)
@given(st.permutations(range(4)))
def test_weight_order_does_not_matter(perm):
    H = hilbert_form(AlgebraSpec("ut2", 4)).expand(6)
    w = module_weights(V(2, ((1,), 2)))
    assert regrade_hilbert(H, [w[i] for i in perm]) == regrade_hilbert(H, w)


def test_weight_count_checked():
    H = hilbert_form(AlgebraSpec("grassmann", 3)).expand(3)
    with pytest.raises(VariableMismatch):
        regrade_hilbert(H, [(1, 0), (0, 1)])
    with pytest.raises(VariableMismatch):
        regrade_form(hilbert_form(AlgebraSpec("grassmann", 3)), [(1, 0)])
    with pytest.raises(VariableMismatch):
        regrade_hilbert(H, [(1, 0), (0, 1), (1,)])


def test_non_symmetric_source_rejected():
    from ncinv.formparse import parse_form

    H = parse_form("1/(1-t1 z)", 2).expand(3)
    with pytest.raises(ValueError):
        regrade_hilbert(H, [(1,), (1,)])
