import pytest

from ncinv.algebras import AlgebraSpec, hilbert_form
from ncinv.errors import FormSyntaxError
from ncinv.formparse import parse_form


def scalars(text, order):
    return [int(c) for c in parse_form(text, 0).expand(order).scalars()]


def test_scalar_forms():
    assert scalars("1/(1-z^2)", 6) == [1, 0, 1, 0, 1, 0, 1]
    assert scalars("(1+z^3)/(1-z^2)", 6) == [1, 0, 1, 1, 1, 1, 1]
    assert scalars("(1-2z^2+2z^4)/(1-z^2)^3", 6) == [1, 0, 1, 0, 2, 0, 4]


def test_spellings_agree():
    base = parse_form("(1-z-z^2+2z^3)/((1-z)(1-z^2)^2)", 0).expand(10)
    for text in (
        "(1 - z - z**2 + 2*z**3) / ((1 - z) * (1 - z**2)**2)",
        "(1−z−z²+2z³)/((1−z)(1−z²)²)",
        "(1-z-z^2+2z^3)/(1-z)/(1-z^2)/(1-z^2)",
    ):
        assert parse_form(text, 0).expand(10) == base


def test_t_variables_and_halves():
    got = parse_form("1/2 + (1+t1 z)(1+t2 z)/(2(1-t1 z)(1-t2 z))")
    assert got.nvars == 2
    assert got.expand(8) == hilbert_form(AlgebraSpec("grassmann", 2)).expand(8)
    assert parse_form("1/(1-t_1 t_2 z^2)").expand(4) == parse_form("1/(1-t1t2z^2)", 2).expand(4)


def test_u_variables():
    f = parse_form("1/(1-u1^2z) + u2(u1^2+u2)z^2/((1-u1^2z)(1-u2z))", 2)
    assert f.expand(3)[2].to_str("u") == parse_form("u1^4+u1^2u2+u2^2", 2).expand(0)[0].to_str("u")


def test_explicit_nvars_pads():
    assert parse_form("1/(1-t1 z)", 3).nvars == 3


@pytest.mark.parametrize(
    "text, pos",
    [
        ("1/(1+z)", 2),
        ("1/(2-z)", 2),
        ("1/(1-t1)", 2),
        ("1/(1-z)(1-z^2", 13),
        ("1 + $", 4),
        ("z^x", 2),
        ("1/0", 2),
        ("1/(z + z^2)", 2),
        ("* z", 0),
    ],
)
def test_errors_point_at_offender(text, pos):
    with pytest.raises(FormSyntaxError) as err:
        parse_form(text, 1)
    assert err.value.pos == pos
    assert "^" in str(err.value)


def test_variable_out_of_range():
    with pytest.raises(FormSyntaxError):
        parse_form("1/(1-t3 z)", 2)
