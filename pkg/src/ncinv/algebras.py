"""Relatively free algebras of the Grassmann variety and of 2x2 upper triangular matrices.

For each family there are two unrelated descriptions: a closed-form
Hilbert series in the generator variables, and the cocharacter
multiplicities.  They must describe the same GL-module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .multiplicity import MultTable
from .polyring import Factor, FormTerm, GradedSeries, RationalForm, TPoly
from .symfunc import partitions_of

__all__ = [
    "FAMILIES",
    "AlgebraSpec",
    "hilbert_form",
    "grassmann_cocharacter_table",
    "triangular_cocharacter_table",
    "cocharacter_table",
]

FAMILIES = ("grassmann", "ut2")
_ALIASES = {
    "grassmann": "grassmann",
    "g": "grassmann",
    "exterior": "grassmann",
    "ut2": "ut2",
    "t": "ut2",
    "uppertriangular2": "ut2",
}


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    m: int

    def __post_init__(self):
        family = _ALIASES.get(self.family.lower())
        if family is None:
            raise ValueError(f"unknown algebra family {self.family!r}")
        object.__setattr__(self, "family", family)
        if self.m < 1:
            raise ValueError("need at least one generator")

    def to_dict(self):
        return {"family": self.family, "m": self.m}

    @classmethod
    def from_dict(cls, obj):
        return cls(str(obj["family"]), int(obj["m"]))


def _linear_factors(m, mult):
    return tuple(Factor(tuple(int(i == j) for j in range(m)), 1, mult) for i in range(m))


def hilbert_form(a: AlgebraSpec) -> RationalForm:
    """Hilbert series of ``F_m`` in ``t_1..t_m`` and ``z`` as a :class:`RationalForm`."""
    m = a.m
    one = GradedSeries.one(m, 0)
    if a.family == "grassmann":
        # 1/2 + 1/2 * prod (1 + t_i z) / (1 - t_i z)
        numerator = GradedSeries.one(m, m)
        for i in range(m):
            numerator = numerator * GradedSeries(m, m, [TPoly.constant(m, 1), TPoly.variable(m, i)])
        return RationalForm(
            m,
            [
                FormTerm(Fraction(1, 2), one),
                FormTerm(Fraction(1, 2), numerator, _linear_factors(m, 1)),
            ],
        )
    # 2 prod 1/(1 - t_i z) + ((t_1 + ... + t_m) z - 1) prod 1/(1 - t_i z)^2
    linear = sum((TPoly.variable(m, i) for i in range(m)), TPoly.zero(m))
    numerator = GradedSeries(m, 1, [TPoly.constant(m, -1), linear])
    return RationalForm(
        m,
        [
            FormTerm(2, one, _linear_factors(m, 1)),
            FormTerm(1, numerator, _linear_factors(m, 2)),
        ],
    )


def grassmann_cocharacter_table(d: int, order: int) -> MultTable:
    """Hooks ``(i, 1^{n-i})`` with at most ``d`` rows, each with multiplicity one."""
    entries = {(0, ()): 1}
    for n in range(1, order + 1):
        for i in range(1, n + 1):
            if n - i + 1 <= d:
                entries[(n, (i,) + (1,) * (n - i))] = 1
    return MultTable(d, order, entries)


def _triangular_multiplicity(lam):
    if len(lam) == 1:
        return 1
    if len(lam) == 2:
        return lam[0] - lam[1] + 1
    if len(lam) == 3 and lam[2] == 1:
        return lam[0] - lam[1] + 1
    return 0


def triangular_cocharacter_table(d: int, order: int) -> MultTable:
    """Mishchenko-Regev-Zaicev multiplicities, dropping partitions with more than ``d`` rows."""
    entries = {(0, ()): 1}
    for n in range(1, order + 1):
        for lam in partitions_of(n, min(d, 3)):
            m = _triangular_multiplicity(lam)
            if m:
                entries[(n, lam)] = m
    return MultTable(d, order, entries)


def cocharacter_table(a: AlgebraSpec, order: int) -> MultTable:
    if a.family == "grassmann":
        return grassmann_cocharacter_table(a.m, order)
    return triangular_cocharacter_table(a.m, order)
