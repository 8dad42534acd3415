"""Hilbert series of invariants of Sp_d, O_d, SO_d, SL_d and UT_d.

Two independent routes are provided.  :func:`filter_invariants` sums the
multiplicities of exactly those ``V_d(lam)`` that carry a (one-dimensional)
invariant; :func:`substitute_invariants` specialises the multiplicity series
``M`` or ``M'`` at signs, zeros and ones.  :func:`dual_check` insists that they
agree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DualCheckError
from .multiplicity import MultTable, table_to_M, table_to_Mprime
from .polyring import GradedSeries, TPoly
from .symfunc import conjugate, pad

__all__ = [
    "GROUP_KINDS",
    "GroupSpec",
    "InvariantSeries",
    "has_invariant",
    "filter_invariants",
    "substitute_invariants",
    "average_first_variable",
    "dual_check",
]

GROUP_KINDS = ("Sp", "O", "SO", "SL", "UT")


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    d: int

    def __post_init__(self):
        if self.kind not in GROUP_KINDS:
            raise ValueError(f"unknown group {self.kind!r}; expected one of {GROUP_KINDS}")
        if self.d < 1:
            raise ValueError("group dimension must be positive")
        if self.kind == "Sp" and self.d % 2:
            raise ValueError(f"Sp_d needs even d, got d={self.d}")

    @classmethod
    def parse(cls, text):
        """Accept ``"Sp4"``, ``"SO_3"`` or ``"O(2)"``."""
        m = re.fullmatch(r"\s*(Sp|SO|SL|UT|O)\s*[_(]?\s*(\d+)\s*\)?\s*", text)
        if not m:
            raise ValueError(f"cannot parse group {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.kind}_{self.d}"

    def to_dict(self):
        return {"kind": self.kind, "d": self.d}

    @classmethod
    def from_dict(cls, obj):
        if isinstance(obj, str):
            return cls.parse(obj)
        return cls(str(obj["kind"]), int(obj["d"]))


@dataclass(frozen=True)
class InvariantSeries:
    group: GroupSpec
    order: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order+1 coefficients")
        for c in self.coeffs:
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"invariant dimensions must be nonnegative integers, got {c!r}")

    def as_series(self) -> GradedSeries:
        return GradedSeries.from_scalars(self.coeffs)

    def to_dict(self):
        return {"group": self.group.to_dict(), "order": self.order, "coeffs": list(self.coeffs)}

    @classmethod
    def from_dict(cls, obj):
        return cls(GroupSpec.from_dict(obj["group"]), int(obj["order"]), tuple(obj["coeffs"]))


def has_invariant(lam, g: GroupSpec) -> bool:
    """Whether ``V_d(lam)`` has a nonzero ``g``-invariant (always one-dimensional)."""
    lam = tuple(lam)
    if len(lam) > g.d:
        return False
    if g.kind == "Sp":
        return all(c % 2 == 0 for c in conjugate(lam))
    if g.kind == "O":
        return all(a % 2 == 0 for a in lam)
    if g.kind == "SO":
        if all(a % 2 == 0 for a in lam):
            return True
        return len(lam) == g.d and all(a % 2 == 1 for a in lam)
    if g.kind == "SL":
        return len(set(pad(lam, g.d))) == 1
    return True


def _check_group(tab, g):
    if tab.nvars != g.d:
        raise ValueError(f"table has {tab.nvars} variables but {g} acts on {g.d}")


def filter_invariants(tab: MultTable, g: GroupSpec) -> InvariantSeries:
    _check_group(tab, g)
    coeffs = [0] * (tab.order + 1)
    for (n, lam), m in tab.items():
        if has_invariant(lam, g):
            coeffs[n] += m
    return InvariantSeries(g, tab.order, tuple(coeffs))


def average_first_variable(s: GradedSeries) -> GradedSeries:
    """``(s(-1, x_2, ..., x_k) + s(1, x_2, ..., x_k)) / 2`` in ``k - 1`` variables."""
    k = s.nvars
    rest = [TPoly.variable(k - 1, j) for j in range(k - 1)]
    minus = s.substitute([-1] + rest, k - 1)
    plus = s.substitute([1] + rest, k - 1)
    return (minus + plus).scale(Fraction(1, 2))


def _to_dimensions(series: GradedSeries, g: GroupSpec):
    out = []
    for n, c in enumerate(series.scalars()):
        c = Fraction(c)
        if c.denominator != 1 or c < 0:
            raise RuntimeError(f"{g}: substitution produced {c} at z^{n}")
        out.append(int(c))
    return tuple(out)


def substitute_invariants(tab: MultTable, g: GroupSpec) -> InvariantSeries:
    _check_group(tab, g)
    d = g.d
    if g.kind == "Sp":
        series = table_to_Mprime(tab).substitute([0 if i % 2 == 0 else 1 for i in range(d)])
    elif g.kind == "O":
        series = table_to_M(tab)
        for _ in range(d):
            series = average_first_variable(series)
    elif g.kind == "SO":
        series = table_to_Mprime(tab)
        for _ in range(d - 1):
            series = average_first_variable(series)
        series = series.substitute([1])
    elif g.kind == "SL":
        series = table_to_Mprime(tab).substitute([0] * (d - 1) + [1])
    else:
        series = table_to_M(tab).substitute([1] * d)
    return InvariantSeries(g, tab.order, _to_dimensions(series, g))


def dual_check(tab: MultTable, g: GroupSpec) -> InvariantSeries:
    """Run both routes and return their common value; raise on any disagreement."""
    filtered = filter_invariants(tab, g)
    substituted = substitute_invariants(tab, g)
    for n, (a, b) in enumerate(zip(filtered.coeffs, substituted.coeffs)):
        if a != b:
            raise DualCheckError(g, n, a, b)
    return filtered
