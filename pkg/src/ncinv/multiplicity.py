"""Multiplicity series of graded polynomial GL_d-modules.

A :class:`MultTable` lists how often each irreducible ``V_d(lam)`` occurs in
each z-degree.  It is recovered from a Hilbert series by Schur
decomposition and re-encoded as the series ``M`` (monomial ``t^lam``) or
``M'`` (monomial ``u_1^{lam_1-lam_2} ... u_d^{lam_d}``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import DecompositionError
from .polyring import GradedSeries, TPoly
from .symfunc import as_partition, is_symmetric, pad, schur_decompose

__all__ = [
    "MultTable",
    "multiplicity_table",
    "table_to_M",
    "table_to_Mprime",
    "u_exponent",
    "u_to_t_images",
]


class MultTable:
    """Finite map ``(n, lam) -> m`` with positive integer values, ``n <= order``."""

    __slots__ = ("nvars", "order", "_entries")

    def __init__(self, nvars: int, order: int, entries: Mapping[tuple, int] | None = None):
        if nvars < 1:
            raise ValueError("a multiplicity table needs at least one variable")
        if order < 0:
            raise ValueError("order must be nonnegative")
        clean = {}
        for (n, lam), m in (entries or {}).items():
            lam = as_partition(lam)
            if not 0 <= n <= order:
                raise ValueError(f"degree {n} outside 0..{order}")
            if len(lam) > nvars:
                raise ValueError(f"{lam} has more than {nvars} parts")
            if isinstance(m, Fraction):
                if m.denominator != 1:
                    raise ValueError(f"multiplicity {m} of {lam} in degree {n} is not an integer")
                m = m.numerator
            if not isinstance(m, int) or m < 0:
                raise ValueError(f"multiplicity {m!r} of {lam} in degree {n} is not a nonnegative integer")
            if m:
                clean[(n, lam)] = clean.get((n, lam), 0) + m
        self.nvars = nvars
        self.order = order
        self._entries = clean

    def items(self):
        """Entries sorted by degree, then partitions in decreasing lex order."""
        return sorted(self._entries.items(), key=lambda kv: (kv[0][0], tuple(-a for a in pad(kv[0][1], self.nvars))))

    def __getitem__(self, key):
        n, lam = key
        return self._entries.get((n, as_partition(lam)), 0)

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self.items())

    def __eq__(self, other):
        if not isinstance(other, MultTable):
            return NotImplemented
        return (self.nvars, self.order, self._entries) == (other.nvars, other.order, other._entries)

    def __repr__(self):
        return f"MultTable(nvars={self.nvars}, order={self.order}, entries={dict(self.items())})"

    def degree(self, n):
        """``{lam: m}`` for z-degree ``n``."""
        return {lam: m for (k, lam), m in self.items() if k == n}

    def truncate(self, order):
        return MultTable(self.nvars, order, {k: m for k, m in self._entries.items() if k[0] <= order})

    def to_dict(self):
        return {
            "nvars": self.nvars,
            "order": self.order,
            "entries": [{"n": n, "partition": list(lam), "mult": m} for (n, lam), m in self.items()],
        }

    @classmethod
    def from_dict(cls, obj):
        return cls(
            int(obj["nvars"]),
            int(obj["order"]),
            {(int(e["n"]), tuple(e["partition"])): int(e["mult"]) for e in obj["entries"]},
        )


def multiplicity_table(H: GradedSeries) -> MultTable:
    """Decompose every z-coefficient of ``H`` into Schur polynomials.

    Each coefficient is split into t-homogeneous layers first, so regraded
    series (where one z-degree may carry several t-degrees) work too.
    Raises :class:`DecompositionError` if a coefficient is not symmetric or a
    multiplicity is not a nonnegative integer.
    """
    entries = {}
    for n, coeff in enumerate(H.coeffs):
        if not is_symmetric(coeff):
            raise DecompositionError(f"coefficient of z^{n} is not symmetric")
        for layer in coeff.homogeneous_parts().values():
            for lam, m in schur_decompose(layer).multiplicities.items():
                if m < 0 or Fraction(m).denominator != 1:
                    raise DecompositionError(
                        f"multiplicity {m} of V({lam}) in degree {n}: not a polynomial GL-module"
                    )
                if m:
                    entries[(n, lam)] = int(m)
    return MultTable(H.nvars, H.order, entries)


def u_exponent(lam, d) -> tuple:
    """``(lam_1-lam_2, ..., lam_{d-1}-lam_d, lam_d)`` for ``lam`` zero-padded to length ``d``."""
    p = pad(lam, d)
    return tuple(p[i] - p[i + 1] for i in range(d - 1)) + (p[-1],)


def table_to_M(tab: MultTable) -> GradedSeries:
    return GradedSeries.from_terms(
        tab.nvars, tab.order, {(n, pad(lam, tab.nvars)): m for (n, lam), m in tab.items()}
    )


def table_to_Mprime(tab: MultTable) -> GradedSeries:
    return GradedSeries.from_terms(
        tab.nvars, tab.order, {(n, u_exponent(lam, tab.nvars)): m for (n, lam), m in tab.items()}
    )


def u_to_t_images(d):
    """Images ``u_i -> t_1 ... t_i`` turning ``M'`` back into ``M``."""
    return [TPoly.monomial(d, (1,) * i + (0,) * (d - i)) for i in range(1, d + 1)]
