"""Noncanonical actions: the generators of ``F_m`` span a GL_d-module.

If the span of ``x_1..x_m`` is ``sum mult * V_d(lam)``, choose a weight basis;
substituting the weight monomials for ``t_1..t_m`` turns the m-variable
Hilbert series into the d-variable one for the induced action.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import VariableMismatch
from .polyring import GradedSeries, RationalForm, TPoly
from .symfunc import as_partition, is_symmetric, schur_poly

__all__ = ["ModuleSpec", "module_weights", "regrade_hilbert", "regrade_form"]


@dataclass(frozen=True)
class ModuleSpec:
    d: int
    summands: tuple

    def __post_init__(self):
        clean = []
        for lam, mult in self.summands:
            lam = as_partition(lam)
            if len(lam) > self.d:
                raise ValueError(f"V_{self.d}{lam} is zero: partition longer than d")
            if mult < 1:
                raise ValueError("summand multiplicities must be positive")
            clean.append((lam, int(mult)))
        object.__setattr__(self, "summands", tuple(clean))

    @property
    def dimension(self):
        return sum(mult * sum(schur_poly(lam, self.d)._terms.values()) for lam, mult in self.summands)

    def __str__(self):
        return " + ".join(
            (f"{mult}*" if mult > 1 else "") + f"V_{self.d}({','.join(map(str, lam))})"
            for lam, mult in self.summands
        )

    def to_dict(self):
        return {"d": self.d, "summands": [{"partition": list(lam), "mult": m} for lam, m in self.summands]}

    @classmethod
    def from_dict(cls, obj):
        return cls(
            int(obj["d"]),
            tuple((tuple(s["partition"]), int(s.get("mult", 1))) for s in obj["summands"]),
        )


def module_weights(spec: ModuleSpec) -> list:
    """Weight multiset of the module, repeated by multiplicity, in decreasing lex order."""
    total = TPoly.zero(spec.d)
    for lam, mult in spec.summands:
        total = total + schur_poly(lam, spec.d).scale(mult)
    weights = []
    for exp in sorted(total.exponents(), reverse=True):
        weights.extend([exp] * int(total.coeff(exp)))
    return weights


def _images(weights, d=None):
    lengths = {len(w) for w in weights}
    if len(lengths) > 1:
        raise VariableMismatch(f"weights of mixed lengths {sorted(lengths)}")
    target = lengths.pop() if lengths else d
    return [TPoly.monomial(target, w) for w in weights], target


def regrade_hilbert(H: GradedSeries, weights) -> GradedSeries:
    """Substitute ``t_i -> t^weights[i]``; ``H`` must be symmetric in its variables."""
    if len(weights) != H.nvars:
        raise VariableMismatch(f"{len(weights)} weights for a series in {H.nvars} variables")
    for n, c in enumerate(H.coeffs):
        if not is_symmetric(c):
            raise ValueError(f"coefficient of z^{n} is not symmetric in the generator variables")
    images, target = _images(weights)
    return H.substitute(images, target)


def regrade_form(f: RationalForm, weights) -> RationalForm:
    if len(weights) != f.nvars:
        raise VariableMismatch(f"{len(weights)} weights for a form in {f.nvars} variables")
    return f.substitute_monomials(weights)
