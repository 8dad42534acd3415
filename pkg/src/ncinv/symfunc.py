"""Partitions, Schur polynomials and Schur decomposition of symmetric polynomials.

Partitions are plain tuples of positive integers in weakly decreasing order;
``()`` is the zero partition.  Schur polynomials are built from semistandard
tableaux by peeling off the horizontal strip occupied by the largest entry,
so everything stays inside exact polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .errors import DecompositionError
from .polyring import TPoly, rational_from_json, rational_to_json

__all__ = [
    "as_partition",
    "is_partition",
    "partitions_of",
    "conjugate",
    "pad",
    "horizontal_strips",
    "kostka",
    "schur_poly",
    "is_symmetric",
    "SchurExpansion",
    "schur_decompose",
]


def is_partition(seq) -> bool:
    seq = tuple(seq)
    return all(isinstance(a, int) and a >= 0 for a in seq) and all(
        seq[i] >= seq[i + 1] for i in range(len(seq) - 1)
    )


def as_partition(seq) -> tuple:
    """Validate and normalise: drop trailing zeros, reject increases or negatives."""
    seq = tuple(int(a) for a in seq)
    if not is_partition(seq):
        raise ValueError(f"{seq} is not a partition")
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def pad(lam, d) -> tuple:
    """Zero-pad ``lam`` to length ``d``."""
    if len(lam) > d:
        raise ValueError(f"{lam} has more than {d} parts")
    return tuple(lam) + (0,) * (d - len(lam))


def partitions_of(n: int, max_parts: int) -> list:
    """All partitions of ``n`` with at most ``max_parts`` parts, decreasing lex order.

    >>> partitions_of(4, 2)
    [(4,), (3, 1), (2, 2)]
    """
    if n < 0 or max_parts < 0:
        raise ValueError("n and max_parts must be nonnegative")
    return list(_partitions(n, max_parts, n))


@lru_cache(maxsize=None)
def _partitions(n, k, cap):
    if n == 0:
        return ((),)
    if k == 0:
        return ()
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, k - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam) -> tuple:
    """Transpose of the Young diagram."""
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def horizontal_strips(lam, size=None, max_len=None):
    """Partitions ``mu`` such that ``lam / mu`` is a horizontal strip.

    Equivalently ``lam[i+1] <= mu[i] <= lam[i]``.  Optionally restrict the
    strip to ``size`` boxes and ``mu`` to at most ``max_len`` parts.
    """
    lam = tuple(lam)
    total = sum(lam)
    ranges = []
    for i, part in enumerate(lam):
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        ranges.append(range(lower, part + 1))
    for mu in product(*ranges):
        if size is not None and total - sum(mu) != size:
            continue
        mu = as_partition(mu)
        if max_len is not None and len(mu) > max_len:
            continue
        yield mu


@lru_cache(maxsize=None)
def kostka(lam: tuple, content: tuple) -> int:
    """Number of SSYT of shape ``lam`` whose entry ``i`` appears ``content[i-1]`` times."""
    lam = as_partition(lam)
    if sum(lam) != sum(content):
        return 0
    if not content:
        return 1 if not lam else 0
    k = len(content)
    if len(lam) > k:
        return 0
    *head, last = content
    return sum(
        kostka(mu, tuple(head)) for mu in horizontal_strips(lam, size=last, max_len=k - 1)
    )


def schur_poly(lam, d: int) -> TPoly:
    """Schur polynomial ``s_lam(t_1, ..., t_d)`` as a sum over SSYT contents.

    A partition with more than ``d`` parts gives the zero polynomial, matching
    ``V_d(lam) = 0``.
    """
    return _schur(as_partition(lam), d)


@lru_cache(maxsize=None)
def _schur(lam, d):
    if len(lam) > d:
        return TPoly.zero(d)
    if d == 0:
        return TPoly.constant(0, 1)
    out = {}
    size = sum(lam)
    for mu in horizontal_strips(lam, max_len=d - 1):
        strip = size - sum(mu)
        for exp, c in _schur(mu, d - 1)._terms.items():
            key = exp + (strip,)
            out[key] = out.get(key, 0) + c
    return TPoly(d, out)


def is_symmetric(p: TPoly) -> bool:
    """True iff ``p`` is unchanged by every adjacent transposition of variables."""
    terms = p._terms
    for exp, c in terms.items():
        for i in range(p.nvars - 1):
            if exp[i] != exp[i + 1]:
                swapped = exp[:i] + (exp[i + 1], exp[i]) + exp[i + 2:]
                if terms.get(swapped, 0) != c:
                    return False
    return True


@dataclass(frozen=True)
class SchurExpansion:
    degree: int
    nvars: int
    multiplicities: dict = field(default_factory=dict)

    def __post_init__(self):
        for lam in self.multiplicities:
            if sum(lam) != self.degree or len(lam) > self.nvars:
                raise ValueError(f"{lam} does not index a degree-{self.degree} module of GL_{self.nvars}")

    def items(self):
        return sorted(self.multiplicities.items(), reverse=True)

    def to_poly(self) -> TPoly:
        total = TPoly.zero(self.nvars)
        for lam, c in self.multiplicities.items():
            total = total + schur_poly(lam, self.nvars).scale(c)
        return total

    def to_dict(self):
        return {
            "degree": self.degree,
            "nvars": self.nvars,
            "terms": [{"partition": list(lam), "mult": rational_to_json(c)} for lam, c in self.items()],
        }

    @classmethod
    def from_dict(cls, obj):
        return cls(
            int(obj["degree"]),
            int(obj["nvars"]),
            {as_partition(t["partition"]): rational_from_json(t["mult"]) for t in obj["terms"]},
        )


@lru_cache(maxsize=None)
def _dominant_row(mu, d):
    # coefficients of s_mu on the partition-shaped exponents, i.e. Kostka numbers K_{mu,nu}
    n = sum(mu)
    row = {}
    for nu in partitions_of(n, d):
        if nu > mu:
            continue
        k = kostka(mu, nu)
        if k:
            row[pad(nu, d)] = k
    return row


def schur_decompose(p: TPoly) -> SchurExpansion:
    """Write a homogeneous symmetric ``p`` as ``sum c_lam s_lam``.

    Greedy leading-term elimination: the graded-lex leading exponent of a
    symmetric polynomial is a partition ``mu``; record its coefficient and
    subtract that multiple of ``s_mu``.  Because a symmetric polynomial is
    determined by its coefficients on weakly decreasing exponents, the
    elimination is carried out on those coefficients only, with ``s_mu``
    contributing its Kostka numbers.  Multiplicities may come out negative or
    fractional; callers wanting a genuine module check that themselves.
    """
    d = p.nvars
    if not p:
        return SchurExpansion(0, d, {})
    if not p.is_homogeneous():
        raise DecompositionError("polynomial is not homogeneous")
    if not is_symmetric(p):
        raise DecompositionError("polynomial is not symmetric")
    degree = p.degree()
    lead, _ = p.leading_term()
    if not is_partition(lead):
        raise DecompositionError(f"leading exponent {lead} is not a partition")
    residual = {e: c for e, c in p._terms.items() if is_partition(e)}
    mults = {}
    while residual:
        mu = max(residual)
        c = residual[mu]
        lam = as_partition(mu)
        mults[lam] = c
        for nu, k in _dominant_row(lam, d).items():
            s = residual.get(nu, 0) - c * k
            if s:
                residual[nu] = s
            else:
                residual.pop(nu, None)
        if residual.get(mu):
            raise DecompositionError(f"elimination stalled at {mu}")
    return SchurExpansion(degree, d, mults)
