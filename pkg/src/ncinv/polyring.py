"""Exact multivariate polynomials and z-truncated graded series.

Coefficients are Python ``int`` or :class:`fractions.Fraction`; nothing here
ever touches floating point.  A :class:`TPoly` is a polynomial in
``t_1..t_d`` keyed by exponent tuples, a :class:`GradedSeries` is a power
series in ``z`` with :class:`TPoly` coefficients truncated at a fixed order,
and a :class:`RationalForm` is a finite sum of terms of the shape

    scalar * numerator(t, z) / prod (1 - t^a z^k)^e

which always has a terminating expansion to any order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import VariableMismatch

__all__ = [
    "TPoly",
    "GradedSeries",
    "Factor",
    "FormTerm",
    "RationalForm",
    "poly_add",
    "poly_mul",
    "series_mul",
    "substitute_vars",
    "expand_rational_form",
    "series_equal",
    "rational_to_json",
    "rational_from_json",
]


def _exact(c):
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficients must be int or Fraction, got {c!r}")
    return c


def rational_to_json(c) -> dict:
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def rational_from_json(obj):
    if isinstance(obj, int) and not isinstance(obj, bool):
        return obj
    if isinstance(obj, str):
        value = Fraction(obj)
    else:
        value = Fraction(int(obj["num"]), int(obj["den"]))
    return value.numerator if value.denominator == 1 else value


def _grlex_key(exp):
    return (sum(exp), exp)


def _format_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class TPoly:
    """Polynomial in ``nvars`` variables with exact rational coefficients.

    Immutable.  The zero polynomial has no terms but remembers ``nvars``.
    ``nvars == 0`` is allowed and holds a bare scalar under the key ``()``.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(a) for a in exp)
            if len(exp) != nvars or any(a < 0 for a in exp):
                raise ValueError(f"bad exponent {exp} for {nvars} variables")
            _exact(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: keys valid, no zero values
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars, c=1):
        _exact(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, nvars, exp, c=1):
        return cls(nvars, {tuple(exp): c})

    @classmethod
    def variable(cls, nvars, i):
        """The variable ``t_{i+1}`` (0-based index)."""
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): 1})

    # -- inspection -------------------------------------------------------

    def items(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def coeff(self, exp):
        return self._terms.get(tuple(exp), 0)

    def exponents(self):
        return self._terms.keys()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self.items())

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.nvars, 0)

    def is_monomial(self):
        return len(self._terms) == 1

    def leading_term(self):
        """``(exponent, coefficient)`` of the graded-lex largest monomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._terms, key=_grlex_key)
        return exp, self._terms[exp]

    def degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def homogeneous_parts(self):
        """Split into t-homogeneous layers: ``{total degree: TPoly}``."""
        layers = {}
        for exp, c in self._terms.items():
            layers.setdefault(sum(exp), {})[exp] = c
        return {k: TPoly._raw(self.nvars, v) for k, v in sorted(layers.items())}

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise VariableMismatch(f"{self.nvars} vs {other.nvars} variables")

    def _coerce(self, other):
        if isinstance(other, TPoly):
            self._check(other)
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return TPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return TPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        _exact(c)
        if not c:
            return TPoly.zero(self.nvars)
        return TPoly._raw(self.nvars, {e: c * v for e, v in self._terms.items()})

    def shift(self, exp, c=1):
        """Multiply by the single term ``c * t^exp``."""
        if len(exp) != self.nvars:
            raise VariableMismatch(f"exponent of length {len(exp)} for {self.nvars} variables")
        if not c:
            return TPoly.zero(self.nvars)
        if c == 1:
            return TPoly._raw(
                self.nvars,
                {tuple(a + b for a, b in zip(e, exp)): v for e, v in self._terms.items()},
            )
        return TPoly._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exp)): c * v for e, v in self._terms.items()},
        )

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return TPoly._raw(self.nvars, out)

    def __rmul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = TPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self._terms == ({(0,) * self.nvars: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- substitution -----------------------------------------------------

    def permute(self, perm):
        """Relabel variables: exponent position ``i`` moves to ``perm[i]``."""
        out = {}
        for exp, c in self._terms.items():
            new = [0] * self.nvars
            for i, a in enumerate(exp):
                new[perm[i]] = a
            out[tuple(new)] = c
        return TPoly._raw(self.nvars, out)

    def substitute(self, images: Sequence, nvars: int | None = None) -> "TPoly":
        """Replace ``t_i`` by ``images[i]`` (a scalar or a :class:`TPoly`).

        All polynomial images must share one variable count, which becomes the
        result's ``nvars``; with only scalar images the result has ``nvars``
        (default 0) variables.
        """
        if len(images) != self.nvars:
            raise VariableMismatch(f"{len(images)} images for {self.nvars} variables")
        target = _target_nvars(images, nvars)
        split = []
        monomial_only = True
        for im in images:
            if isinstance(im, TPoly):
                terms = im._terms
            else:
                _exact(im)
                terms = {(0,) * target: im} if im else {}
            if len(terms) > 1:
                monomial_only = False
            split.append(terms)
        if monomial_only:
            return self._substitute_monomials(split, target)
        powers = {}
        result = TPoly.zero(target)
        for exp, c in self._terms.items():
            term = TPoly.constant(target, c)
            for i, a in enumerate(exp):
                if a:
                    key = (i, a)
                    if key not in powers:
                        powers[key] = TPoly._raw(target, dict(split[i])) ** a
                    term = term * powers[key]
            result = result + term
        return result

    def _substitute_monomials(self, split, target):
        images = [next(iter(t.items())) if t else None for t in split]
        out = {}
        for exp, c in self._terms.items():
            coef = c
            new = [0] * target
            for i, a in enumerate(exp):
                if not a:
                    continue
                im = images[i]
                if im is None:
                    coef = 0
                    break
                iexp, ic = im
                if ic != 1:
                    coef = coef * ic**a
                for j, b in enumerate(iexp):
                    new[j] += a * b
            if coef:
                key = tuple(new)
                s = out.get(key, 0) + coef
                if s:
                    out[key] = s
                else:
                    del out[key]
        return TPoly._raw(target, out)

    def evaluate(self, values: Sequence):
        return self.substitute(list(values)).constant_value()

    # -- presentation -----------------------------------------------------

    def to_str(self, var="t"):
        if not self._terms:
            return "0"
        pieces = []
        for exp, c in self.items():
            mono = "*".join(
                f"{var}{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(exp) if a
            )
            mag = abs(Fraction(c))
            sign = "-" if c < 0 else "+"
            if not mono:
                body = _format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_format_rational(mag)}*{mono}"
            pieces.append((sign, body))
        head_sign, head = pieces[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"TPoly({self.nvars}, {self.to_str()})"

    def to_dict(self):
        return {
            "nvars": self.nvars,
            "terms": [{"exp": list(e), "coef": rational_to_json(c)} for e, c in self.items()],
        }

    @classmethod
    def from_dict(cls, obj):
        return cls(
            int(obj["nvars"]),
            {tuple(t["exp"]): rational_from_json(t["coef"]) for t in obj["terms"]},
        )


def _target_nvars(images, nvars):
    counts = {im.nvars for im in images if isinstance(im, TPoly)}
    if len(counts) > 1:
        raise VariableMismatch(f"images live in rings with {sorted(counts)} variables")
    if counts:
        (count,) = counts
        if nvars is not None and nvars != count:
            raise VariableMismatch(f"images have {count} variables, requested {nvars}")
        return count
    return 0 if nvars is None else nvars


def poly_add(a: TPoly, b: TPoly) -> TPoly:
    if not isinstance(b, TPoly) or a.nvars != b.nvars:
        raise VariableMismatch("poly_add needs two TPoly in the same ring")
    return a + b


def poly_mul(a: TPoly, b: TPoly) -> TPoly:
    if not isinstance(b, TPoly) or a.nvars != b.nvars:
        raise VariableMismatch("poly_mul needs two TPoly in the same ring")
    return a * b


class GradedSeries:
    """Power series ``sum_n coeffs[n] z^n`` known exactly up to ``z^order``."""

    __slots__ = ("nvars", "order", "coeffs")

    def __init__(self, nvars: int, order: int, coeffs: Iterable[TPoly] = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs)[: order + 1]
        for c in cs:
            if c.nvars != nvars:
                raise VariableMismatch(f"coefficient in {c.nvars} variables, series in {nvars}")
        cs.extend(TPoly.zero(nvars) for _ in range(order + 1 - len(cs)))
        self.nvars = nvars
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, nvars, order):
        return cls(nvars, order)

    @classmethod
    def one(cls, nvars, order):
        return cls(nvars, order, [TPoly.constant(nvars, 1)])

    @classmethod
    def from_terms(cls, nvars, order, terms: Mapping[tuple, object]):
        """Build from ``{(n, exponent): coefficient}``; degrees above ``order`` drop."""
        layers = [dict() for _ in range(order + 1)]
        for (n, exp), c in terms.items():
            if n <= order:
                layers[n][tuple(exp)] = layers[n].get(tuple(exp), 0) + c
        return cls(nvars, order, [TPoly(nvars, layer) for layer in layers])

    @classmethod
    def from_scalars(cls, values, order=None):
        """0-variable series with the given z-coefficients."""
        values = list(values)
        order = len(values) - 1 if order is None else order
        return cls(0, order, [TPoly.constant(0, v) for v in values])

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def _check(self, other):
        if self.nvars != other.nvars:
            raise VariableMismatch(f"{self.nvars} vs {other.nvars} variables")

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot extend a series known to z^{self.order} up to z^{order}")
        return GradedSeries(self.nvars, order, self.coeffs[: order + 1])

    def degree(self):
        """Largest z-degree with a nonzero coefficient (-1 for zero)."""
        for n in range(self.order, -1, -1):
            if self.coeffs[n]:
                return n
        return -1

    def __add__(self, other):
        if isinstance(other, (TPoly, Rational)) and not isinstance(other, bool):
            other = GradedSeries(self.nvars, self.order, [other if isinstance(other, TPoly)
                                                          else TPoly.constant(self.nvars, other)])
        if not isinstance(other, GradedSeries):
            return NotImplemented
        self._check(other)
        order = min(self.order, other.order)
        return GradedSeries(
            self.nvars, order, [self.coeffs[n] + other.coeffs[n] for n in range(order + 1)]
        )

    __radd__ = __add__

    def __neg__(self):
        return GradedSeries(self.nvars, self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return GradedSeries(self.nvars, self.order, [p.scale(c) for p in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        if isinstance(other, TPoly):
            return GradedSeries(self.nvars, self.order, [p * other for p in self.coeffs])
        if not isinstance(other, GradedSeries):
            return NotImplemented
        self._check(other)
        order = min(self.order, other.order)
        out = [TPoly.zero(self.nvars) for _ in range(order + 1)]
        for i in range(order + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return GradedSeries(self.nvars, order, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def divide_by_factor(self, monomial, zpow, mult=1):
        """Multiply by ``(1 - t^monomial z^zpow)^(-mult)``.

        Uses the recurrence ``R_n = S_n + t^monomial R_{n-zpow}``, applied
        ``mult`` times, which is the geometric series without any division.
        """
        if zpow < 1:
            raise ValueError("denominator factors need a positive z-power")
        monomial = tuple(monomial)
        cs = list(self.coeffs)
        for _ in range(mult):
            for n in range(zpow, self.order + 1):
                prev = cs[n - zpow]
                if prev:
                    cs[n] = cs[n] + prev.shift(monomial)
        return GradedSeries(self.nvars, self.order, cs)

    def multiply_by_factor(self, monomial, zpow, mult=1):
        """Multiply by ``(1 - t^monomial z^zpow)^mult``."""
        monomial = tuple(monomial)
        cs = list(self.coeffs)
        for _ in range(mult):
            for n in range(self.order, zpow - 1, -1):
                prev = cs[n - zpow]
                if prev:
                    cs[n] = cs[n] - prev.shift(monomial)
        return GradedSeries(self.nvars, self.order, cs)

    def substitute(self, images: Sequence, nvars: int | None = None):
        target = _target_nvars(images, nvars)
        return GradedSeries(
            target, self.order, [c.substitute(images, target) for c in self.coeffs]
        )

    def scalars(self):
        """z-coefficients as rationals; every coefficient must be t-constant."""
        return [c.constant_value() for c in self.coeffs]

    def equals(self, other, order=None):
        self._check(other)
        top = min(self.order, other.order)
        if order is not None:
            top = min(top, order)
        return all(self.coeffs[n] == other.coeffs[n] for n in range(top + 1))

    def first_difference(self, other, order=None):
        """Smallest z-degree where the two series differ, or ``None``."""
        self._check(other)
        top = min(self.order, other.order)
        if order is not None:
            top = min(top, order)
        for n in range(top + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return (self.nvars, self.order, self.coeffs) == (other.nvars, other.order, other.coeffs)

    def __hash__(self):
        return hash((self.nvars, self.order, self.coeffs))

    def to_str(self, var="t"):
        pieces = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            zs = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
            body = c.to_str(var)
            sign = "+"
            if len(c) == 1 and body.startswith("-"):
                sign, body = "-", body[1:]
            if zs and body == "1":
                body = zs
            elif zs and len(c) == 1:
                body = f"{body}*{zs}"
            elif zs:
                body = f"({body})*{zs}"
            pieces.append((sign, body))
        if not pieces:
            text = "0"
        else:
            text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
            for sign, body in pieces[1:]:
                text += f" {sign} {body}"
        return text + f" + O(z^{self.order + 1})"

    def __repr__(self):
        return f"GradedSeries({self.nvars}, {self.to_str()})"

    def to_dict(self):
        return {
            "nvars": self.nvars,
            "order": self.order,
            "coeffs": [c.to_dict()["terms"] for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, obj):
        nvars = int(obj["nvars"])
        return cls(
            nvars,
            int(obj["order"]),
            [TPoly.from_dict({"nvars": nvars, "terms": terms}) for terms in obj["coeffs"]],
        )


def series_mul(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    if not isinstance(b, GradedSeries):
        raise TypeError("series_mul needs two GradedSeries")
    return a * b


def substitute_vars(s, images: Sequence, nvars: int | None = None):
    """Replace each ``t_i`` by ``images[i]`` in a :class:`TPoly` or :class:`GradedSeries`."""
    return s.substitute(images, nvars)


def series_equal(a: GradedSeries, b: GradedSeries, order: int) -> bool:
    return a.equals(b, order)


@dataclass(frozen=True)
class Factor:
    """The denominator factor ``(1 - t^monomial z^zpow)^mult``."""

    monomial: tuple
    zpow: int
    mult: int = 1

    def __post_init__(self):
        object.__setattr__(self, "monomial", tuple(int(a) for a in self.monomial))
        if self.zpow < 1 or self.mult < 1 or any(a < 0 for a in self.monomial):
            raise ValueError(f"invalid denominator factor {self}")


def _merge_factors(factors):
    acc = {}
    for f in factors:
        key = (f.monomial, f.zpow)
        acc[key] = acc.get(key, 0) + f.mult
    return tuple(Factor(m, k, e) for (m, k), e in sorted(acc.items(), key=lambda kv: (kv[0][1], kv[0][0])))


@dataclass(frozen=True)
class FormTerm:
    """``scalar * numerator / prod(factors)``; ``numerator`` is an exact polynomial in z."""

    scalar: object
    numerator: GradedSeries
    factors: tuple = ()

    def __post_init__(self):
        _exact(self.scalar)
        object.__setattr__(self, "factors", _merge_factors(self.factors))
        for f in self.factors:
            if len(f.monomial) != self.numerator.nvars:
                raise VariableMismatch("factor monomial and numerator disagree on nvars")
        top = self.numerator.degree()
        if top < self.numerator.order:
            trimmed = self.numerator.truncate(max(top, 0))
            object.__setattr__(self, "numerator", trimmed)

    @property
    def nvars(self):
        return self.numerator.nvars

    def expand(self, order):
        num = self.numerator
        if num.order >= order:
            series = num.truncate(order)
        else:
            series = GradedSeries(num.nvars, order, num.coeffs)
        for f in self.factors:
            series = series.divide_by_factor(f.monomial, f.zpow, f.mult)
        return series.scale(self.scalar) if self.scalar != 1 else series


class RationalForm:
    """Finite sum of :class:`FormTerm`; represents a closed-form series exactly."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Iterable[FormTerm] = ()):
        terms = tuple(terms)
        for t in terms:
            if t.nvars != nvars:
                raise VariableMismatch(f"term in {t.nvars} variables, form in {nvars}")
        self.nvars = nvars
        self.terms = terms

    @classmethod
    def polynomial(cls, numerator: GradedSeries, scalar=1, factors=()):
        return cls(numerator.nvars, [FormTerm(scalar, numerator, tuple(factors))])

    @classmethod
    def constant(cls, nvars, c=1):
        return cls.polynomial(GradedSeries.one(nvars, 0), scalar=c)

    def __add__(self, other):
        if not isinstance(other, RationalForm):
            return NotImplemented
        if self.nvars != other.nvars:
            raise VariableMismatch(f"{self.nvars} vs {other.nvars} variables")
        return RationalForm(self.nvars, self.terms + other.terms)

    def scale(self, c):
        return RationalForm(
            self.nvars, [FormTerm(c * t.scalar, t.numerator, t.factors) for t in self.terms]
        )

    def expand(self, order: int) -> GradedSeries:
        total = GradedSeries.zero(self.nvars, order)
        for t in self.terms:
            total = total + t.expand(order)
        return total

    def substitute_monomials(self, weights: Sequence[Sequence[int]]) -> "RationalForm":
        """Send ``t_i`` to ``t^weights[i]`` everywhere, keeping the factor shape."""
        if len(weights) != self.nvars:
            raise VariableMismatch(f"{len(weights)} weights for {self.nvars} variables")
        weights = [tuple(w) for w in weights]
        lengths = {len(w) for w in weights}
        if len(lengths) > 1:
            raise VariableMismatch(f"weights of mixed lengths {sorted(lengths)}")
        target = lengths.pop() if lengths else 0
        images = [TPoly.monomial(target, w) for w in weights]
        terms = []
        for t in self.terms:
            num = t.numerator.substitute(images, target)
            factors = [
                Factor(
                    tuple(sum(a * w[j] for a, w in zip(f.monomial, weights)) for j in range(target)),
                    f.zpow,
                    f.mult,
                )
                for f in t.factors
            ]
            terms.append(FormTerm(t.scalar, num, tuple(factors)))
        return RationalForm(target, terms)

    def to_str(self, var="t"):
        pieces = []
        for t in self.terms:
            num = t.numerator.to_str(var).rsplit(" + O(", 1)[0]
            den = []
            for f in t.factors:
                mono = TPoly.monomial(len(f.monomial), f.monomial).to_str(var)
                zs = "z" if f.zpow == 1 else f"z^{f.zpow}"
                body = zs if mono == "1" else f"{mono}*{zs}"
                den.append(f"(1 - {body})" + (f"^{f.mult}" if f.mult > 1 else ""))
            text = f"({num})"
            if t.scalar != 1:
                text = f"{_format_rational(t.scalar)}*{text}"
            if den:
                text += "/(" + "*".join(den) + ")"
            pieces.append(text)
        return " + ".join(pieces) or "0"

    def __repr__(self):
        return f"RationalForm({self.nvars}, {self.to_str()})"

    def to_dict(self):
        return {
            "nvars": self.nvars,
            "terms": [
                {
                    "scalar": rational_to_json(t.scalar),
                    "numerator": t.numerator.to_dict(),
                    "factors": [
                        {"monomial": list(f.monomial), "zpow": f.zpow, "mult": f.mult}
                        for f in t.factors
                    ],
                }
                for t in self.terms
            ],
        }

    @classmethod
    def from_dict(cls, obj):
        terms = []
        for t in obj["terms"]:
            terms.append(
                FormTerm(
                    rational_from_json(t["scalar"]),
                    GradedSeries.from_dict(t["numerator"]),
                    tuple(Factor(tuple(f["monomial"]), int(f["zpow"]), int(f.get("mult", 1)))
                          for f in t["factors"]),
                )
            )
        return cls(int(obj["nvars"]), terms)


def expand_rational_form(f: RationalForm, order: int) -> GradedSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    return f.expand(order)
