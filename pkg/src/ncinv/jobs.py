"""End-to-end jobs: source form -> optional regrade -> multiplicity table -> invariants.

The functions here return plain JSON-ready dicts; :mod:`ncinv.cli` renders
them and picks the exit status.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .algebras import AlgebraSpec, hilbert_form
from .errors import ConfigError, FormSyntaxError
from .formparse import parse_form
from .invariants import GroupSpec, dual_check
from .multiplicity import multiplicity_table, table_to_M, table_to_Mprime
from .polyring import GradedSeries, RationalForm
from .regrade import ModuleSpec, module_weights, regrade_form

__all__ = [
    "JobConfig",
    "load_catalog",
    "build_table",
    "run_invariants",
    "run_decompose",
    "run_catalog",
]


def _form_from(obj, nvars=None):
    if isinstance(obj, RationalForm):
        return obj
    if isinstance(obj, str):
        return parse_form(obj, nvars)
    if isinstance(obj, dict) and "terms" in obj:
        return RationalForm.from_dict(obj)
    raise ConfigError(f"cannot read a rational form from {obj!r}")


@dataclass
class JobConfig:
    source: object
    order: int
    regrade: ModuleSpec | None = None
    groups: list = field(default_factory=list)
    expected: list = field(default_factory=list)

    def __post_init__(self):
        if self.order < 0:
            raise ConfigError("order must be nonnegative")
        n = self.source_nvars
        if self.regrade is not None:
            weights = self.regrade.dimension
            if weights != n:
                raise ConfigError(f"regrading module has dimension {weights}, source has {n} generators")
        for g in self.groups:
            if g.d != self.nvars:
                raise ConfigError(f"{g} does not act on the working {self.nvars} variables")
        for g, _ in self.expected:
            if g not in self.groups:
                raise ConfigError(f"expectation given for {g}, which is not among the groups")

    @property
    def source_nvars(self):
        return self.source.m if isinstance(self.source, AlgebraSpec) else self.source.nvars

    @property
    def nvars(self):
        return self.regrade.d if self.regrade is not None else self.source_nvars

    def form(self) -> RationalForm:
        f = hilbert_form(self.source) if isinstance(self.source, AlgebraSpec) else self.source
        if self.regrade is not None:
            f = regrade_form(f, module_weights(self.regrade))
        return f

    def describe(self):
        if isinstance(self.source, AlgebraSpec):
            text = f"{self.source.family} m={self.source.m}"
        else:
            text = f"form {self.source.to_str()}"
        if self.regrade is not None:
            text += f", generators as {self.regrade}"
        return text

    def to_dict(self):
        src = self.source.to_dict()
        return {
            "source": src,
            "order": self.order,
            "regrade": None if self.regrade is None else self.regrade.to_dict(),
            "groups": [g.to_dict() for g in self.groups],
        }

    @classmethod
    def from_dict(cls, obj, order=None):
        """Build from parsed JSON; ``order`` overrides the file's value when given."""
        try:
            src = obj["source"]
            if "family" in src:
                source = AlgebraSpec.from_dict(src)
            elif "form" in src:
                source = _form_from(src["form"], src.get("nvars"))
                if source.nvars == 0:
                    source = _form_from(src["form"], 1)
            else:
                raise ConfigError("source needs either 'family'/'m' or 'form'")
            regrade = ModuleSpec.from_dict(obj["regrade"]) if obj.get("regrade") else None
            groups = [GroupSpec.from_dict(g) for g in obj.get("groups", [])]
            expected = [
                (GroupSpec.from_dict(e["group"]), _form_from(e["form"], 0))
                for e in obj.get("expected", [])
            ]
            if order is None:
                order = int(obj["order"])
        except ConfigError:
            raise
        except FormSyntaxError as exc:
            raise ConfigError(str(exc)) from exc
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"invalid job config: {exc}") from exc
        return cls(source, int(order), regrade, groups, expected)


def build_table(cfg: JobConfig) -> tuple:
    """Expand the (regraded) Hilbert series and decompose it."""
    H = cfg.form().expand(cfg.order)
    return H, multiplicity_table(H)


def _compare(actual: GradedSeries, expected_form: RationalForm, order):
    expected = expected_form.expand(order)
    diff = actual.first_difference(expected)
    out = {"form": expected_form.to_str(), "match": diff is None, "first_difference": diff}
    if expected.nvars == 0:
        out["coeffs"] = [int(c) if int(c) == c else str(c) for c in expected.scalars()]
    return out


def run_invariants(cfg: JobConfig) -> dict:
    _, tab = build_table(cfg)
    expected = dict(cfg.expected)
    results = []
    for g in cfg.groups:
        inv = dual_check(tab, g)
        entry = {"group": g.to_dict(), "coeffs": list(inv.coeffs)}
        if g in expected:
            entry["expected"] = _compare(inv.as_series(), expected[g], cfg.order)
        results.append(entry)
    ok = all(r.get("expected", {"match": True})["match"] for r in results)
    return {"job": cfg.describe(), "order": cfg.order, "results": results, "ok": ok}


def run_decompose(cfg: JobConfig) -> dict:
    _, tab = build_table(cfg)
    return {
        "job": cfg.describe(),
        "table": tab.to_dict(),
        "M": table_to_M(tab).to_str("t"),
        "Mprime": table_to_Mprime(tab).to_str("u"),
    }


def load_catalog() -> list:
    text = resources.files("ncinv").joinpath("data/catalog.json").read_text(encoding="utf-8")
    return json.loads(text)["items"]


def _item_config(item, order):
    return JobConfig.from_dict(
        {
            "source": item["source"],
            "regrade": item.get("regrade"),
            "groups": [item["group"]] if "group" in item else [],
        },
        order=order,
    )


def _table_key(item):
    return json.dumps([item["source"], item.get("regrade")], sort_keys=True)


def run_catalog(order: int, items=None, tables=None) -> dict:
    """Check every catalog item at ``order``.

    Each item is either an invariant series (``kind`` ``"invariants"``) or a
    multiplicity series ``M`` / ``Mprime`` in t- or u-variables.  Items marked
    ``suspect`` never fail the run on a mismatch against their printed form;
    the delta is reported instead.  Both routes must agree for every item.
    """
    items = load_catalog() if items is None else items
    tables = {} if tables is None else tables
    rows = []
    for item in items:
        cfg = _item_config(item, order)
        key = _table_key(item)
        tab = tables.get(key)
        if tab is None or tab.order < order:
            tab = build_table(cfg)[1]
            tables[key] = tab
        tab = tab.truncate(order) if tab.order > order else tab
        kind = item.get("kind", "invariants")
        row = {"id": item["id"], "title": item["title"], "kind": kind, "suspect": bool(item.get("suspect"))}
        try:
            if kind == "invariants":
                inv = dual_check(tab, cfg.groups[0])
                actual = inv.as_series()
                row["coeffs"] = list(inv.coeffs)
                expected_form = _form_from(item["expected"], 0)
            else:
                actual = table_to_M(tab) if kind == "M" else table_to_Mprime(tab)
                expected_form = _form_from(item["expected"], tab.nvars)
            row["expected"] = _compare(actual, expected_form, order)
            if row["expected"]["match"]:
                row["status"] = "PASS"
            else:
                row["status"] = "DELTA" if row["suspect"] else "FAIL"
                n = row["expected"]["first_difference"]
                row["delta"] = {"degree": n, "engine": actual[n].to_str(), "printed": expected_form.expand(order)[n].to_str()}
        except Exception as exc:  # any engine failure is a hard FAIL
            row["status"] = "FAIL"
            row["error"] = f"{type(exc).__name__}: {exc}"
        rows.append(row)
    counts = {s: sum(1 for r in rows if r["status"] == s) for s in ("PASS", "DELTA", "FAIL")}
    return {"order": order, "items": rows, "summary": counts, "ok": counts["FAIL"] == 0}
