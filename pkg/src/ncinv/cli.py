"""Command-line front end.

::

    ncinv invariants --config job.json [--order N] [--format json|text] [--out FILE]
    ncinv decompose  --config job.json [--order N] [--format json|text] [--out FILE]
    ncinv reproduce-paper [--order N] [--format json|text] [--out FILE]

Exit status is 0 when every check passes, 1 on a failed check (expectation
mismatch, route disagreement, invalid module data) and 2 on configuration
errors.  The default order is 16, overridable through ``NCINV_ORDER``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import ConfigError, DecompositionError, DualCheckError
from .jobs import JobConfig, run_catalog, run_decompose, run_invariants

DEFAULT_ORDER = 16
ORDER_ENV = "NCINV_ORDER"

EXIT_OK, EXIT_CHECK, EXIT_CONFIG = 0, 1, 2


def default_order():
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{ORDER_ENV}={raw!r} is not an integer") from None
    if value < 0:
        raise ConfigError(f"{ORDER_ENV} must be nonnegative")
    return value


def _load_config(path, order):
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}") from exc
    if order is None and "order" not in obj:
        order = default_order()
    return JobConfig.from_dict(obj, order=order)


def dumps(report) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _series_text(coeffs):
    terms = []
    for n, c in enumerate(coeffs):
        if c:
            zs = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
            terms.append(str(c) if not zs else (zs if c == 1 else f"{c}*{zs}"))
    return " + ".join(terms) or "0"


def render_invariants(report) -> str:
    lines = [f"{report['job']}  (to z^{report['order']})"]
    for r in report["results"]:
        g = r["group"]
        line = f"  {g['kind']}_{g['d']:<3} {_series_text(r['coeffs'])}"
        if "expected" in r:
            e = r["expected"]
            line += "   [match]" if e["match"] else f"   [MISMATCH at z^{e['first_difference']}]"
        lines.append(line)
    return "\n".join(lines) + "\n"


def render_decompose(report) -> str:
    lines = [report["job"], "  degree  partition  multiplicity"]
    for e in report["table"]["entries"]:
        lines.append(f"  {e['n']:>6}  {tuple(e['partition'])!s:<10} {e['mult']}")
    lines.append(f"  M  = {report['M']}")
    lines.append(f"  M' = {report['Mprime']}")
    return "\n".join(lines) + "\n"


def render_catalog(report) -> str:
    lines = []
    for r in report["items"]:
        flag = " (typo-suspect)" if r["suspect"] else ""
        lines.append(f"{r['status']:<5} {r['id']}{flag}")
        if "delta" in r:
            d = r["delta"]
            lines.append(f"      z^{d['degree']}: engine {d['engine']}, printed {d['printed']}")
        if "error" in r:
            lines.append(f"      {r['error']}")
    s = report["summary"]
    lines.append(
        f"summary at z^{report['order']}: {s['PASS']} pass, {s['DELTA']} delta (suspect), {s['FAIL']} fail"
    )
    return "\n".join(lines) + "\n"


def build_parser():
    parser = argparse.ArgumentParser(prog="ncinv", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, config):
        if config:
            p.add_argument("--config", required=True, help="job description (JSON)")
        p.add_argument("--order", type=int, default=None, help="truncation order N")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")

    common(sub.add_parser("invariants", help="Hilbert series of invariants for a job"), True)
    common(sub.add_parser("decompose", help="multiplicity table of a job's Hilbert series"), True)
    common(sub.add_parser("reproduce-paper", help="check the bundled catalog of closed forms"), False)
    return parser


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.order is not None and args.order < 0:
            raise ConfigError("--order must be nonnegative")
        if args.command == "reproduce-paper":
            order = args.order if args.order is not None else default_order()
            report = run_catalog(order)
            render, status = render_catalog, EXIT_OK if report["ok"] else EXIT_CHECK
        else:
            cfg = _load_config(args.config, args.order)
            if args.command == "invariants":
                report = run_invariants(cfg)
                render, status = render_invariants, EXIT_OK if report["ok"] else EXIT_CHECK
            else:
                report = run_decompose(cfg)
                render, status = render_decompose, EXIT_OK
    except ConfigError as exc:
        print(f"ncinv: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (DualCheckError, DecompositionError) as exc:
        print(f"ncinv: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    _emit(dumps(report) if args.format == "json" else render(report), args.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
