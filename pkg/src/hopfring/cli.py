"""Command-line front end: ``hopfring cycle|deloop|tor|poincare|verify|relations-table``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager

from .barss import AssumptionUnavailable, StructureViolation, deloop, run_cycle, tor, tor_poincare
from .checks import DEFAULT_SEED, run_suite
from .circle import RELATION_TABLE
from .f2series import DEFAULT_MAXDEG
from .presentations import PERIOD, ParseError, parse_presentation, poincare, registry_lookup

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_maxdeg() -> int:
    raw = os.environ.get("HOPFRING_MAXDEG")
    if raw is None:
        return DEFAULT_MAXDEG
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HOPFRING_MAXDEG must be an integer, got {raw!r}") from None


def _spectrum(text: str) -> str:
    s = text.upper()
    if s not in PERIOD:
        raise argparse.ArgumentTypeError(f"expected ko or ku, got {text!r}")
    return s


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", type=int, default=None,
                        help=f"truncation degree (default {DEFAULT_MAXDEG}, or $HOPFRING_MAXDEG)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="hopfring", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cycle", parents=[common], help="run every delooping step of a spectrum")
    c.add_argument("--spectrum", type=_spectrum, default="KO")

    d = sub.add_parser("deloop", parents=[common], help="one delooping step X_n -> X_{n+1}")
    d.add_argument("--spectrum", type=_spectrum, default="KO")
    d.add_argument("--space", type=int, required=True, help="n")

    for name, helptext in (("tor", "Tor generators of a presentation"),
                           ("poincare", "Poincare series of a presentation")):
        t = sub.add_parser(name, parents=[common], help=helptext)
        src = t.add_mutually_exclusive_group(required=True)
        src.add_argument("--preset", help="SPECTRUM:N, e.g. ko:3")
        src.add_argument("--gens", help='presentation, e.g. "1; P(deg=1*i+0, i>=1)"')

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=("relations", "hopf-axioms", "extensions", "all"))
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--bound", type=int, default=32)
    v.add_argument("--spectrum", type=_spectrum, default=None, help="restrict extension checks")

    sub.add_parser("relations-table", parents=[common], help="list the rewrite rules")
    return p


def _resolve_presentation(args):
    if args.gens is not None:
        return parse_presentation(args.gens)
    spec, sep, n = args.preset.partition(":")
    if not sep:
        raise UsageError(f"--preset expects SPECTRUM:N, got {args.preset!r}")
    try:
        return registry_lookup(_spectrum(spec), int(n))
    except (argparse.ArgumentTypeError, ValueError) as exc:
        raise UsageError(f"bad --preset {args.preset!r}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _report_lines(r) -> list[str]:
    return [
        f"{r.step}: {r.input.label} -> {r.target.label}",
        f"  input     {r.input.describe()}",
        f"  target    {r.target.describe()}",
        f"  tor gens  {len(r.tor_generators)} (total degree ≤ {r.maxdeg})",
        f"  collapse  {r.collapse_mode}",
        f"  match     {'yes' if r.dimension_match else f'NO, first at degree {r.first_mismatch}'}",
    ]


def cmd_cycle(args, maxdeg: int) -> int:
    rep = run_cycle(args.spectrum, maxdeg)
    if args.format == "json":
        _emit(_dump(rep.to_json()), args.out)
        return EXIT_OK if rep.ok else EXIT_FAIL
    rows = [("step", "space", "presentation", "collapse", "match")]
    for r in rep.steps:
        mode = r.collapse_mode.kind.value
        rows.append((f"{r.n}->{r.n + 1}", r.target.label, r.target.describe(), mode,
                     "yes" if r.dimension_match else f"NO@{r.first_mismatch}"))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    s = args.spectrum
    lines.append(f"closure: {'yes' if rep.closure else 'NO'}")
    lines.append(f"{s}_{PERIOD[s]} ≅ {s}_0")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_deloop(args, maxdeg: int) -> int:
    try:
        r = deloop(args.spectrum, args.space, maxdeg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _emit(_dump(r.to_json()), args.out)
    else:
        lines = _report_lines(r)
        for g in r.tor_generators:
            lines.append(f"    ({g.filtration},{g.internal_degree}) total {g.total_degree}  {g.source}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if r.dimension_match else EXIT_FAIL


def cmd_tor(args, maxdeg: int) -> int:
    pres = _resolve_presentation(args)
    gens = tor(pres, maxdeg)
    series = tor_poincare(gens, maxdeg)
    if args.format == "json":
        doc = {"presentation": pres.canonical(), "label": pres.label, "note": pres.relabel,
               "maxdeg": maxdeg, "generators": [g.to_json() for g in gens],
               "poincare": list(series.coefficients)}
        _emit(_dump(doc), args.out)
        return EXIT_OK
    lines = []
    if pres.label:
        lines.append(pres.label)
    if pres.relabel:
        lines.append(f"note: {pres.relabel}")
    lines.append(f"presentation: {pres.canonical()}")
    for g in gens:
        lines.append(f"  (s={g.filtration}, t={g.internal_degree})  total {g.total_degree}  {g.source}")
    lines.append(f"poincare: {series}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_poincare(args, maxdeg: int) -> int:
    pres = _resolve_presentation(args)
    series = poincare(pres, maxdeg)
    if args.format == "json":
        _emit(_dump({"presentation": pres.canonical(), "maxdeg": maxdeg,
                     "coefficients": list(series.coefficients)}), args.out)
    else:
        _emit(f"{pres.canonical()}\n{series}\n", args.out)
    return EXIT_OK


def cmd_verify(args, maxdeg: int) -> int:
    if not 0 <= args.bound <= 64:
        raise UsageError("--bound must lie in 0..64")
    spectra = (args.spectrum,) if args.spectrum else ("KO", "KU")
    checks = run_suite(args.suite, args.seed, args.bound, spectra)
    ok = all(c.passed for c in checks)
    if args.format == "json":
        doc = {"suite": args.suite, "seed": args.seed, "bound": args.bound, "passed": ok,
               "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]}
        _emit(_dump(doc), args.out)
    else:
        lines = [f"{c.name} {'OK' if c.passed else 'FAIL'}" + (f"  ({c.detail})" if c.detail else "")
                 for c in checks]
        lines.append("all checks passed" if ok else "verification FAILED")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_relations_table(args, maxdeg: int) -> int:
    if args.format == "json":
        _emit(_dump([{"name": r.name, "lhs": r.lhs, "rhs": r.rhs, "source": r.source,
                      "bidegree": list(r.lhs_bidegree), "homogeneous": r.homogeneous}
                     for r in RELATION_TABLE]), args.out)
    else:
        w = max(len(r.lhs) for r in RELATION_TABLE)
        lines = [f"{r.name:<14} {r.lhs:<{w}} = {r.rhs}   [{r.source}]" for r in RELATION_TABLE]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


COMMANDS = {
    "cycle": cmd_cycle,
    "deloop": cmd_deloop,
    "tor": cmd_tor,
    "poincare": cmd_poincare,
    "verify": cmd_verify,
    "relations-table": cmd_relations_table,
}


@contextmanager
def _utf8_stdout():
    # the reports use ∘, λ, ≅; do not let a narrow locale turn them into a crash
    reconf = getattr(sys.stdout, "reconfigure", None)
    if reconf is not None:
        try:
            reconf(encoding="utf-8")
        except (ValueError, OSError):
            pass
    yield


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    with _utf8_stdout():
        try:
            maxdeg = args.max_degree if args.max_degree is not None else _default_maxdeg()
            if maxdeg < 0:
                raise UsageError("--max-degree must be nonnegative")
            return COMMANDS[args.command](args, maxdeg)
        except UsageError as exc:
            print(f"hopfring: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except ParseError as exc:
            print(f"hopfring: parse error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except (StructureViolation, AssumptionUnavailable) as exc:
            print(f"hopfring: verification failed: {exc}", file=sys.stderr)
            return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
