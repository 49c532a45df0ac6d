"""``resolvent`` command line: Gröbner bases, Betti numbers and verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 inconclusive completion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional, Sequence

from .anick import AnickResolution
from .cohom import betti_numbers
from .parse import ParseError
from .presets import bosonization, h27, nichols, truncated
from .report import Report, render
from .rewrite import CompletionInconclusive, Presentation, complete
from .ttp import k_complex, y_complex
from . import suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
ENV_CAP = "RESOLVENT_MAX_DEGREE"
PRESETS = ("nichols", "bosonization", "H27", "trunc")


class UsageError(Exception):
    pass


def _exps(text: str) -> tuple:
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m1,m2,m3, got {text!r}")
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"expected three exponents, got {text!r}")
    return vals


def _add_input(sp: argparse.ArgumentParser) -> None:
    src = sp.add_mutually_exclusive_group()
    src.add_argument("--preset", choices=PRESETS)
    src.add_argument("--file", help="JSON presentation file")
    sp.add_argument("--p", type=int, default=3, help="characteristic (default 3)")
    sp.add_argument("--q", type=int, default=None, help="group order for the bosonization (default p)")
    sp.add_argument("--eps", type=int, default=1)
    sp.add_argument("--mu", type=int, default=0)
    sp.add_argument("--tau", type=int, default=0)
    sp.add_argument("--exps", type=_exps, default=(3, 3, 3), help="m1,m2,m3 for the trunc preset")


def _add_output(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--out", choices=("text", "json", "csv"), default="text")
    sp.add_argument("--figure-dir", help="write PNG figures for the report into this directory")
    sp.add_argument("--timing", action="store_true", help="include wall-clock timings (not byte-stable)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="resolvent", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("groebner", help="complete a presentation and list tips and dimension")
    _add_input(g)
    g.add_argument("--max-degree", type=int, default=None, help="degree cap for completion")
    _add_output(g)

    b = sub.add_parser("betti", help="dimensions of Ext^n(k, k)")
    _add_input(b)
    b.add_argument("--max-degree", type=int, default=4)
    b.add_argument("--engine", choices=("anick", "ttp"), default="anick")
    _add_output(b)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=("anick", "ttp", "h27", "all"), default="all")
    v.add_argument("--p", type=int, default=None)
    v.add_argument("--q", type=int, default=None)
    v.add_argument("--exps", type=_exps, default=None)
    v.add_argument("--eps", type=int, default=None)
    v.add_argument("--mu", type=int, default=None)
    v.add_argument("--tau", type=int, default=None)
    v.add_argument("--max-degree", type=int, default=None)
    v.add_argument("--samples", type=int, default=100, help="random samples per degree for homotopy checks")
    _add_output(v)
    return ap


def degree_cap(requested: Optional[int], default: Optional[int] = None) -> Optional[int]:
    """Apply the environment cap to a requested degree bound."""
    value = default if requested is None else requested
    raw = os.environ.get(ENV_CAP)
    if raw is None or raw == "":
        return value
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{ENV_CAP} must be an integer, got {raw!r}")
    if cap < 0:
        raise UsageError(f"{ENV_CAP} must be non-negative")
    return cap if value is None else min(value, cap)


def load_presentation_file(path: str) -> tuple:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise UsageError(f"{path}: expected a JSON object")
    missing = [k for k in ("characteristic", "generators", "relations") if k not in doc]
    if missing:
        raise UsageError(f"{path}: missing keys {', '.join(missing)}")
    p, gens, rels = doc["characteristic"], doc["generators"], doc["relations"]
    params = doc.get("parameters", {})
    if not isinstance(p, int) or not isinstance(gens, list) or not isinstance(rels, list) \
            or not isinstance(params, dict):
        raise UsageError(f"{path}: characteristic must be an integer, generators and relations lists, "
                         "parameters an object")
    try:
        pres = Presentation.from_strings(gens, p, rels, params, name=os.path.basename(path))
    except ParseError:
        raise
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}")
    return pres, {str(k): int(v) for k, v in params.items()}


def resolve_input(args) -> tuple:
    """``(presentation, source label, q, parameters)`` for preset or file input."""
    if args.file:
        pres, params = load_presentation_file(args.file)
        return pres, f"file:{os.path.basename(args.file)}", None, params
    preset = args.preset or "nichols"
    try:
        if preset == "nichols":
            return nichols(args.p), f"nichols(p={args.p})", None, {}
        if preset == "bosonization":
            q = args.q or args.p
            return bosonization(args.p, q), f"bosonization(p={args.p},q={q})", q, {}
        if preset == "H27":
            params = {"eps": args.eps, "mu": args.mu % 3, "tau": args.tau % 3}
            return h27(args.eps, args.mu, args.tau), "H27", None, params
        m = args.exps
        return truncated(*m, p=args.p), "trunc({},{},{})".format(*m), None, {}
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_groebner(args) -> tuple:
    pres, source, q, params = resolve_input(args)
    cap = degree_cap(args.max_degree)
    if cap is not None and cap < pres.max_degree():
        raise UsageError(f"degree cap {cap} is below the relation degree {pres.max_degree()}")
    rs = complete(pres, degree_cap=cap)
    report = Report("groebner", source, pres.p, q, params, cap)
    report.tips = [rs.format_tip(t) for t in rs.tips]
    report.dimension = rs.dimension()
    report.hilbert = rs.hilbert_function()
    report.certificate = (f"all overlaps resolve; no normal words beyond degree "
                          f"{len(report.hilbert) - 1}")
    return report, EXIT_OK


def cmd_betti(args) -> tuple:
    pres, source, q, params = resolve_input(args)
    n = degree_cap(args.max_degree)
    if n < 0:
        raise UsageError("--max-degree must be non-negative")
    if args.engine == "ttp":
        if args.file or args.preset not in ("nichols", "bosonization"):
            raise UsageError("the ttp engine only applies to the nichols and bosonization presets")
        res = k_complex(args.p) if args.preset == "nichols" else y_complex(args.p, q)
        values = betti_numbers(res, n)
    else:
        values = betti_numbers(AnickResolution(complete(pres)), n)
    report = Report("betti", source, pres.p, q, params, n)
    report.engine = args.engine
    report.betti = values
    return report, EXIT_OK


def cmd_verify(args) -> tuple:
    suite = args.suite
    p = args.p or 3
    q = args.q or p
    report = Report("verify", f"suite:{suite}", p, q if suite in ("ttp", "all") else None)
    if suite == "anick":
        n = degree_cap(args.max_degree, 8)
        report.max_degree = n
        exps = [args.exps] if args.exps else suites.TRUNC_EXPONENTS
        suites.anick_suite(report, exps, n, args.samples)
    elif suite == "ttp":
        n = degree_cap(args.max_degree, 10)
        report.max_degree = n
        try:
            suites.ttp_suite(report, p, q, n)
        except ValueError as exc:
            raise UsageError(str(exc))
    elif suite == "h27":
        report.p = 3
        if any(v is not None for v in (args.eps, args.mu, args.tau)):
            tup = (args.eps or 0, (args.mu or 0) % 3, (args.tau or 0) % 3)
            if tup[0] not in (0, 1):
                raise UsageError("--eps must be 0 or 1")
            report.parameters = dict(zip(("eps", "mu", "tau"), tup))
            suites.h27_suite(report, [tup])
        else:
            suites.h27_suite(report)
    else:
        suites.all_suites(report)
    return report, EXIT_OK if report.ok else EXIT_FAIL


COMMANDS = {"groebner": cmd_groebner, "betti": cmd_betti, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"resolvent: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"resolvent: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CompletionInconclusive as exc:
        print(f"resolvent: completion inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    if args.timing:
        report.timing = {"total": round(time.perf_counter() - start, 3)}
    sys.stdout.write(render(report, args.out))
    if args.figure_dir:
        from .plotting import write_figures

        for path in write_figures(report, args.figure_dir):
            print(f"figure: {path}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
