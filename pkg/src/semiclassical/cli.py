"""Command-line driver: pick a mode and parameters, run a suite or an analysis,
write a JSON report (stdout or --out) and a short summary to stderr.

Exit codes: 0 when every check passes, 1 when some check fails, 2 on usage or
input errors (including families whose recurrence breaks down or runs out of
tabulated coefficients).
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction

from semiclassical.report import Check, SuiteResult, show


class UsageError(Exception):
    pass


# -- contexts -------------------------------------------------------------------------------

def _scalar_arg(text: str, ctx):
    from semiclassical.parsing import parse_scalar

    return parse_scalar(text, ctx)


def _rational_arg(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{flag} must be a rational literal such as 1/2, got {text!r}") from None


def aw_context(args):
    from semiclassical.scalar import QContext

    if args.mode == "symbolic":
        return QContext.symbolic()
    if args.t is None:
        raise UsageError("rational Askey-Wilson mode needs --t (q = t^2)")
    return QContext.rational(_rational_arg(args.t, "--t"))


def hahn_context(args):
    from semiclassical.hahn import HahnContext
    from semiclassical.scalar import QContext

    if args.mode == "symbolic":
        ctx = QContext.symbolic("hahn")
        return HahnContext(ctx, ctx.t, _scalar_arg(args.omega, ctx))
    if args.q is None:
        raise UsageError("rational Hahn mode needs --q")
    ctx = QContext.rational(_rational_arg(args.q, "--q"), "hahn")
    return HahnContext(ctx, ctx.t, _scalar_arg(args.omega, ctx))


def named_poly(text: str, ctx):
    """U1, U2 or a polynomial literal in x (and t)."""
    from semiclassical.awops import structural_polys
    from semiclassical.parsing import parse_poly

    if text in ("U1", "U2"):
        return getattr(structural_polys(ctx), text)
    return parse_poly(text, ctx)


def load_family(path: str):
    from semiclassical.opseq import family_from_json

    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read family file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"family file is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("family file must hold a JSON object")
    try:
        ctx, fam, N = family_from_json(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed family file: missing or mistyped entry {exc}") from None
    return data, ctx, fam, N


# -- commands ---------------------------------------------------------------------------------

def cmd_verify_lemma25(args) -> SuiteResult:
    from semiclassical.awops import verify_lemma25

    ctx = aw_context(args)
    rep = verify_lemma25(args.deg, args.trials, args.seed, ctx)
    res = SuiteResult("lemma25")
    for c in rep.checks:
        res.add(Check(c.name, c.status == "pass", (1, c.passed + c.failed), c.counterexample))
    return res


def cmd_suite_prop41(args) -> SuiteResult:
    from semiclassical.suites import run_prop41

    return run_prop41(args.N, aw_context(args))


def cmd_suite_cor43(args) -> SuiteResult:
    from semiclassical.suites import run_cor43

    return run_cor43(aw_context(args), 6, args.n_hi)


def cmd_suite_classical(args) -> SuiteResult:
    from semiclassical.suites import run_classical_reference

    return run_classical_reference(args.N, aw_context(args))


def cmd_suite_hahn_prop66(args) -> SuiteResult:
    from semiclassical.suites import run_hahn_prop66

    hctx = hahn_context(args)
    return run_hahn_prop66(args.N, hctx, _scalar_arg(args.a, hctx.ctx), _scalar_arg(args.b, hctx.ctx))


def cmd_suite_hahn_asc(args) -> SuiteResult:
    from semiclassical.suites import run_hahn_asc

    hctx = hahn_context(args)
    return run_hahn_asc(args.N, hctx, _scalar_arg(args.r, hctx.ctx), _scalar_arg(args.s, hctx.ctx),
                        _scalar_arg(args.c, hctx.ctx))


def _band(args):
    from semiclassical.structure import extract_band

    data, ctx, fam, N = load_family(args.family)
    if ctx.operator != "askey-wilson":
        raise UsageError("band/classify need an Askey-Wilson family file")
    N = args.N = args.N if args.N_given else N
    phi = named_poly(args.phi, ctx)
    top = N + 4 if fam.limit is None else min(N + 4, fam.limit - 1)
    if N + max(phi.degree, 0) > top:
        raise UsageError(f"the family's tables support N <= {top - max(phi.degree, 0)} for this phi")
    fam.build(top)
    return ctx, fam, N, extract_band(fam, phi, N, ctx)


def cmd_band(args) -> SuiteResult:
    from semiclassical.structure import lowest_entries_nonzero

    ctx, fam, N, band = _band(args)
    res = SuiteResult("band")
    res.add(lowest_entries_nonzero(band))
    res.artifacts.update({"s": band.s, "offsets": sorted(band.offsets(), reverse=True), "rows": band.rows_json()})
    return res


def cmd_classify(args) -> SuiteResult:
    from semiclassical.opseq import moments
    from semiclassical.structure import lowest_entries_nonzero, thm31_reverse, thm32_pipeline

    ctx, fam, N, band = _band(args)
    res = SuiteResult("classify")
    res.add(lowest_entries_nonzero(band))
    u = moments(fam, 2 * N + 2 * band.phi.degree + 8)
    for c in thm31_reverse(band, fam, ctx, N, u).checks:
        res.add(c)
    r32 = thm32_pipeline(band, fam, ctx, N, u)
    for c in r32.checks:
        res.add(c)
    res.add(Check("class decided", r32.report.verdict in ("Classical", "Semiclassical"), None,
                  None if r32.report.verdict in ("Classical", "Semiclassical") else r32.report.to_dict()))
    res.artifacts.update({"s": band.s, "Phi": r32.normal.Phi, "Psi": r32.normal.Psi,
                          "classification": r32.report.to_dict()})
    return res


def cmd_regularity(args) -> SuiteResult:
    from semiclassical.pearson import regularity_thm23

    ctx = aw_context(args)
    res = SuiteResult("regularity")
    res.add(regularity_thm23(named_poly(args.phi, ctx), named_poly(args.psi, ctx), args.N, ctx))
    return res


def cmd_hahn_classify(args) -> SuiteResult:
    from semiclassical.hahn import HahnContext, thm65_classify

    data, ctx, fam, N = load_family(args.family)
    if ctx.operator != "hahn":
        raise UsageError("hahn-classify needs a family file with \"operator\": \"hahn\"")
    N = args.N = args.N if args.N_given else N
    hctx = HahnContext(ctx, ctx.t, _scalar_arg(str(data.get("omega", "0")), ctx))
    res = SuiteResult("hahn-classify")
    try:
        cls = thm65_classify(fam, _scalar_arg(args.c, ctx), N, hctx)
    except ValueError as exc:
        res.add(Check("structure relation", False, None, detail=str(exc)))
        return res
    for c in cls.checks:
        res.add(c)
    res.artifacts["classification"] = cls.summary()
    return res


COMMANDS = {
    "verify-lemma25": cmd_verify_lemma25,
    "suite-prop41": cmd_suite_prop41,
    "suite-cor43": cmd_suite_cor43,
    "suite-classical": cmd_suite_classical,
    "suite-hahn-prop66": cmd_suite_hahn_prop66,
    "suite-hahn-asc": cmd_suite_hahn_asc,
    "classify": cmd_classify,
    "band": cmd_band,
    "regularity": cmd_regularity,
    "hahn-classify": cmd_hahn_classify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("symbolic", "rational"), default="symbolic")
    common.add_argument("--t", help="rational t for Askey-Wilson mode (q = t^2)")
    common.add_argument("--q", help="rational q for Hahn mode")
    common.add_argument("--omega", default="0", help="Hahn shift w (scalar literal)")
    common.add_argument("--N", type=int, default=None, help="depth (default 40)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--no-timestamps", action="store_true", help="omit the timestamp field")

    parser = argparse.ArgumentParser(prog="semiclassical", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("verify-lemma25", parents=[common], help="operator product rules on random data")
    p.add_argument("--deg", type=int, default=8)
    p.add_argument("--trials", type=int, default=100)
    sub.add_parser("suite-prop41", parents=[common], help="class-two Askey-Wilson family")
    p = sub.add_parser("suite-cor43", parents=[common], help="second-order relation of the class-two family")
    p.add_argument("--n-hi", type=int, default=30)
    sub.add_parser("suite-classical", parents=[common], help="continuous q-Hermite reference")
    p = sub.add_parser("suite-hahn-prop66", parents=[common], help="class-one Hahn family")
    p.add_argument("--a", default="2")
    p.add_argument("--b", default="1")
    p = sub.add_parser("suite-hahn-asc", parents=[common], help="Al-Salam-Carlitz recurrence and classifier")
    p.add_argument("--r", default="2")
    p.add_argument("--s", default="-3")
    p.add_argument("--c", default="0")
    for name in ("classify", "band"):
        p = sub.add_parser(name, parents=[common], help=f"{name} a family file against phi")
        p.add_argument("--family", required=True)
        p.add_argument("--phi", required=True, help="U1, U2 or a polynomial in x")
    p = sub.add_parser("regularity", parents=[common], help="regularity of D(phi u) = S(psi u)")
    p.add_argument("--phi", required=True)
    p.add_argument("--psi", required=True)
    p = sub.add_parser("hahn-classify", parents=[common], help="classify a Hahn family file")
    p.add_argument("--family", required=True)
    p.add_argument("--c", required=True)
    return parser


def _config(args) -> dict:
    skip = {"command", "out", "no_timestamps", "N_given"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def main(argv=None) -> int:
    from semiclassical.linform import DegreeOverflowError
    from semiclassical.opseq import NotRegularError
    from semiclassical.parsing import ParseError

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.N_given = args.N is not None
    if args.N is None:
        args.N = 40
    if args.command.startswith("suite-") and args.N < 4:
        print("error: --N must be at least 4 for the suites", file=sys.stderr)
        return 2
    try:
        result = COMMANDS[args.command](args)
    except (UsageError, ParseError, DegreeOverflowError, NotRegularError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    report = {"suite": result.suite, "config": _config(args)}
    report.update({k: v for k, v in result.to_dict().items() if k != "suite"})
    if not args.no_timestamps:
        report["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    text = json.dumps(show(report), indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)

    failed = [c for c in result.checks if not c.ok]
    print(f"{result.suite}: {len(result.checks) - len(failed)}/{len(result.checks)} checks passed", file=sys.stderr)
    for c in failed:
        print(f"  FAIL {c.name}: {show(c.witness) if c.witness else c.detail}", file=sys.stderr)
    return 0 if result.ok else 1
