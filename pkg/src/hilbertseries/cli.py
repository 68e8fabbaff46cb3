"""Command-line front end. JSON goes to stdout, diagnostics to stderr."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Any, Dict, List, Optional, Sequence

from . import catalog
from .bigraded import decide_positive_depth, find_st_violation, sigma
from .decider import decide_hilbert
from .formats import (
    ParseError,
    decomposition_from_json,
    decomposition_to_json,
    format_series,
    parse_series,
    series_from_json,
    series_to_json,
)
from .polynomial import format_multipolynomial, hilbert_polynomial
from .semigroup import SemigroupSpec, check_star, fundamental_couples, is_hilbert_series_ns
from .series import Box, RationalSeries, verify_decomposition

EXIT_OK, EXIT_ERROR, EXIT_NO, EXIT_INCONCLUSIVE = 0, 2, 3, 4

_NAMED = {
    "FIX1": lambda: catalog.fix1(),
    "FIX2": lambda: catalog.fix2(),
}


class CliError(Exception):
    pass


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise CliError(f"expected comma-separated integers, got {text!r}")


def _parse_box(text: str) -> Box:
    if ":" not in text:
        raise CliError("box must look like 'x0,y0:x1,y1'")
    lo, hi = text.split(":", 1)
    lo, hi = _int_list(lo), _int_list(hi)
    if len(lo) != len(hi):
        raise CliError("box corners have different lengths")
    try:
        return Box(tuple(lo), tuple(hi))
    except ValueError as exc:
        raise CliError(str(exc))


def _guess_nvars(text: str) -> int:
    idx = [int(m) for m in re.findall(r"t(\d+)", text)]
    vec = re.findall(r"\^\s*\[([^\]]*)\]", text)
    if vec:
        return len(vec[0].split(","))
    if idx:
        return max(idx)
    return 1


def _named(text: str) -> Optional[RationalSeries]:
    key = text.strip().upper()
    if key in _NAMED:
        return _NAMED[key]()
    m = re.fullmatch(r"FIX3_(\d+)", key)
    if m:
        return catalog.fix3(int(m.group(1)))
    m = re.fullmatch(r"LAMBDA_(\d+)", key)
    if m:
        return catalog.lambda_family(int(m.group(1)))
    return None


def load_series(args) -> RationalSeries:
    if getattr(args, "json_file", None):
        with open(args.json_file) as fh:
            data = json.load(fh)
        if "series" in data and isinstance(data["series"], dict):
            data = data["series"]
        H = series_from_json(data)
    elif getattr(args, "series", None):
        H = _named(args.series)
        if H is None:
            n = args.nvars or _guess_nvars(args.series)
            H = parse_series(args.series, n)
    else:
        raise CliError("give a series with --series or --json-file")
    if args.nvars and H.nvars != args.nvars:
        raise CliError(f"series has {H.nvars} variables, --nvars says {args.nvars}")
    return H


def _witness_json(w) -> Optional[Dict[str, Any]]:
    if w is None:
        return None
    return {"I": [i + 1 for i in w.I], "u": list(w.u), "r": list(w.r), "coeff": str(w.coeff)}


def _sequence_json(U, H) -> Dict[str, Any]:
    return {"sequence": [list(u) for u in U], "sigma": str(sigma(H, U))}


def _grading(args, H: RationalSeries):
    if args.m:
        m = _int_list(args.m)
        if len(m) != H.nvars:
            raise CliError(f"--m has {len(m)} entries for {H.nvars} variables")
        return tuple(m)
    return H.reduced().d


# -- commands ------------------------------------------------------------------------------------

def cmd_expand(args):
    H = load_series(args)
    if not args.box:
        raise CliError("expand needs --box")
    box = _parse_box(args.box)
    if box.nvars != H.nvars:
        raise CliError("box dimension does not match the series")
    coeffs = H.expand(box)
    return {
        "series": format_series(H),
        "box": {"lo": list(box.lo), "hi": list(box.hi)},
        "coefficients": [{"e": list(a), "c": str(coeffs[a])} for a in sorted(coeffs)],
    }, None


def cmd_hilbert_poly(args):
    H = load_series(args)
    res = hilbert_polynomial(H)
    return {
        "polynomial": format_multipolynomial(res.p),
        "terms": [{"r": list(r), "c": str(c)} for r, c in sorted(res.p.items())],
        "binomial": [{"k": list(k), "c": str(c)} for k, c in sorted(res.binomial().items())],
        "threshold": list(res.threshold),
    }, None


def cmd_restrict(args):
    H = load_series(args)
    I = [i - 1 for i in _int_list(args.I or "")]
    if any(i < 0 or i >= H.nvars for i in I):
        raise CliError("--I indices are 1-based and must name variables of the series")
    if not args.u:
        raise CliError("restrict needs --u")
    u = tuple(_int_list(args.u))
    if len(u) != H.nvars:
        raise CliError("--u has the wrong length")
    R = H.restrict(I, u)
    return {"series": format_series(R), "json": series_to_json(R)}, None


def _decide_json(H, args):
    out = decide_hilbert(H, _grading(args, H))
    data: Dict[str, Any] = {"verdict": out.verdict}
    if out.is_yes:
        data["certificate"] = decomposition_to_json(out.certificate)
    else:
        data["reason"] = out.reason
        data["witness"] = _witness_json(out.witness)
    return data, out.is_yes


def cmd_check_hilbert(args):
    data, ok = _decide_json(load_series(args), args)
    return data, ok


def cmd_decompose(args):
    data, ok = _decide_json(load_series(args), args)
    return data, ok


def cmd_verify(args):
    H = load_series(args)
    if not args.certificate:
        raise CliError("verify needs --certificate FILE")
    with open(args.certificate) as fh:
        data = json.load(fh)
    if "certificate" in data:
        data = data["certificate"]
    D = decomposition_from_json(data, H.nvars)
    ok = verify_decomposition(H, D)
    return {"verdict": "yes" if ok else "no", "terms": len(D)}, ok


def cmd_depth2(args):
    H = load_series(args)
    box = _parse_box(args.box) if args.box else None
    out = decide_positive_depth(H, _grading(args, H), box)
    data: Dict[str, Any] = {"verdict": out.verdict}
    if out.certificate is not None:
        data["certificate"] = decomposition_to_json(out.certificate)
    if out.witness is not None:
        data["witness"] = _sequence_json(out.witness, H)
    ok = None if out.verdict == "inconclusive" else out.positive
    return data, ok


def cmd_check_st(args):
    H = load_series(args)
    box = _parse_box(args.box) if args.box else None
    U = find_st_violation(H, box)
    if U is None:
        return {"verdict": "pass"}, True
    return {"verdict": "fail", "witness": _sequence_json(U, H)}, False


def _semigroup(args) -> SemigroupSpec:
    if args.alpha is None or args.beta is None:
        raise CliError("give --alpha and --beta")
    try:
        return SemigroupSpec(args.alpha, args.beta)
    except ValueError as exc:
        raise CliError(str(exc))


def cmd_star(args):
    s = _semigroup(args)
    H = load_series(args)
    if H.nvars != 1:
        raise CliError("the semigroup case is univariate")
    if not is_hilbert_series_ns(H, s):
        raise CliError("not a Hilbert series over this semigroup ring")
    res = check_star(H, s, args.nmax)
    data: Dict[str, Any] = {"verdict": res.verdict}
    if res.failure:
        f = res.failure
        data["witness"] = {"n": f.n, "couple": f.couple.to_json(), "lhs": str(f.lhs), "rhs": str(f.rhs)}
    return data, res.passed


def cmd_couples(args):
    s = _semigroup(args)
    return {"alpha": s.alpha, "beta": s.beta, "couples": [c.to_json() for c in fundamental_couples(s)]}, None


def cmd_worked_examples(args):
    results = catalog.worked_examples()
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.detail}", file=sys.stderr)
    ok = all(r.passed for r in results)
    return {
        "passed": sum(r.passed for r in results),
        "total": len(results),
        "results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }, ok


COMMANDS = {
    "expand": (cmd_expand, "coefficients on a box", ()),
    "hilbert-poly": (cmd_hilbert_poly, "Hilbert polynomial and its threshold", ()),
    "restrict": (cmd_restrict, "restriction to u + N^I", ()),
    "check-hilbert": (cmd_check_hilbert, "decide whether a series is a Hilbert series", ()),
    "decompose": (cmd_decompose, "Hilbert decomposition certificate", ()),
    "verify": (cmd_verify, "check a decomposition against a series", ()),
    "depth2": (cmd_depth2, "positive Hilbert depth, bigraded case", ()),
    "check-st": (cmd_check_st, "search for a violated staircase inequality", ()),
    "star": (cmd_star, "couple inequalities over <alpha, beta>", ("check-star",)),
    "couples": (cmd_couples, "fundamental couples of <alpha, beta>", ("fundamental-couples",)),
    "paper-suite": (cmd_worked_examples, "run the bundled worked examples", ()),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbertseries", description="Exact Hilbert series tools.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--series", help="rational expression in t1..tn, or FIX1, FIX2, FIX3_k, LAMBDA_k")
    common.add_argument("--json-file", help="series as JSON ({nvars, num, den})")
    common.add_argument("--nvars", type=int, help="number of variables (guessed from the expression)")
    common.add_argument("--box", help="box 'x0,y0:x1,y1'")
    common.add_argument("--m", help="grading, e.g. 3,3")
    common.add_argument("--I", help="1-based variable indices, e.g. 1,2")
    common.add_argument("--u", help="base point, e.g. 0,0,3")
    common.add_argument("--alpha", type=int)
    common.add_argument("--beta", type=int)
    common.add_argument("--nmax", type=int, help="only shifts up to nmax")
    common.add_argument("--certificate", help="decomposition JSON file")
    common.add_argument("--exit-status", action="store_true", help="exit 3 on NO/fail, 4 if inconclusive")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (fn, help_text, aliases) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, aliases=list(aliases))
        p.set_defaults(func=fn)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, ok = args.func(args)
    except (CliError, ParseError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    json.dump(data, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")
    if not args.exit_status or ok is True:
        return EXIT_OK
    if args.func is cmd_depth2 and ok is None:
        return EXIT_INCONCLUSIVE
    if ok is False:
        return EXIT_NO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
