"""Command line front end.

Exit status: 0 when everything checked holds, 1 when a mathematical property
fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import checks
from .errors import QuatSwitchError
from .field import parse_field
from .linkinv import (invariants, parse_braid, parse_gauss, presentation_from_braid,
                      presentation_from_gauss)
from .quat2 import Mat2
from .solver import HyperbolicParams, classify_pair, enumerate_solutions, hyperbolic_family
from .switch import (Switch, Tag, fe_residual, invertibility_report, make_noncommutative_switch,
                     yang_baxter_check)

OK, FALSIFIED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, out: Optional[str] = None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _load_switch(path: str) -> Switch:
    try:
        return Switch.from_json(_load_json(path))
    except (KeyError, ValueError) as exc:
        raise UsageError(f"{path} is not a switch file: {exc}") from exc


def cmd_verify_lemmas(args) -> int:
    field = parse_field(args.field)
    report = checks.verify_all(field, args.samples, args.seed, args.exhaustive)
    bad = checks.failing(report)
    _emit({"field": str(field), "samples": "all" if args.exhaustive else args.samples,
           "seed": args.seed, **report, "ok": not bad})
    return FALSIFIED if bad else OK


def cmd_enumerate(args) -> int:
    try:
        report = enumerate_solutions(args.p, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(report.to_json(), args.out)
    return FALSIFIED if report.unresolved else OK


def cmd_generate(args) -> int:
    field = parse_field(args.field)
    params = HyperbolicParams.of(field, args.a0, args.a1, args.a3, args.b1, args.b3)
    a, b = hyperbolic_family(params)
    _emit(make_noncommutative_switch(a, b).to_json(), args.out)
    return OK


def cmd_check(args) -> int:
    s = _load_switch(args.switch)
    result = {"tag": s.tag.value}
    ok = True
    if s.tag is Tag.NONCOMMUTATIVE:
        try:
            fe_ok = fe_residual(s.A, s.B).is_solution
            rebuilt = make_noncommutative_switch(s.A, s.B) if fe_ok else None
            fe_ok = fe_ok and (rebuilt.C, rebuilt.D) == (s.C, s.D)
        except QuatSwitchError:
            fe_ok = False
        result["fe"] = fe_ok
        ok &= fe_ok
    result["ybe"] = yang_baxter_check(s)
    inv = invertibility_report(s)
    result["invertibility"] = {k: v for k, v in vars(inv).items()}
    ok &= result["ybe"] and inv.all_true()
    result["ok"] = bool(ok)
    _emit(result)
    return OK if ok else FALSIFIED


def _diagram_lines(args) -> List[str]:
    if args.input:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from exc
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        return [ln for ln in lines if ln]
    return [args.gauss if args.gauss is not None else args.braid]


def _presentation(s: Switch, line: str, args):
    if args.braid is not None or (args.input and line[0] not in "OU"):
        if not args.strands:
            raise UsageError("--braid needs --strands")
        word = parse_braid(line, args.strands)
        return presentation_from_braid(s, word), f"braid {args.strands}: {word}"
    code = parse_gauss(line)
    return presentation_from_gauss(s, code), str(code)


def cmd_invariant(args) -> int:
    if sum(x is not None for x in (args.gauss, args.braid, args.input)) != 1:
        raise UsageError("give exactly one of --gauss, --braid, --input")
    s = _load_switch(args.switch)
    results = []
    for line in _diagram_lines(args):
        pres, label = _presentation(s, line, args)
        results.append(invariants(pres, args.depth).to_json(label))
    _emit(results[0] if len(results) == 1 and not args.input else results)
    return OK


def cmd_classify(args) -> int:
    obj = _load_json(args.pair)
    try:
        field = parse_field(obj["field"])
        a, b = Mat2.from_json(obj["A"], field), Mat2.from_json(obj["B"], field)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"{args.pair} is not a pair file: {exc}") from exc
    c = classify_pair(a, b)
    _emit({"field": str(field), **c.to_json()})
    return FALSIFIED if c.kind.value == "Unresolved" else OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatswitch",
        description="Exact split-quaternion switches and virtual knot invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-lemmas", help="sweep the quaternion identities and dependency lemmas")
    p.add_argument("--field", default="q", help="q, fp:<p> or qt")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true", help="enumerate all inputs (prime fields)")
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser("enumerate", help="census of solutions over F_p")
    p.add_argument("--p", type=int, required=True, choices=(3, 5, 7))
    p.add_argument("--out")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("generate", help="build the switch of a canonical hyperbolic pair")
    p.add_argument("--field", default="q")
    for name in ("a0", "a1", "a3", "b1", "b3"):
        p.add_argument(f"--{name}", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="verify a switch file")
    p.add_argument("--switch", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariant", help="rank and elementary ideals of a diagram")
    p.add_argument("--switch", required=True)
    p.add_argument("--gauss")
    p.add_argument("--braid")
    p.add_argument("--strands", type=int)
    p.add_argument("--input", help="file with one diagram per line, '#' comments")
    p.add_argument("--depth", type=int, default=2,
                   help="number of ideals E_0.. (minor count grows quickly)")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("classify", help="classify a pair (A, B) from a JSON file")
    p.add_argument("--pair", required=True)
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, QuatSwitchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
