"""Command-line front end.

Exit codes: 0 ok, 1 size guard hit, 2 bad input, 3 a theorem check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import verify, wire
from .constructions import Family1Spec, Family2Spec
from .errors import Falsification, GuardError
from .gf_tower import DEFAULT_GUARD_BITS, FieldTower, build_tower
from .orbit_code import is_fws_distribution, is_r_fws_distribution, orbit, weight_distribution
from .subspace import Subspace, dual, invariant_report, span_of

EXIT_OK, EXIT_GUARD, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _common(defaults: bool) -> argparse.ArgumentParser:
    """Shared flags.  Subcommand copies use SUPPRESS so either position works."""
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("tower and output")
    g.add_argument("--p", type=int, default=d(2), help="characteristic")
    g.add_argument("--e", type=int, default=d(1), help="q = p^e")
    g.add_argument("--n", type=int, default=d(4), help="extension degree over F_q")
    g.add_argument("--gpoly", default=d(None), help="defining polynomial of F_q over F_p, e.g. 'y^2+y+1'")
    g.add_argument("--hpoly", default=d(None), help="defining polynomial of F_{q^n} over F_q, e.g. 'x^4+x+1'")
    g.add_argument("--format", choices=["json", "csv", "text"], default=d("json"))
    g.add_argument("--jobs", type=int, default=d(1), help="worker processes for orbit scans")
    g.add_argument("--seed", type=int, default=d(0), help="seed for randomized batteries")
    g.add_argument("--guard-max-field-bits", type=int, default=d(DEFAULT_GUARD_BITS), help="refuse q^n above 2^bits")
    g.add_argument("--timing", action="store_true", default=d(False), help="add elapsed_ms to reports")
    return p


def _subspace_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("subspace")
    g.add_argument("--family", type=int, choices=[1, 2])
    g.add_argument("--lambda", "--lambda-code", dest="lam", help="lambda as a code or polynomial in x")
    g.add_argument("--k", type=int, help="dimension (family 1)")
    g.add_argument("--l", type=int, help="F_{q^2}-dimension of the first part (family 2)")
    g.add_argument("--b", default="1", help="scale factor")
    g.add_argument("--basis", help="comma-separated element codes or polynomials")
    g.add_argument("--basis-file", help="subspace JSON file")
    g.add_argument("--spec-file", help="family spec JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fwscodes",
        description="One-orbit cyclic subspace codes over finite fields",
        parents=[_common(True)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(False)

    sub.add_parser("tower", parents=[common], help="describe the field tower")

    for name, help_ in [
        ("weights", "distance distribution of an orbit code"),
        ("construct", "build a family or explicit subspace"),
        ("dual", "trace dual of a subspace"),
        ("decompose", "critical-pair decomposition and family match"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=help_)
        _subspace_args(sp)

    sp = sub.add_parser("classify", parents=[common], help="exhaustive FWS classification")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--cap", type=int, default=verify.DEFAULT_CAP)

    sp = sub.add_parser("verify", parents=[common], help="run a verification battery")
    sp.add_argument(
        "battery", choices=["thm-weights", "main-theorem", "zero-weights", "kneser", "invariants", "mu-sweep"]
    )
    sp.add_argument("--trials", type=int, default=1000, help="pairs per tower (kneser)")
    sp.add_argument("--count", type=int, default=500, help="random subspaces (invariants)")
    return parser


# input helpers ----------------------------------------------------------------


def _tower(args) -> FieldTower:
    g = wire.parse_poly(args.gpoly, "y") if args.gpoly else None
    h = wire.parse_poly(args.hpoly, "x") if args.hpoly else None
    return build_tower(args.p, args.e, args.n, g, h, guard_bits=args.guard_max_field_bits)


def _read_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _family_spec(args, tower: FieldTower):
    if args.spec_file:
        return wire.family_spec_from_json(tower, _read_json(args.spec_file))
    if args.family is None:
        return None
    if args.lam is None:
        raise UsageError("--family needs --lambda")
    lam = wire.parse_element(tower, args.lam)
    b = wire.parse_element(tower, args.b)
    if args.family == 1:
        if args.k is None:
            raise UsageError("family 1 needs --k")
        return Family1Spec(tower, lam, args.k, b)
    if args.l is None:
        raise UsageError("family 2 needs --l")
    return Family2Spec(tower, lam, args.l, b)


def _subspace(args, tower: FieldTower) -> tuple[Subspace, Optional[dict]]:
    spec = _family_spec(args, tower)
    if spec is not None:
        return wire.build_family(spec), wire.family_spec_to_json(spec)
    if args.basis_file:
        return wire.subspace_from_json(_read_json(args.basis_file), tower, args.guard_max_field_bits), None
    if args.basis:
        elems = [wire.parse_element(tower, x) for x in args.basis.split(",") if x.strip()]
        return span_of(tower, elems), None
    raise UsageError("give --family, --spec-file, --basis or --basis-file")


# output -------------------------------------------------------------------------


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            v = obj[key]
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (int, str)) for x in (v if isinstance(v, list) else [])):
                lines.append(f"{pad}{key}:")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}{key}: {json.dumps(v, sort_keys=True)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


def _emit(args, report: dict, csv: Optional[str] = None) -> None:
    if args.format == "csv":
        if csv is None:
            raise UsageError("--format csv is only available for weights")
        sys.stdout.write(csv)
    elif args.format == "text":
        sys.stdout.write("\n".join(_text(report)) + "\n")
    else:
        sys.stdout.write(wire.dumps(report) + "\n")


# commands -----------------------------------------------------------------------


def cmd_tower(args) -> dict:
    tower = _tower(args)
    return {
        "tower": wire.tower_to_json(tower),
        "q": tower.q,
        "order": tower.Q - 1,
        "divisors": list(tower.divisors),
        "subfield_generators": {str(t): tower.subfield(t).gamma for t in tower.divisors},
    }


def cmd_weights(args) -> tuple[dict, str]:
    tower = _tower(args)
    S, spec = _subspace(args, tower)
    if S.is_zero():
        raise UsageError("the zero subspace has no orbit code")
    C = orbit(S)
    wd = weight_distribution(C, jobs=args.jobs)
    report = {
        "tower": wire.tower_to_json(tower),
        "basis": list(S.basis),
        "distribution": wire.distribution_to_json(wd),
        "omega": {str(d): c for d, c in wd.as_dict().items()},
        "orbit_size": C.orbit_size,
        "stab_degree": C.stab_degree,
        "fws": is_fws_distribution(wd) and C.orbit_size > 1,
        "r_fws": next((r for r in range(S.k + 1) if is_r_fws_distribution(wd, r)), None),
        "min_distance": next((2 * (i + 1) for i, c in enumerate(wd.omega) if c), None),
        "invariants": invariant_report(S).as_dict(),
    }
    if spec is not None:
        report["spec"] = spec
    return report, wire.distribution_csv(wd)


def cmd_construct(args) -> dict:
    tower = _tower(args)
    S, spec = _subspace(args, tower)
    out = wire.subspace_to_json(S)
    out["codes"] = list(S.basis)
    if spec is not None:
        out["spec"] = spec
    return out


def cmd_dual(args) -> dict:
    tower = _tower(args)
    S, _ = _subspace(args, tower)
    D = dual(S)
    out = wire.subspace_to_json(D)
    out["codes"] = list(D.basis)
    return out


def cmd_decompose(args) -> dict:
    tower = _tower(args)
    S, _ = _subspace(args, tower)
    if S.is_zero():
        raise UsageError("the zero subspace cannot be decomposed")
    out = {"basis": list(S.basis), "main_theorem": verify.match_main_theorem(S).as_dict()}
    try:
        cp = verify.critical_pair_decomposition(S)
        out["critical_pair"] = cp.as_dict()
    except ValueError as exc:
        out["critical_pair"] = {"kind": "none", "diagnostic": str(exc)}
        cp = None
    if cp is not None and not cp:
        raise Falsification("a distance-2 code does not decompose", out)
    return out


def cmd_classify(args) -> dict:
    return verify.classify_fws(_tower(args), args.k, cap=args.cap)


def cmd_verify(args) -> dict:
    b = args.battery
    if b == "thm-weights":
        return verify.thm_weights_battery(jobs=args.jobs)
    if b == "main-theorem":
        return verify.main_theorem_battery()
    if b == "zero-weights":
        return verify.zero_weight_battery(jobs=args.jobs)
    if b == "kneser":
        return verify.kneser_battery(args.trials, seed=args.seed)
    if b == "invariants":
        return verify.invariant_battery(args.count, seed=args.seed)
    from .gf_tower import tower_for

    return {"battery": "mu-sweep", "towers": [verify.mu_sweep(tower_for(2, 1, n)) for n in (6, 8)], "ok": True}


COMMANDS = {
    "tower": cmd_tower,
    "weights": cmd_weights,
    "construct": cmd_construct,
    "dual": cmd_dual,
    "decompose": cmd_decompose,
    "classify": cmd_classify,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        result = COMMANDS[args.command](args)
        report, csv = result if isinstance(result, tuple) else (result, None)
        if args.timing:
            report["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
        _emit(args, report, csv)
        return EXIT_OK
    except GuardError as exc:
        sys.stderr.write(f"guard: {exc}\n")
        return EXIT_GUARD
    except Falsification as exc:
        sys.stdout.write(wire.dumps({"falsified": str(exc), "payload": exc.payload}) + "\n")
        return EXIT_FALSIFIED
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
