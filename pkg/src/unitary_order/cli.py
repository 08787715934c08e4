"""Command-line front end.

Exit codes: 0 the relation holds (or the command succeeded), 1 it fails,
2 bad input. Results are printed as JSON on standard output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .calculus import OCFunction, OMFunction, apply_oc, apply_om
from .core import DimensionMismatchError, DomainError, as_hermitian
from .family import family_leq, olson_consistency, spectral_family
from .generators import KINDS, GeneratorSpec, generate
from .io import MatrixFormatError, matrix_to_json, read_matrix
from .order import leq_u, loewner_leq
from .suite import VERIFIERS, TrialConfig, run_all

INPUT_ERRORS = (MatrixFormatError, DimensionMismatchError, DomainError, ValueError, OSError, KeyError)


class InputError(Exception):
    pass


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _pair(args):
    return read_matrix(args.A), read_matrix(args.B)


def cmd_check(args) -> int:
    A, B = _pair(args)
    if args.relation == "loewner":
        rep = loewner_leq(A, B, args.tol)
        _emit({"relation": "loewner", "holds": rep.holds, "min_eig": rep.min_eig, "scale": rep.scale, "gray": rep.gray})
        return 0 if rep.holds else 1
    if args.relation == "lequ":
        cert = leq_u(A, B, args.tol)
        _emit(cert.to_json())
        return 0 if cert.verdict else 1
    if args.relation == "olson":
        rep = olson_consistency(A, B, args.n_max, args.tol)
        _emit(
            {
                "relation": "olson",
                "power_holds": rep.power_holds,
                "family_holds": rep.family_holds,
                "first_power_failure": rep.first_power_failure,
                "cell": rep.cell,
            }
        )
        return 0 if rep.power_holds and rep.family_holds else 1
    FA, FB = spectral_family(A), spectral_family(B)
    cmp = family_leq(FA, FB, tol=args.tol)
    _emit(
        {
            "relation": "family",
            "holds": cmp.holds,
            "grid": list(cmp.grid),
            "per_lambda": list(cmp.per_lambda),
        }
    )
    return 0 if cmp.holds else 1


def cmd_witness(args) -> int:
    A, B = _pair(args)
    cert = leq_u(A, B, args.tol)
    if not cert.verdict:
        _emit({"verdict": False, "violation_index": cert.violation_index})
        return 1
    _emit(matrix_to_json(cert.witness.data))
    return 0


def _load_fn(spec: str):
    path = Path(spec)
    text = path.read_text() if path.exists() else spec
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"function spec is not JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise MatrixFormatError("function spec must be a JSON object")
    return OMFunction.from_json(obj) if "kind" in obj else OCFunction.from_json(obj)


def cmd_apply(args) -> int:
    fn = _load_fn(args.fn)
    A = read_matrix(args.A)
    out = apply_om(fn, A) if isinstance(fn, OMFunction) else apply_oc(fn, A)
    _emit(matrix_to_json(out.data))
    return 0


def cmd_spectral_family(args) -> int:
    A = as_hermitian(read_matrix(args.A))
    _emit(spectral_family(A).to_json(verbose=args.verbose))
    return 0


def cmd_gen(args) -> int:
    spec = GeneratorSpec(
        args.kind,
        args.dim,
        args.seed,
        n0=args.n0,
        rank=args.rank,
        weights=tuple(args.weights or ()),
    )
    out = generate(spec)
    if isinstance(out, tuple):
        obj = {"A": matrix_to_json(np.asarray(out[0])), "B": matrix_to_json(np.asarray(out[1]))}
    else:
        obj = matrix_to_json(np.asarray(out))
    if args.out:
        Path(args.out).write_text(json.dumps(obj) + "\n")
    else:
        _emit(obj)
    return 0


def cmd_suite(args) -> int:
    if args.theorem == "all":
        names = list(VERIFIERS)
    elif args.theorem in VERIFIERS:
        names = [args.theorem]
    else:
        raise InputError(f"unknown theorem id {args.theorem!r}; choose from all, {', '.join(VERIFIERS)}")
    cfg = TrialConfig(
        dim=args.dim,
        trials=args.trials,
        seed=args.seed,
        n_max=args.n_max,
        min_dim=args.min_dim,
        jobs=args.jobs,
    )
    reports = run_all(cfg, names)
    payload = [r.to_json() for r in reports]
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2) + "\n")
    summary = [
        {"theorem": r.theorem, "status": r.status, "trials": r.trials, "premise_hits": r.premise_hits,
         "failures": len(r.failures), "gray": r.gray}
        for r in reports
    ]
    _emit(summary if args.out else payload)
    return 0 if all(not r.failures for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="relative tolerance override")
    common.add_argument("--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="unitary-order", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="test a relation between two matrix files")
    c.add_argument("relation", choices=("loewner", "lequ", "olson", "family"))
    c.add_argument("A")
    c.add_argument("B")
    c.add_argument("--n-max", type=int, default=12)
    c.set_defaults(func=cmd_check)

    w = sub.add_parser("witness", parents=[common], help="emit U with A <= U*BU")
    w.add_argument("A")
    w.add_argument("B")
    w.set_defaults(func=cmd_witness)

    a = sub.add_parser("apply", parents=[common], help="apply an OM/OC function spec to a matrix")
    a.add_argument("fn", help="function JSON, inline or as a file path")
    a.add_argument("A")
    a.set_defaults(func=cmd_apply)

    f = sub.add_parser("spectral-family", parents=[common], help="thresholds and ranks of E_lambda(A)")
    f.add_argument("A")
    f.set_defaults(func=cmd_spectral_family)

    g = sub.add_parser("gen", parents=[common], help="generate a random matrix")
    g.add_argument("kind", choices=KINDS)
    g.add_argument("--dim", type=int, default=4)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n0", type=int, default=2)
    g.add_argument("--rank", type=int, default=1)
    g.add_argument("--weights", type=float, nargs="*")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("suite", parents=[common], help="run the seeded verification suite")
    s.add_argument("--theorem", default="all")
    s.add_argument("--dim", type=int, default=4)
    s.add_argument("--min-dim", type=int, default=None)
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--n-max", type=int, default=12)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (InputError, *INPUT_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
