"""Command-line front end.

Every command prints one JSON report ``{command, input_digest, verdict,
details}`` and exits with 0 (condition holds), 1 (a mathematical condition
failed) or 2 (bad input).
"""

import argparse
import json
import random
import sys

from . import serialize as ser
from .bivector import (
    Component,
    FiberPoint,
    component_of,
    fiber_is_degenerate,
    local_fiber_dimension,
    reduced_dimension,
)
from .connection import check_diagram
from .errors import ConstraintViolationError, InconsistencyError, SpecError
from .morphism import check_homomorphism, is_valid_morphism, psi_forward, psi_inverse
from .strata import (
    OddVectorSystem,
    check_k3_morphism,
    classify_stratum,
    jacobian_dimension_estimate,
    sample_stratum,
    stratum_report,
    tangent_dimension,
    wedge_matrix,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _report(command, inputs, verdict, details):
    return {"command": command, "input_digest": ser.digest(inputs), "verdict": verdict, "details": details}


def cmd_verify(args):
    raw = ser.load_file(args.spec)
    d = ser.pullback_from_json(raw, k_override=args.k)
    inputs = {"spec": ser.pullback_to_json(d), "degree_bound": args.degree_bound}
    details = {"k": d.k, "n": d.n, "degree_bound": args.degree_bound}
    if d.k == 3:
        report = check_k3_morphism(d, args.degree_bound)
        details["failing_pairs"] = [list(p) for p in report.failing_pairs]
    else:
        report = check_homomorphism(d, args.degree_bound)
    details["violation_count"] = len(report)
    details["violations"] = [ser.violation_to_json(v) for v in report]
    if d.k == 2:
        cert = is_valid_morphism(d)
        details["certificate"] = {
            "valid": cert.valid,
            "dependent": cert.dependent,
            "even_zero": cert.even_zero,
            "failures": list(cert.failures),
        }
    verdict = "homomorphism" if report.ok else "not-a-homomorphism"
    return _report("verify", inputs, verdict, details), EXIT_OK if report.ok else EXIT_FAIL


def cmd_param(args):
    raw = ser.load_file(args.spec)
    if args.direction == "forward":
        d = ser.pullback_from_json(raw)
        inputs = {"spec": ser.pullback_to_json(d), "direction": "forward"}
        try:
            c = psi_forward(d)
        except ConstraintViolationError as exc:
            return _report("param", inputs, "constraint-violation", {"error": str(exc)}), EXIT_FAIL
        return _report("param", inputs, "ok", {"classifying_point": ser.classifying_point_to_json(c)}), EXIT_OK
    phi, psi1, psi2 = ser.classifying_point_from_json(raw)
    inputs = {
        "point": {"phi": [ser.fmt(x) for x in phi], "psi1": [ser.fmt(x) for x in psi1], "psi2": [ser.fmt(x) for x in psi2]},
        "direction": "inverse",
    }
    try:
        d = psi_inverse((phi, psi1, psi2))
    except ConstraintViolationError as exc:
        return _report("param", inputs, "constraint-violation", {"error": str(exc)}), EXIT_FAIL
    return _report("param", inputs, "ok", {"morphism": ser.pullback_to_json(d)}), EXIT_OK


def cmd_classify(args):
    raw = ser.load_file(args.spec)
    d = ser.pullback_from_json(raw)
    inputs = {"spec": ser.pullback_to_json(d)}
    s = OddVectorSystem.from_pullback(d)
    r = classify_stratum(s)
    # the input system is itself a rank-r point, so no sampling is needed
    jac = tangent_dimension(s.vectors, r) if r < min(d.k, d.n) else None
    report = stratum_report(d.k, d.n, r, jac)
    pattern = [{"pair": list(p), "zero": b.is_zero()} for p, b in sorted(wedge_matrix(s).items())]
    details = {"r": r, "wedge_zero_pattern": pattern, "stratum": report.to_dict()}
    return _report("classify", inputs, "classified", details), EXIT_OK


def cmd_fiber(args):
    n, samples, seed = args.n, args.samples, args.seed
    inputs = {"n": n, "samples": samples, "seed": seed}
    rng = random.Random(f"fiber:{n}:{seed}")

    def rand_nonzero_vec():
        while True:
            v = [rng.randint(-5, 5) for _ in range(n)]
            if any(v):
                return v

    points = []
    for _ in range(samples):
        points.append(FiberPoint([0] * n, rand_nonzero_vec()))
        v = rand_nonzero_vec()
        lam = rng.randint(-5, 5)
        points.append(FiberPoint(v, [lam * x for x in v]))
    dims = {"A": [], "B": []}
    for p in points:
        label = component_of(p).label
        key = "A" if label is Component.A else "B"
        dims[key].append(local_fiber_dimension(p))
    observed = sorted(set(dims["A"]) | set(dims["B"]))
    degenerate = fiber_is_degenerate(n)
    details = {
        "n": n,
        "expected_local_dimension": n + 1,
        "observed_dimensions": {"A": sorted(set(dims["A"])), "B": sorted(set(dims["B"]))},
        "origin_dimension": local_fiber_dimension(FiberPoint([0] * n, [0] * n)),
        "reduced_dimension": reduced_dimension(n),
        "degenerate_case": degenerate,
    }
    if degenerate:
        details["note"] = "n=1: no minor equations, the fiber is all of R^2"
    ok = observed == [n + 1]
    return _report("fiber", inputs, "ok" if ok else "dimension-mismatch", details), EXIT_OK if ok else EXIT_FAIL


def cmd_diagram(args):
    d = ser.pullback_from_json(ser.load_file(args.spec))
    c = ser.connection_from_json(ser.load_file(args.connection))
    if c.n != d.n:
        raise SpecError(f"connection is on R^{c.n} but the morphism is on R^{d.n}", "$.n")
    inputs = {"spec": ser.pullback_to_json(d), "connection": ser.connection_to_json(c), "degree_bound": args.degree_bound}
    if d.k != 2:
        raise SpecError("diagram needs a k=2 morphism", "$.k")
    try:
        result = check_diagram(c, d, args.degree_bound)
    except ConstraintViolationError as exc:
        return _report("diagram", inputs, "not-a-morphism", {"error": str(exc)}), EXIT_FAIL
    details = {
        "F_lhs": ser.operator_to_json(result.lhs.F_op),
        "F_rhs": ser.operator_to_json(result.rhs.F_op),
        "evaluations": [
            {"f": str(f), "exponents": list(next(iter(f.terms))), "lhs": ser.fmt(a), "rhs": ser.fmt(b)}
            for f, a, b, _ in result.evaluations
        ],
        "mismatch_count": len(result.mismatches),
    }
    verdict = "commutes" if result else "does-not-commute"
    return _report("diagram", inputs, verdict, details), EXIT_OK if result else EXIT_FAIL


def cmd_strata_dim(args):
    k, n, r = args.k, args.n, args.r
    if not 0 <= r <= min(k, n):
        raise SpecError(f"rank {r} impossible for a {k}x{n} system", "--r")
    inputs = {"k": k, "n": n, "r": r, "samples": args.samples, "seed": args.seed}
    jac = None
    if r < min(k, n):
        if args.seed is None:
            raise SpecError("--seed is required when r < min(k, n) (Jacobian sampling)", "--seed")
        try:
            jac = jacobian_dimension_estimate(k, n, r, args.samples, args.seed)
        except InconsistencyError as exc:
            return _report("strata-dim", inputs, "inconsistent", {"error": str(exc)}), EXIT_FAIL
    report = stratum_report(k, n, r, jac)
    agree = jac is None or jac == report.oracle_dimension
    details = {"stratum": report.to_dict(), "oracles_agree": agree}
    if args.seed is not None:
        details["example_point"] = [[ser.fmt(x) for x in row] for row in sample_stratum(k, n, r, args.seed).vectors]
    return _report("strata-dim", inputs, "ok" if agree else "oracle-disagreement", details), EXIT_OK if agree else EXIT_FAIL


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="superhom", description="Exact checks for morphisms R^{0|k} -> R^n.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="brute-force homomorphism check of a morphism spec")
    p.add_argument("spec")
    p.add_argument("--degree-bound", type=_positive, default=2)
    p.add_argument("--k", type=_positive, default=None, help="treat the morphism as having this many odd generators")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("param", help="classifying point of a k=2 morphism, or its inverse")
    p.add_argument("spec")
    p.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("classify", help="rank stratum of the odd vectors")
    p.add_argument("spec")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fiber", help="sample fiber points and check local dimensions")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--samples", type=_positive, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("diagram", help="check the connection/Hessian diagram")
    p.add_argument("spec")
    p.add_argument("connection")
    p.add_argument("--degree-bound", type=_positive, default=2)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("strata-dim", help="compare the two stratum dimension oracles")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--samples", type=_positive, default=100)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_strata_dim)
    return parser


def run(argv=None, stdout=None):
    """Run a command; returns (exit code, report dict or None)."""
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        report, code = args.func(args)
    except SpecError as exc:
        report = {"command": args.command, "input_digest": None, "verdict": "input-error", "details": {"error": str(exc), "where": exc.where}}
        code = EXIT_INPUT
    except (ValueError, IndexError, TypeError) as exc:
        report = {"command": args.command, "input_digest": None, "verdict": "input-error", "details": {"error": str(exc), "where": None}}
        code = EXIT_INPUT
    stdout.write(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    return code, report


def main(argv=None):
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
