"""Command-line front end.

Subcommands: kernel, transform, verify, limit, norm. Output goes to stdout,
diagnostics to stderr. Exit codes: 0 ok, 1 verification failure, 2 domain or
usage error, 3 convergence failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from .errors import ConvergenceError, DirichletError, DomainError
from .jsonfmt import dumps
from .kernels import kernel, kernel_series
from .spaces import (
    BargmannDirichletParams,
    BergmanDirichletParams,
    HardyDirichletParams,
    LaurentSeries,
    dirichlet_norm,
    quadrature_inner_product,
)
from .transforms import (
    SubspaceVector,
    TransformSpec,
    apply_transform_coeff,
    apply_transform_quadrature,
    series_from_vector,
    source_rule,
)
from .verify import SuiteConfig, check_limit, format_table, reports_to_json, run_suite

EXIT_OK, EXIT_FAILED, EXIT_DOMAIN, EXIT_CONVERGENCE = 0, 1, 2, 3

KERNEL_CSV_HEADER = ["family", "xi_re", "xi_im", "value_re", "value_im", "series_re", "series_im", "abs_diff"]
TRANSFORM_CSV_HEADER = ["record", "n", "z_re", "z_im", "value_re", "value_im", "quadrature_re", "quadrature_im"]
VERIFY_CSV_HEADER = ["check_name", "measured_error", "tolerance", "passed", "gating"]
LIMIT_CSV_HEADER = ["step", "parameter", "error"]
NORM_CSV_HEADER = ["family", "norm", "quadrature_norm"]


class _UsageError(DomainError):
    pass


def complex_arg(text: str) -> complex:
    """``RE,IM`` or a bare real number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE,IM but got {text!r}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of numbers, got {text!r}")


def _space_from_args(args):
    fam = args.family
    if fam == "bergman":
        return BergmanDirichletParams(_need(args.alpha, "--alpha"), args.beta0, args.p, args.R, args.m)
    if fam == "bargmann":
        return BargmannDirichletParams(_need(args.theta, "--theta"), args.beta0, args.p, args.m)
    return HardyDirichletParams(args.beta0, args.p, args.m, args.s)


def _need(value, flag):
    if value is None:
        raise _UsageError(f"{flag} is required for this family")
    return value


def _add_space_flags(p: argparse.ArgumentParser, families=("bergman", "bargmann", "hardy")):
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta0", type=float, default=0.0)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--R", type=float, default=1.0)
    p.add_argument("--theta", type=float)
    p.add_argument("--s", type=float, default=2.0)


def _add_format(p):
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for r in rows:
        writer.writerow(["" if v is None else (repr(v) if isinstance(v, float) else v) for v in r])
    return buf.getvalue().rstrip("\n")


def _g(x: float) -> str:
    # shortest round-trip form; JSON output keeps the fixed 17 digits
    return repr(float(x))


def _read_json_input(text: str):
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        try:
            text = Path(text[1:]).read_text()
        except OSError as exc:
            raise _UsageError(f"cannot read {text[1:]}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"malformed JSON input: {exc}") from exc


def _trim(v: SubspaceVector) -> SubspaceVector:
    # the involution pads odd-length vectors; drop zeros past the last entry
    c = v.coefficients
    nz = np.flatnonzero(c)
    keep = int(nz[-1]) + 1 if nz.size else min(c.size, 1)
    return SubspaceVector(v.parity, c[:keep])


# --- subcommands --------------------------------------------------------------

def cmd_kernel(args) -> int:
    space = _space_from_args(args)
    if not args.xi:
        raise _UsageError("give at least one --xi")
    rows = []
    for xi in args.xi:
        value = kernel(xi, space)
        series = kernel_series(xi, space, args.truncation) if args.series else None
        rows.append((xi, value, series))
    if args.format == "json":
        out = []
        for xi, v, s in rows:
            rec = {"family": args.family, "xi": xi, "value": v}
            if s is not None:
                rec["series"] = s
                rec["abs_diff"] = abs(v - s)
            out.append(rec)
        print(dumps(out))
    elif args.format == "csv":
        print(_csv(KERNEL_CSV_HEADER, [
            (args.family, xi.real, xi.imag, v.real, v.imag,
             None if s is None else s.real, None if s is None else s.imag,
             None if s is None else abs(v - s)) for xi, v, s in rows]))
    else:
        for xi, v, s in rows:
            line = f"K({_cfmt(xi)}) = {_cfmt(v)}"
            if s is not None:
                line += f"   series = {_cfmt(s)}   |diff| = {abs(v - s):.3e}"
            print(line)
    return EXIT_OK


def _cfmt(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return _g(z.real)
    return f"{_g(z.real)}{'+' if z.imag >= 0 else '-'}{_g(abs(z.imag))}i"


def cmd_transform(args) -> int:
    spec = TransformSpec(args.family, args.kind, args.p, args.q, args.beta0, args.alpha, args.theta)
    obj = _read_json_input(args.input)
    if not isinstance(obj, dict):
        raise _UsageError("input must be a JSON object")
    if "parity" in obj:
        try:
            coef = [complex(*c) if isinstance(c, list) else complex(c) for c in obj["coefficients"]]
        except (TypeError, ValueError, KeyError) as exc:
            raise _UsageError(f"bad vector JSON: {exc}") from exc
        current = SubspaceVector(obj["parity"], coef)
    else:
        current = LaurentSeries.from_json(obj)
    source = current
    for _ in range(args.repeat):
        current = apply_transform_coeff(spec, current)
    if isinstance(current, SubspaceVector):
        current = _trim(current)
    quad_vals = []
    if args.z:
        if args.repeat != 1:
            raise _UsageError("--z evaluation needs --repeat 1")
        f = source if isinstance(source, LaurentSeries) else series_from_vector(source, spec, spec.p)
        g = current if isinstance(current, LaurentSeries) else series_from_vector(current, spec, spec.q)
        rule = source_rule(spec, args.n_radial, args.n_angular)
        quad_vals = [(z, g(z), apply_transform_quadrature(spec, f, z, rule)) for z in args.z]
    if args.format == "json":
        out = {"spec": spec.to_json(), "repeat": args.repeat, "output": current.to_json()}
        if quad_vals:
            out["evaluations"] = [{"z": z, "coefficient_path": a, "quadrature_path": b} for z, a, b in quad_vals]
        print(dumps(out))
    elif args.format == "csv":
        rows = []
        if isinstance(current, LaurentSeries):
            items = list(current.items())
        else:
            items = list(zip(current.basis_indices().tolist(), current.coefficients))
        for n, c in items:
            rows.append(("coefficient", n, None, None, c.real, c.imag, None, None))
        for z, a, b in quad_vals:
            rows.append(("evaluation", None, z.real, z.imag, a.real, a.imag, b.real, b.imag))
        print(_csv(TRANSFORM_CSV_HEADER, rows))
    else:
        print(f"spec: {dumps(spec.to_json())}")
        print(f"output: {dumps(current.to_json())}")
        for z, a, b in quad_vals:
            print(f"Tf({_cfmt(z)}) = {_cfmt(a)}   quadrature = {_cfmt(b)}   |diff| = {abs(a - b):.3e}")
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = SuiteConfig(seed=args.seed, tolerance_override=args.tolerance, advisory=args.advisory)
    reports = run_suite(cfg)
    if args.format == "json":
        print(reports_to_json(reports, include_runtime=args.timings))
    elif args.format == "csv":
        print(_csv(VERIFY_CSV_HEADER, [(r.check_name, r.measured_error, r.tolerance, r.passed, r.gating)
                                       for r in reports]))
    else:
        print(format_table(reports))
        failed = sum(1 for r in reports if r.gating and not r.passed)
        print(f"{len(reports)} checks, {failed} failed")
    ok = all(r.passed for r in reports if r.gating)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_limit(args) -> int:
    xi = args.xi[0] if args.xi else complex(0.5)
    if args.kind == "bargmann":
        params = BargmannDirichletParams(args.theta if args.theta is not None else 1.0, args.beta0, args.p, args.m)
        seq = args.sequence or [5.0, 10.0, 20.0, 40.0, 100.0]
    else:
        params = HardyDirichletParams(args.beta0, args.p, args.m)
        seq = args.sequence or [-0.9, -0.99, -0.999]
    rep = check_limit(args.kind, xi, params, seq, tolerance=args.tolerance)
    errors = rep.parameters["errors"]
    if args.format == "json":
        print(reports_to_json([rep]))
    elif args.format == "csv":
        print(_csv(LIMIT_CSV_HEADER, [(i, s, e) for i, (s, e) in enumerate(zip(seq, errors))]))
    else:
        label = "R" if args.kind == "bargmann" else "alpha"
        for s, e in zip(seq, errors):
            print(f"{label} = {_g(s):>8}   error = {e:.6e}")
        print("PASS" if rep.passed else f"FAIL {rep.note}".rstrip())
    return EXIT_OK if rep.passed else EXIT_FAILED


def cmd_norm(args) -> int:
    space = _space_from_args(args)
    f = LaurentSeries.from_json(_read_json_input(args.input))
    value = dirichlet_norm(f, space)
    quad = None
    if args.quadrature:
        if args.family == "hardy":
            raise _UsageError("--quadrature covers the bergman and bargmann families")
        quad = abs(quadrature_inner_product(f, f, space)) ** 0.5
    if args.format == "json":
        rec = {"family": args.family, "norm": value}
        if quad is not None:
            rec["quadrature_norm"] = quad
        print(dumps(rec))
    elif args.format == "csv":
        print(_csv(NORM_CSV_HEADER, [(args.family, value, quad)]))
    else:
        print(f"norm = {_g(value)}" + ("" if quad is None else f"   quadrature = {_g(quad)}"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dirichlet-rkhs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kernel", help="evaluate a reproducing kernel at xi = z conj(w)")
    _add_space_flags(k)
    k.add_argument("--xi", type=complex_arg, action="append", default=[], metavar="RE,IM")
    k.add_argument("--series", action="store_true", help="also sum the coefficient series")
    k.add_argument("--truncation", type=int, default=800)
    _add_format(k)
    k.set_defaults(func=cmd_kernel)

    t = sub.add_parser("transform", help="apply a Segal-Bargmann transform to a series or vector")
    t.add_argument("--family", choices=("disk", "fock"), required=True)
    t.add_argument("--kind", required=True, help="full|even-even|odd-odd|even-odd|involution or D|G|J|S|T")
    t.add_argument("--p", type=int, default=0)
    t.add_argument("--q", type=int, default=0)
    t.add_argument("--alpha", type=float)
    t.add_argument("--theta", type=float)
    t.add_argument("--beta0", type=float, default=0.0)
    t.add_argument("--input", required=True, help="inline JSON, @file, or - for stdin")
    t.add_argument("--repeat", type=int, default=1, help="apply the transform this many times")
    t.add_argument("--z", type=complex_arg, action="append", default=[], metavar="RE,IM")
    t.add_argument("--n-radial", type=int, default=32)
    t.add_argument("--n-angular", type=int, default=128)
    _add_format(t)
    t.set_defaults(func=cmd_transform)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tolerance", type=float, help="replace every check's tolerance")
    v.add_argument("--advisory", action="store_true",
                   help="also report reference closed forms that disagree with their defining sums")
    v.add_argument("--timings", action="store_true", help="include runtime_ms in JSON output")
    _add_format(v)
    v.set_defaults(func=cmd_verify)

    lim = sub.add_parser("limit", help="scan the Bargmann (R -> inf) or Hardy (alpha -> -1) limit")
    lim.add_argument("--kind", choices=("bargmann", "hardy"), required=True)
    lim.add_argument("--theta", type=float)
    lim.add_argument("--beta0", type=float, default=0.0)
    lim.add_argument("--p", type=int, default=0)
    lim.add_argument("--m", type=int, default=0)
    lim.add_argument("--xi", type=complex_arg, action="append", default=[], metavar="RE,IM")
    lim.add_argument("--sequence", type=_float_list, help="comma-separated R or alpha values")
    lim.add_argument("--tolerance", type=float, default=1e-2)
    _add_format(lim)
    lim.set_defaults(func=cmd_limit)

    n = sub.add_parser("norm", help="Dirichlet norm of a Laurent series")
    _add_space_flags(n)
    n.add_argument("--input", required=True, help="series JSON inline, @file, or - for stdin")
    n.add_argument("--quadrature", action="store_true", help="also integrate by quadrature")
    _add_format(n)
    n.set_defaults(func=cmd_norm)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConvergenceError as exc:
        print(f"convergence error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (DomainError, DirichletError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
