"""Command-line interface: ``liestrata <command> [options]``.

Exit codes: 0 ok, 2 input error, 3 invariant violation, 4 estimator
non-convergence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import catalog, matrix_lie, reports
from .algebra import LieAlgebra, jacobi_check
from .errors import ConvergenceError, InputError, InvariantViolation, LieStrataError
from .linalg import parse_scalar
from .stabilizer import analyze_point, classify_stabilizer_type
from .strata import Curve, Provenance, compute_index, coadjoint_curve, inequality_report, verify_prop1

SEED_ENV = "LIESTRATA_SEED"
DEFAULT_TOL = 1e-6


# -- inputs ------------------------------------------------------------------------

@dataclass
class Source:
    label: str
    algebra: LieAlgebra
    realization: matrix_lie.MatrixRealization | None


@dataclass
class Point:
    covector: tuple
    matrix: tuple | None


def _scalars(text: str) -> list[Fraction]:
    items = [x.strip() for x in text.split(",")]
    if not text.strip() or any(not x for x in items):
        raise InputError(f"expected a comma-separated list of rationals, got {text!r}")
    return [parse_scalar(x) for x in items]


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_source(args) -> Source:
    if args.algebra and args.catalog:
        raise InputError("give either --catalog or --algebra, not both")
    if args.algebra:
        L = LieAlgebra.from_json(_read_json(args.algebra), name=Path(args.algebra).stem)
        if not jacobi_check(L):
            raise InputError(f"{args.algebra}: structure constants violate the Jacobi identity")
        return Source(L.name, L, None)
    if not args.catalog:
        raise InputError("an algebra is required: --catalog NAME [--n N] or --algebra PATH")
    entry = catalog.make(args.catalog, args.n)
    return Source(entry.label, entry.algebra, entry.realization)


def parse_matrix(text: str, size: int | None = None):
    """``diag:a,b,..``, ``jordan:lam:p1,p2;lam:..``, ``rows:a,b;c,d`` or ``json:PATH``."""
    kind, _, body = text.partition(":")
    if kind == "diag":
        return matrix_lie.diag(_scalars(body))
    if kind == "jordan":
        blocks = []
        for part in body.split(";"):
            lam, _, sizes = part.rpartition(":")
            if not lam:
                raise InputError(f"jordan blocks are written lam:p1,p2, got {part!r}")
            blocks.append((parse_scalar(lam), tuple(int(x) for x in sizes.split(","))))
        return matrix_lie.jordan_matrix(matrix_lie.JordanType(tuple(blocks)))
    if kind == "rows":
        return matrix_lie.as_mat([_scalars(r) for r in body.split(";")])
    if kind == "json":
        return matrix_lie.matrix_from_json(_read_json(body))
    raise InputError(f"unknown matrix format {kind!r}; use diag:, jordan:, rows: or json:")


def load_point(args, src: Source, *, required: bool = True) -> Point | None:
    given = [x for x in (args.point, args.matrix_point) if x]
    if len(given) > 1:
        raise InputError("give either --point or --matrix-point, not both")
    if args.point:
        text = args.point
        if text.startswith("json:"):
            from .algebra import Covector

            mu = Covector.from_json(_read_json(text[5:])).coords
        else:
            mu = tuple(_scalars(text))
        if len(mu) != src.algebra.dim:
            raise InputError(f"point has {len(mu)} coordinates, {src.label} has dimension {src.algebra.dim}")
        m = None
        if src.realization is not None and src.realization.trace_form.is_nondegenerate():
            m = src.realization.matrix_of_covector(mu)
        return Point(mu, m)
    if args.matrix_point:
        if src.realization is None:
            raise InputError(f"{src.label} has no matrix realization; use --point")
        m = parse_matrix(args.matrix_point)
        return Point(src.realization.covector(m), m)
    if required:
        raise InputError("a point is required: --point a,b,.. or --matrix-point diag:..")
    return None


def _poly_coeffs(expr: str) -> list[Fraction]:
    import sympy

    if "." in expr:
        raise InputError(f"decimal coefficients are not exact: {expr!r}")
    t = sympy.Symbol("t")
    try:
        e = sympy.parse_expr(expr, local_dict={"t": t}, transformations="all")
        poly = sympy.Poly(sympy.expand(e), t)
    except (sympy.SympifyError, sympy.PolynomialError, SyntaxError, TypeError) as exc:
        raise InputError(f"cannot read {expr!r} as a polynomial in t") from exc
    out = []
    for c in reversed(poly.all_coeffs()):
        if not c.is_Rational:
            raise InputError(f"non-rational coefficient in {expr!r}")
        out.append(Fraction(int(c.p), int(c.q)))
    return out


def load_curve(args, src: Source) -> Curve:
    text = args.curve
    kind, _, body = text.partition(":")
    if kind == "eig":
        if src.realization is None:
            raise InputError("eig: curves need a matrix algebra")
        polys = [_poly_coeffs(e) for e in body.split(",")]
        if len(polys) != src.realization.size:
            raise InputError(f"eig: needs {src.realization.size} diagonal entries")
        deg = max(len(p) for p in polys)
        coeffs = []
        for d in range(deg):
            m = matrix_lie.diag([p[d] if d < len(p) else Fraction(0) for p in polys])
            coeffs.append(src.realization.covector(m))
        return Curve(tuple(coeffs), src.algebra)
    if kind == "coadjoint":
        point = load_point(args, src)
        a = _scalars(body)
        if len(a) != src.algebra.dim:
            raise InputError("coadjoint direction has the wrong dimension")
        return coadjoint_curve(src.algebra, point.covector, a, args.degree)
    if kind == "json":
        return Curve.from_json(_read_json(body), src.algebra)
    raise InputError(f"unknown curve format {kind!r}; use eig:, coadjoint: or json:")


def _point_json(p: Point) -> dict:
    out = {"covector": reports.vec(p.covector)}
    if p.matrix is not None:
        out["matrix"] = reports.matrix(p.matrix)
    return out


# -- commands ------------------------------------------------------------------------

def cmd_analyze(args):
    src = load_source(args)
    p = load_point(args, src)
    rep = analyze_point(src.algebra, p.covector)
    stype = classify_stabilizer_type(src.algebra, rep.stabilizer)
    return {"algebra": src.label, "point": _point_json(p), **reports.stabilizer_report(rep, stype)}


def cmd_verify_prop1(args):
    src = load_source(args)
    gamma = load_curve(args, src)
    samples = _scalars(args.samples)
    rep = verify_prop1(src.algebra, gamma, samples, one_sided=args.one_sided)
    return {"algebra": src.label, "curve": gamma.to_json(), **reports.prop1_report(rep)}


def stratum_dimension(args, src: Source, p: Point):
    """(dimension, provenance, extra report fields) for the stratum through p."""
    if args.stratum_dim is not None:
        return args.stratum_dim, "GIVEN", {}
    R = src.realization
    if not args.estimate and R is not None and p.matrix is not None:
        if R.kind in ("gl", "sl"):
            t = matrix_lie.jordan_type(p.matrix)
            d = matrix_lie.sheet_dim_sl(t) + (1 if R.kind == "gl" else 0)
            return d, Provenance.CLOSED_FORM_SL.value, {"jordan_type": t.to_json()}
        if R.trace_form.is_nondegenerate() and matrix_lie.is_semisimple(p.matrix):
            d = matrix_lie.sheet_tangent_semisimple(R, p.matrix).dim
            return d, Provenance.SEMISIMPLE.value, {}
    from .estimator import estimate_stratum_dim

    est = estimate_stratum_dim(src.algebra, p.covector, tol=args.tol, seed=args.seed)
    return est.dim_estimate, Provenance.ESTIMATED.value, {"estimate": reports.estimate_report(est)}


def cmd_inequalities(args):
    src = load_source(args)
    p = load_point(args, src)
    dim, prov, extra = stratum_dimension(args, src, p)
    exact = prov != Provenance.ESTIMATED.value
    rep = inequality_report(src.algebra, p.covector, dim, exact=exact)
    return {"algebra": src.label, "point": _point_json(p), **reports.inequality_report(rep, prov), **extra}


def cmd_index(args):
    src = load_source(args)
    res = compute_index(src.algebra, seed=args.seed, samples=args.samples)
    return {"algebra": src.label, **reports.index_report(res)}


def _max_n(args, default):
    n = default if args.max_n is None else args.max_n
    if n < 1:
        raise InputError("--max-n must be positive")
    return n


def cmd_sheet_scan(args):
    max_n = _max_n(args, 4)
    if max_n > 7:
        raise InputError("sheet-scan is limited to --max-n <= 7")
    types = matrix_lie.all_scan_types(max_n) if args.all_types else matrix_lie.default_scan_types(max_n)
    rows = matrix_lie.sheet_scan(types, seed=args.seed, workers=args.workers)
    table = [
        {
            "n": reports.fig(r.jordan_type.size),
            "type": str(r.jordan_type),
            "dim_centralizer": reports.fig(r.dim_centralizer),
            "dim_derived": reports.fig(r.dim_derived),
            "dim_orbit": reports.fig(r.dim_orbit),
            "dim_sheet": reports.fig(r.dim_sheet),
            "sheet_eq": r.sheet_eq,
            "statements_agree": r.statements_agree,
        }
        for r in rows
    ]
    return {
        "max_n": reports.fig(max_n),
        "all_types": args.all_types,
        "row_count": reports.fig(len(table)),
        "all_sheet_eq": all(r.sheet_eq for r in rows),
        "rows": table,
    }


def cmd_check_sheeteq(args):
    src = load_source(args)
    R = src.realization
    if R is None:
        raise InputError(f"{src.label} has no matrix realization")
    p = load_point(args, src)
    if p.matrix is None:
        raise InputError(f"cannot identify the point with a matrix in {src.label}")
    jt = None
    if R.kind in ("gl", "sl") and not args.semisimple:
        tangent = matrix_lie.sheet_tangent_sl(R, p.matrix, seed=args.seed)
        jt = matrix_lie.jordan_type(p.matrix)
        method = "jordan"
    else:
        tangent = matrix_lie.sheet_tangent_semisimple(R, p.matrix)
        method = "semisimple"
    rep = matrix_lie.check_sheet_eq(R, p.matrix, tangent)
    return {"algebra": src.label, "method": method, "point": _point_json(p), **reports.sheet_report(rep, jt)}


def cmd_nilpotent_table(args):
    max_m = _max_n(args, 7)
    rows = []
    for m in range(1, max_m + 1):
        for r in matrix_lie.nilpotent_block_identity(m, workers=args.workers):
            rows.append(
                {
                    "m": reports.fig(m),
                    "partition": ",".join(map(str, r.partition)),
                    "dim_centralizer": reports.fig(r.centralizer_dim),
                    "dim_derived": reports.fig(r.derived_dim),
                    "difference": reports.fig(r.difference),
                    "largest_block": reports.fig(r.largest),
                    "holds": r.holds,
                }
            )
    return {"max_m": reports.fig(max_m), "all_hold": all(r["holds"] for r in rows), "rows": rows}


def cmd_catalog(args):
    if args.action == "list":
        return {"entries": [
            {"name": e["name"], "params": ",".join(e["params"]) or "-", "note": e["note"]}
            for e in catalog.list_entries()
        ]}
    if not args.catalog:
        raise InputError("catalog dump needs --catalog NAME")
    entry = catalog.make(args.catalog, args.n, check=True)
    out = {"label": entry.label, "note": entry.note, "algebra": entry.algebra.to_json()}
    if entry.realization is not None:
        out["matrices"] = [reports.matrix(b) for b in entry.realization.basis]
    return out


COMMANDS = {
    "analyze": cmd_analyze,
    "verify-prop1": cmd_verify_prop1,
    "inequalities": cmd_inequalities,
    "index": cmd_index,
    "sheet-scan": cmd_sheet_scan,
    "check-sheeteq": cmd_check_sheeteq,
    "nilpotent-table": cmd_nilpotent_table,
    "catalog": cmd_catalog,
}


# -- argument parsing --------------------------------------------------------------

def _seed(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from exc
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--seed", type=_seed, default=d(None), help=f"random seed (default 0, or ${SEED_ENV})")
    p.add_argument("--json-out", default=d(None), metavar="PATH", help="also write the JSON report here")
    p.add_argument("--json", action="store_true", default=d(False), help="print JSON instead of a table")
    p.add_argument("--tol", type=float, default=d(DEFAULT_TOL), help="relative singular-value cutoff")
    p.add_argument("--max-n", type=int, default=d(None), help="size bound for scans")
    p.add_argument("--workers", type=int, default=d(1), help="processes for scans (default 1)")


def _algebra_flags(p):
    p.add_argument("--catalog", choices=catalog.NAMES, help="built-in algebra")
    p.add_argument("--n", type=int, help="size parameter of the catalog algebra")
    p.add_argument("--algebra", metavar="PATH", help="algebra JSON file")


def _point_flags(p):
    p.add_argument("--point", help="covector coordinates a,b,.. (or json:PATH)")
    p.add_argument("--matrix-point", help="matrix via the trace form: diag:.., jordan:.., rows:.., json:PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liestrata", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="stabilizer, derived algebra and type at a point")
    _algebra_flags(p)
    _point_flags(p)

    p = sub.add_parser("verify-prop1", parents=[common], help="pair a curve's velocity with [g_mu, g_mu]")
    _algebra_flags(p)
    _point_flags(p)
    p.add_argument("--curve", required=True, help="eig:p1(t),..  coadjoint:a,b,..  or json:PATH")
    p.add_argument("--samples", default="1/7,1/3,2", help="sample parameters t (default 1/7,1/3,2)")
    p.add_argument("--degree", type=int, default=3, help="truncation degree of coadjoint curves")
    p.add_argument("--one-sided", action="store_true", help="curve defined for t >= 0 only")

    p = sub.add_parser("inequalities", parents=[common], help="compare codim of the stratum with dim [g_mu, g_mu]")
    _algebra_flags(p)
    _point_flags(p)
    p.add_argument("--stratum-dim", type=int, help="use this known stratum dimension")
    p.add_argument("--estimate", action="store_true", help="always use the floating-point estimator")

    p = sub.add_parser("index", parents=[common], help="generic corank of the Poisson tensor")
    _algebra_flags(p)
    p.add_argument("--samples", type=int, default=3, help="random points per attempt (default 3)")

    p = sub.add_parser("sheet-scan", parents=[common], help="sheet equality over Jordan types of sl(n)")
    p.add_argument("--all-types", action="store_true", help="every Jordan type, not just the default rows")

    p = sub.add_parser("check-sheeteq", parents=[common], help="sheet equality at one matrix")
    _algebra_flags(p)
    _point_flags(p)
    p.add_argument("--semisimple", action="store_true", help="use the semisimple tangent construction")

    sub.add_parser("nilpotent-table", parents=[common], help="largest Jordan block identity table")

    p = sub.add_parser("catalog", parents=[common], help="list or dump built-in algebras")
    p.add_argument("action", choices=("list", "dump"))
    _algebra_flags(p)
    return parser


def _resolve_seed(args):
    if args.seed is not None:
        return
    env = os.environ.get(SEED_ENV)
    try:
        args.seed = _seed(env) if env else 0
    except argparse.ArgumentTypeError as exc:
        raise InputError(f"${SEED_ENV}: {exc}") from exc


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        _resolve_seed(args)
        if args.workers < 1:
            raise InputError("--workers must be at least 1")
        result = COMMANDS[args.command](args)
        data = reports.envelope(args.command, args.seed, result)
        text = reports.dumps(data)
        if args.json_out:
            try:
                Path(args.json_out).write_text(text)
            except OSError as exc:
                raise InputError(f"cannot write {args.json_out}: {exc}") from exc
        stdout.write(text if args.json else reports.render_text(data))
        return 0
    except (InputError, ValueError) as exc:
        code, kind, msg = 2, "input error", str(exc)
    except InvariantViolation as exc:
        code, kind, msg = 3, "invariant violation", str(exc)
    except ConvergenceError as exc:
        code, kind, msg = 4, "estimator did not converge", str(exc)
    except LieStrataError as exc:
        code, kind, msg = 3, "error", str(exc)
    stderr.write(f"liestrata: {kind}: {msg}\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
