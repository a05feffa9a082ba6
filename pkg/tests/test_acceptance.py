"""Acceptance criteria, one test each; every test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
import time
from fractions import Fraction

import pytest
import sympy

from liestrata import sampling
from liestrata.catalog import make
from liestrata.estimator import estimate_stratum_dim
from liestrata.matrix_lie import (
    JordanType,
    all_scan_types,
    as_mat,
    centralizer,
    centralizer_dim_from_type,
    check_sheet_eq,
    conjugate,
    deformation_family,
    diag,
    eye,
    jordan_matrix,
    jordan_type_shapes,
    jordan_types_sl,
    madd,
    mscale,
    nilpotent_block_identity,
    partitions,
    representative_type,
    sheet_scan,
    sheet_tangent_semisimple,
    trace,
    zeros,
)
from liestrata.stabilizer import (
    StabilizerType,
    analyze_point,
    classify_stabilizer_type,
    singular_polynomial,
    stabilizer,
)
from liestrata.errors import StratumExitError
from liestrata.strata import Curve, coadjoint_curve, compute_index, inequality_report, verify_prop1

RESULTS: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str, elapsed: float, limit: float | None):
    in_time = limit is None or elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    line = f"criterion {number} [{status}] {title}: {detail}; {elapsed:.2f} s{budget}"
    RESULTS[number] = line
    print(line)
    assert ok, line
    assert in_time, f"{line}: over the time limit"


# -- 1 --------------------------------------------------------------------------------

def test_criterion_1_gl_diagonal():
    t0 = time.perf_counter()
    bad, cases = [], 0
    for n in range(1, 9):
        R = make("gl", n).realization
        for pattern in partitions(n):
            eigs = [Fraction(i + 1) for i, k in enumerate(pattern) for _ in range(k)]
            m = diag(eigs)
            mu = R.covector(m)
            rep = analyze_point(R.algebra, mu)
            dim_sheet = sheet_tangent_semisimple(R, m).dim
            ineq = inequality_report(R.algebra, mu, dim_sheet, report=rep)
            cases += 1
            if rep.dim_stabilizer - rep.dim_derived != len(pattern) or ineq.slack != 0:
                bad.append((n, pattern))
    record(1, "gl(n) diagonal, n <= 8", not bad,
           f"{cases} multiplicity patterns, {len(bad)} failures {bad[:3]}", time.perf_counter() - t0, 10)


# -- 2 --------------------------------------------------------------------------------

def _rand(rng, bound=5):
    return sampling.small_rational(rng, bound)


def _unipotent(rng, n):
    m = [list(r) for r in eye(n)]
    for i in range(n):
        for j in range(i):
            m[i][j] = _rand(rng, 3)
    return as_mat(m)


def _strict_upper(rng, n):
    m = zeros(n)
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = _rand(rng)
    return as_mat(m)


def _nilpotent_direction(name, entry, rng):
    """A random element whose adjoint action is nilpotent."""
    R = entry.realization
    if name in ("gl", "sl"):
        n = R.size
        return R.coords(conjugate(_unipotent(rng, n), _strict_upper(rng, n)))
    if name == "sp":
        n = R.size // 2
        a = _strict_upper(rng, n)
        b = zeros(n)
        for i in range(n):
            for j in range(i, n):
                b[i][j] = b[j][i] = _rand(rng)
        m = zeros(2 * n)
        for i in range(n):
            for j in range(n):
                m[i][j] = a[i][j]
                m[n + i][n + j] = -a[j][i]
                m[i][n + j] = b[i][j]
        return R.coords(m)
    if name == "heisenberg":
        return tuple(_rand(rng) for _ in range(entry.algebra.dim))
    if name == "aff1":
        return (Fraction(0), _rand(rng))
    if name == "duflo":
        return (Fraction(0), _rand(rng), _rand(rng), _rand(rng))
    raise AssertionError(name)


def _random_point(rng, entry, index):
    """Alternately a dense generic point and a sparse, often singular, one."""
    L = entry.algebra
    if index % 2 == 0:
        return sampling.random_vector(rng, L.dim)
    return tuple(_rand(rng) if rng.random() < 0.35 else Fraction(0) for _ in range(L.dim))


PROP1_ALGEBRAS = [("gl", 3), ("sl", 3), ("sp", 2), ("heisenberg", 5), ("aff1", None), ("duflo", None)]
SAMPLES = (Fraction(1, 7), Fraction(1, 3), Fraction(2), Fraction(-5, 3))


def _eigenvalue_curves(R):
    """Curves J + t D over every Jordan type J of the algebra's size.

    D moves whole generalized eigenspaces (shifting one eigenvalue at a time)
    or follows a verified direction of the block-splitting family.
    """
    n = R.size
    traceless = R.kind == "sl"
    for shape in jordan_type_shapes(n):
        t = representative_type(shape, traceless=traceless)
        j = jordan_matrix(t)
        pos = 0
        for lam, part in t.blocks:
            d = zeros(n)
            for i in range(pos, pos + sum(part)):
                d[i][i] = Fraction(1)
            pos += sum(part)
            d = as_mat(d)
            if traceless:
                d = madd(d, mscale(-trace(d) / n, eye(n)))
            yield t, j, d
        fam = deformation_family(R, j)
        for eps in fam.verified_eps:
            if fam.p:
                yield t, j, madd(*(mscale(e, v) for e, v in zip(eps, fam.directions)))


def test_criterion_2_proposition_one():
    t0 = time.perf_counter()
    failures, nonabelian, counts = [], 0, {}
    # (a) coadjoint curves along nilpotent directions
    for pos, (name, n) in enumerate(PROP1_ALGEBRAS):
        entry = make(name, n)
        L = entry.algebra
        for i, ss in enumerate(sampling.child_seeds(2024, 50, salt=pos)):
            rng = sampling.rng_for(ss)
            mu = _random_point(rng, entry, i)
            a = _nilpotent_direction(name, entry, rng)
            curve = coadjoint_curve(L, mu, a, L.dim)
            rep = verify_prop1(L, curve, SAMPLES)
            nonabelian += rep.derived_dim > 0
            if not rep.all_zero:
                failures.append(("a", entry.label, i))
        counts[entry.label] = 50
    # (b) eigenvalue-deformation curves in gl(3) and sl(3)
    b_count = 0
    for name in ("gl", "sl"):
        R = make(name, 3).realization
        for t, j, d in _eigenvalue_curves(R):
            curve = Curve((R.covector(j), R.covector(d)), R.algebra)
            rep = verify_prop1(R.algebra, curve, (Fraction(1, 7), Fraction(1, 3), Fraction(-1, 5)))
            b_count += 1
            nonabelian += rep.derived_dim > 0
            if not rep.all_zero:
                failures.append(("b", name, str(t)))
    # (c) one-sided curves: each leaves its stratum at some t < 0
    gl3, sl3, duflo = make("gl", 3).realization, make("sl", 3).realization, make("duflo").algebra
    one_sided = [
        (gl3.algebra, Curve((gl3.covector(diag([1, 1, 2])), gl3.covector(diag([1, 1, 3])))), Fraction(-1, 2)),
        (sl3.algebra, Curve((sl3.covector(diag([1, 1, -2])), sl3.covector(diag([-1, -1, 2])))), Fraction(1)),
        (duflo, Curve(((0, 1, 1, 0), (0, 2, 2, 0))), Fraction(-1, 2)),
        (gl3.algebra, Curve((gl3.covector(jordan_matrix(JordanType.of({1: (2,), 3: (1,)}))),
                             gl3.covector(diag([1, 1, -1])))), Fraction(1)),
    ]
    for L, curve, exit_t in one_sided:
        rep = verify_prop1(L, curve, (Fraction(1, 9), Fraction(1, 4), Fraction(1, 2)), one_sided=True)
        nonabelian += rep.derived_dim > 0
        left = False
        try:
            verify_prop1(L, curve, (exit_t,))
        except StratumExitError:
            left = True
        if not (rep.all_zero and left):
            failures.append(("c", L.name, str(curve.coeffs[0])))
    total = sum(counts.values()) + b_count + len(one_sided)
    detail = (
        f"(a) {sum(counts.values())} coadjoint curves over {len(counts)} algebras, (b) {b_count} eigenvalue curves, "
        f"(c) {len(one_sided)} one-sided curves; {total - len(failures)}/{total} exactly zero, "
        f"{nonabelian} with non-abelian stabilizer"
    )
    record(2, "zero pairings along strata", not failures, detail, time.perf_counter() - t0, 30)


# -- 3 --------------------------------------------------------------------------------

def test_criterion_3_duflo():
    t0 = time.perf_counter()
    L = make("duflo").algebra
    mu = (0, 1, 0, 0)
    s = stabilizer(L, mu)
    abelian = s.dim == 2 and classify_stabilizer_type(L, s) is StabilizerType.ABELIAN
    d = singular_polynomial(L)
    xs = sympy.symbols(f"x1:{L.dim + 1}")
    is_x4 = d is not None and sympy.simplify(d.as_expr() / xs[3]).is_number
    est = estimate_stratum_dim(L, mu, tol=1e-6)
    ineq = inequality_report(L, mu, est.dim_estimate, exact=False)
    ok = abelian and is_x4 and est.dim_estimate == 3 and ineq.slack == 1 and ineq.non_linearizable_witness
    detail = (
        f"stabilizer dim {s.dim} abelian={abelian}, D = {d.as_expr() if d is not None else None}, "
        f"estimate {est.dim_estimate} (sv ratio {est.singular_values[-1] / est.singular_values[0]:.1e}), "
        f"slack {ineq.slack}, witness={ineq.non_linearizable_witness}"
    )
    record(3, "Duflo example", ok, detail, time.perf_counter() - t0, 20)


# -- 4 --------------------------------------------------------------------------------

def test_criterion_4_largest_block():
    t0 = time.perf_counter()
    rows = [r for m in range(1, 8) for r in nilpotent_block_identity(m)]
    bad = [r.partition for r in rows if not r.holds]
    at7 = sum(1 for r in rows if sum(r.partition) == 7)
    # p(7) = 15; the 22 partitions usually quoted belong to m = 8, which is checked as well
    rows8 = nilpotent_block_identity(8, max_m=8)
    bad += [r.partition for r in rows8 if not r.holds]
    detail = (
        f"{len(rows)} partitions of m <= 7 ({at7} at m = 7) plus {len(rows8)} at m = 8; "
        f"{len(bad)} failures"
    )
    record(4, "largest Jordan block identity", not bad, detail, time.perf_counter() - t0, 60)


# -- 5 --------------------------------------------------------------------------------

def test_criterion_5_sl_sheet_eq():
    t0 = time.perf_counter()
    types = all_scan_types(6)
    assert len(types) == sum(len(jordan_types_sl(n)) for n in range(2, 7))
    rows = sheet_scan(types, workers=min(4, os.cpu_count() or 1))
    bad = [str(r.jordan_type) for r in rows if not (r.sheet_eq and r.statements_agree)]
    detail = f"{len(rows)} Jordan types of sl(2..6), {len(bad)} failures {bad[:3]}"
    record(5, "sl(n) sheet equality", not bad, detail, time.perf_counter() - t0, 300)


# -- 6 --------------------------------------------------------------------------------

def test_criterion_6_compact():
    t0 = time.perf_counter()
    bad, count = [], 0
    for name, n in (("su", 2), ("su", 3), ("so", 3), ("so", 4)):
        R = make(name, n).realization
        for ss in sampling.child_seeds(606, 20, salt=R.dim):
            x = sampling.random_vector(sampling.rng_for(ss), R.dim)
            m = R.matrix(x)
            rep = check_sheet_eq(R, m, sheet_tangent_semisimple(R, m))
            count += 1
            if not (rep.sheet_eq and rep.statements_agree):
                bad.append((R.name, x))
    record(6, "compact algebras", not bad, f"{count} random points, {len(bad)} failures",
           time.perf_counter() - t0, 60)


# -- 7 --------------------------------------------------------------------------------

def test_criterion_7_centralizer_formula():
    t0 = time.perf_counter()
    bad, count = [], 0
    for n in range(1, 8):
        gl = make("gl", n).realization
        sl = make("sl", n).realization if n >= 2 else None
        for shape in jordan_type_shapes(n):
            t = representative_type(shape, traceless=False)
            count += 1
            if centralizer_dim_from_type(t) != centralizer(gl, jordan_matrix(t)).dim:
                bad.append(("gl", str(t)))
            if sl is not None:
                ts = representative_type(shape)
                if centralizer_dim_from_type(ts, sl=True) != centralizer(sl, jordan_matrix(ts)).dim:
                    bad.append(("sl", str(ts)))
    record(7, "centralizer dimension formula", not bad,
           f"{count} Jordan types of gl(1..7) (and their sl versions), {len(bad)} mismatches",
           time.perf_counter() - t0, None)


# -- 8 --------------------------------------------------------------------------------

INDEX_EXPECTED = (
    [(("gl", n), n) for n in range(1, 7)]
    + [(("sl", n), n - 1) for n in range(2, 7)]
    + [(("heisenberg", 3), 1), (("aff1", None), 0), (("duflo", None), 2)]
)


def test_criterion_8_index_values():
    t0 = time.perf_counter()
    wrong = []
    for (name, n), expected in INDEX_EXPECTED:
        L = make(name, n).algebra
        got = {compute_index(L, seed=s).ind for s in (0, 1, 2)}
        if got != {expected}:
            wrong.append(f"{make(name, n).label}: expected {expected}, got {sorted(got)}")
    detail = f"{len(INDEX_EXPECTED)} algebras x 3 seeds; " + ("; ".join(wrong) if wrong else "all match")
    record(8, "index values", not wrong, detail, time.perf_counter() - t0, None)


# -- 9 --------------------------------------------------------------------------------

CLI_COMMANDS = [
    ["analyze", "--catalog", "duflo", "--point", "0,1,0,0"],
    ["analyze", "--catalog", "gl", "--n", "3", "--matrix-point", "diag:1,1,2"],
    ["verify-prop1", "--catalog", "gl", "--n", "3", "--curve", "eig:1+t,1+t,2", "--samples", "0,1/7,1/3"],
    ["inequalities", "--catalog", "duflo", "--point", "0,1,0,0"],
    ["inequalities", "--catalog", "sl", "--n", "3", "--matrix-point", "jordan:0:2,1"],
    ["index", "--catalog", "heisenberg", "--n", "3"],
    ["sheet-scan", "--max-n", "4"],
    ["check-sheeteq", "--catalog", "sl", "--n", "3", "--matrix-point", "jordan:0:2,1"],
    ["nilpotent-table", "--max-n", "5"],
    ["catalog", "list"],
    ["catalog", "dump", "--catalog", "sp", "--n", "2"],
]


def _cli_json(argv, seed):
    env = dict(os.environ, PYTHONHASHSEED="random")
    env.pop("LIESTRATA_SEED", None)
    proc = subprocess.run(
        [sys.executable, "-m", "liestrata.cli", "--seed", str(seed), "--json", *argv],
        capture_output=True, env=env, check=False,
    )
    return proc.returncode, proc.stdout


def test_criterion_9_determinism():
    t0 = time.perf_counter()
    differing, errors = [], []
    for argv in CLI_COMMANDS:
        for seed in (0, 12345):
            (c1, a), (c2, b) = _cli_json(argv, seed), _cli_json(argv, seed)
            if c1 or c2:
                errors.append(" ".join(argv))
            elif a != b:
                differing.append(" ".join(argv))
            else:
                json.loads(a)
    ok = not differing and not errors
    detail = f"{len(CLI_COMMANDS)} commands x 2 seeds, separate processes; {len(differing)} differ, {len(errors)} errored"
    record(9, "CLI determinism", ok, detail, time.perf_counter() - t0, None)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
