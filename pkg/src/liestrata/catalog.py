"""Built-in algebras: classical matrix algebras, aff(1), Heisenberg, Duflo."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import LieAlgebra, jacobi_check
from .errors import InputError, InvariantViolation
from .matrix_lie import MatrixRealization, as_mat, unit, zeros

NAMES = ("gl", "sl", "so", "sp", "su", "aff1", "heisenberg", "duflo")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple[tuple[str, int], ...]
    algebra: LieAlgebra
    realization: MatrixRealization | None
    note: str

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        if self.name == "sp":
            return f"sp({2 * self.params[0][1]})"
        return f"{self.name}({','.join(str(v) for _, v in self.params)})"


def _e(n, i, j):
    return unit(n, i, j)


def _add(*ms):
    n = len(ms[0])
    out = zeros(n)
    for m in ms:
        for i in range(n):
            for j in range(n):
                out[i][j] += m[i][j]
    return as_mat(out)


def _neg(m):
    return tuple(tuple(-x for x in r) for r in m)


def _gl(n):
    basis = [_e(n, i, j) for i in range(n) for j in range(n)]
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return MatrixRealization(basis, "gl", f"gl({n})", labels)


def _sl(n):
    basis, labels = [], []
    for i in range(n - 1):
        basis.append(_add(_e(n, i, i), _neg(_e(n, i + 1, i + 1))))
        labels.append(f"H{i + 1}")
    for i in range(n):
        for j in range(n):
            if i != j:
                basis.append(_e(n, i, j))
                labels.append(f"E{i + 1}{j + 1}")
    return MatrixRealization(basis, "sl", f"sl({n})", labels)


def _so(n):
    basis, labels = [], []
    for i in range(n):
        for j in range(i + 1, n):
            basis.append(_add(_e(n, i, j), _neg(_e(n, j, i))))
            labels.append(f"A{i + 1}{j + 1}")
    return MatrixRealization(basis, "so", f"so({n})", labels)


def _sp(n):
    """sp(2n): X with X^T J + J X = 0, J = [[0, I], [-I, 0]]."""
    m = 2 * n
    basis, labels = [], []
    for i in range(n):
        for j in range(n):
            basis.append(_add(_e(m, i, j), _neg(_e(m, n + j, n + i))))
            labels.append(f"A{i + 1}{j + 1}")
    for i in range(n):
        for j in range(i, n):
            b = _e(m, i, n + j) if i == j else _add(_e(m, i, n + j), _e(m, j, n + i))
            c = _e(m, n + i, j) if i == j else _add(_e(m, n + i, j), _e(m, n + j, i))
            basis.append(b)
            labels.append(f"B{i + 1}{j + 1}")
            basis.append(c)
            labels.append(f"C{i + 1}{j + 1}")
    return MatrixRealization(basis, "sp", f"sp({m})", labels)


def realify(re_part, im_part):
    """Complex n x n matrix X + iY as the real 2n x 2n block [[X, -Y], [Y, X]]."""
    n = len(re_part)
    out = zeros(2 * n)
    for i in range(n):
        for j in range(n):
            x, y = Fraction(re_part[i][j]), Fraction(im_part[i][j])
            out[i][j] = x
            out[n + i][n + j] = x
            out[i][n + j] = -y
            out[n + i][j] = y
    return as_mat(out)


def _su(n):
    z = zeros(n)
    basis, labels = [], []
    for i in range(n - 1):
        d = _add(_e(n, i, i), _neg(_e(n, i + 1, i + 1)))
        basis.append(realify(z, d))
        labels.append(f"iH{i + 1}")
    for i in range(n):
        for j in range(i + 1, n):
            basis.append(realify(_add(_e(n, i, j), _neg(_e(n, j, i))), z))
            labels.append(f"A{i + 1}{j + 1}")
            basis.append(realify(z, _add(_e(n, i, j), _e(n, j, i))))
            labels.append(f"iS{i + 1}{j + 1}")
    return MatrixRealization(basis, "su", f"su({n})", labels)


def _aff1():
    return MatrixRealization([_e(2, 0, 0), _e(2, 0, 1)], "aff1", "aff(1)", ["x", "y"])


def _heisenberg(n):
    """h_n, n = 2m + 1: [x_i, y_i] = z, as strictly upper triangular matrices."""
    m = (n - 1) // 2
    size = m + 2
    basis = [_e(size, 0, i + 1) for i in range(m)]
    basis += [_e(size, i + 1, size - 1) for i in range(m)]
    basis.append(_e(size, 0, size - 1))
    labels = [f"x{i + 1}" for i in range(m)] + [f"y{i + 1}" for i in range(m)] + ["z"]
    return MatrixRealization(basis, "heisenberg", f"h({n})", labels)


def duflo_algebra() -> LieAlgebra:
    """[e1,e2]=e2, [e1,e3]=e3, [e1,e4]=2e4, [e2,e3]=e4."""
    consts = {
        (0, 1): {1: Fraction(1)},
        (0, 2): {2: Fraction(1)},
        (0, 3): {3: Fraction(2)},
        (1, 2): {3: Fraction(1)},
    }
    return LieAlgebra(4, consts, ["e1", "e2", "e3", "e4"], name="duflo")


_NOTES = {
    "gl": "gl(n), basis E_ij in row-major order",
    "sl": "sl(n), basis H_i = E_ii - E_(i+1)(i+1) then E_ij (i != j)",
    "so": "so(n), basis E_ij - E_ji (i < j); compact real form",
    "sp": "sp(2n), blocks [[A, B], [C, -A^T]] with B, C symmetric",
    "su": "su(n) as a real algebra, realified to 2n x 2n rational matrices",
    "aff1": "aff(1): [x, y] = y",
    "heisenberg": "h_n (n odd): [x_i, y_i] = z",
    "duflo": "linear Poisson structure d1 ^ (x2 d2 + x3 d3 + 2 x4 d4) + x4 d2 ^ d3",
}


def _int_param(name, value, minimum):
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise InputError(f"{name} needs an integer n >= {minimum}, got {value!r}")


@lru_cache(maxsize=None)
def _make(name: str, n: int | None) -> CatalogEntry:
    if name == "gl":
        _int_param(name, n, 1)
        r = _gl(n)
    elif name == "sl":
        _int_param(name, n, 2)
        r = _sl(n)
    elif name == "so":
        _int_param(name, n, 2)
        r = _so(n)
    elif name == "sp":
        _int_param(name, n, 1)
        r = _sp(n)
    elif name == "su":
        _int_param(name, n, 2)
        r = _su(n)
    elif name == "aff1":
        r = _aff1()
    elif name == "heisenberg":
        _int_param(name, n, 1)
        if n % 2 == 0:
            raise InputError(f"Heisenberg algebras have odd dimension, got {n}")
        r = _heisenberg(n)
    elif name == "duflo":
        r = None
    else:
        raise InputError(f"unknown catalog algebra {name!r}; known: {', '.join(NAMES)}")
    algebra = r.algebra if r is not None else duflo_algebra()
    params = (("n", n),) if name not in ("aff1", "duflo") else ()
    return CatalogEntry(name, params, algebra, r, _NOTES[name])


def make(name: str, n: int | None = None, *, check: bool = False) -> CatalogEntry:
    """Construct (and cache) a catalog entry; ``check`` re-runs the Jacobi test."""
    if name in ("aff1", "duflo"):
        n = None
    entry = _make(name, n)
    if check and not jacobi_check(entry.algebra):
        raise InvariantViolation(f"{entry.label} fails the Jacobi identity")
    return entry


def list_entries() -> list[dict]:
    return [{"name": k, "note": _NOTES[k], "params": [] if k in ("aff1", "duflo") else ["n"]} for k in NAMES]
