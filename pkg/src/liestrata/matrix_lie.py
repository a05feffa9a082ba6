"""Matrix realizations, Jordan types, centralizers and sheet tangent spaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import linalg, sampling
from .algebra import G, BilinearForm, LieAlgebra, Subspace, as_row, orthogonal_complement
from .errors import (
    DegenerateFormError,
    InputError,
    InvariantViolation,
    IrrationalSpectrumError,
    NotSemisimpleError,
)
from .linalg import Row, format_scalar, parse_scalar
from .stabilizer import center_of_subalgebra, derived_subalgebra

Mat = tuple[Row, ...]


# -- small dense matrix helpers ------------------------------------------------

def _frac_row(r) -> Row:
    if type(r) is tuple and all(type(x) is Fraction for x in r):
        return r
    return tuple(x if type(x) is Fraction else Fraction(x) for x in r)


def as_mat(m) -> Mat:
    rows = tuple(_frac_row(r) for r in m)
    if rows and any(len(r) != len(rows) for r in rows):
        raise InputError("matrix must be square")
    return rows


def zeros(n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(n)]


def eye(n: int) -> Mat:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def unit(n: int, i: int, j: int, x=1) -> Mat:
    m = zeros(n)
    m[i][j] = Fraction(x)
    return as_mat(m)


def diag(entries) -> Mat:
    entries = [Fraction(x) for x in entries]
    n = len(entries)
    return tuple(tuple(entries[i] if i == j else Fraction(0) for j in range(n)) for i in range(n))


def mmul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    out = zeros(n)
    b_sparse = [[(j, y) for j, y in enumerate(r) if y] for r in b]
    for i in range(n):
        oi = out[i]
        for k, x in enumerate(a[i]):
            if x:
                for j, y in b_sparse[k]:
                    oi[j] += x * y
    return tuple(tuple(r) for r in out)


def madd(*ms: Mat) -> Mat:
    return tuple(tuple(sum(xs, Fraction(0)) for xs in zip(*rows)) for rows in zip(*ms))


def mscale(c, m: Mat) -> Mat:
    c = Fraction(c)
    return tuple(tuple(c * x for x in r) for r in m)


def comm(a: Mat, b: Mat) -> Mat:
    ab = mmul(a, b)
    ba = mmul(b, a)
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(ab, ba))


def trace(m: Mat) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def flat(m: Mat) -> Row:
    return tuple(x for r in m for x in r)


def minverse(m: Mat) -> Mat:
    n = len(m)
    red, piv = linalg.rref([list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(m)], 2 * n)
    if piv[:n] != list(range(n)) or len(piv) != n:
        raise InputError("matrix is singular")
    return tuple(tuple(r[n:]) for r in red)


def conjugate(p: Mat, x: Mat, p_inv: Mat | None = None) -> Mat:
    """p x p^-1."""
    return mmul(mmul(p, x), minverse(p) if p_inv is None else p_inv)


def matrix_to_json(m: Mat) -> list[list[str]]:
    return [[format_scalar(x) for x in r] for r in m]


def matrix_from_json(data) -> Mat:
    try:
        return as_mat([[parse_scalar(x) for x in r] for r in data])
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad matrix JSON: {exc}") from exc


def _to_sympy(m: Mat):
    import sympy

    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m])


def _from_sympy(m) -> Mat:
    import sympy

    out = []
    for i in range(m.rows):
        row = []
        for j in range(m.cols):
            v = sympy.nsimplify(m[i, j])
            if not v.is_Rational:
                raise IrrationalSpectrumError(f"non-rational entry {v} in Jordan data")
            row.append(Fraction(int(v.p), int(v.q)))
        out.append(row)
    return as_mat(out)


# -- realizations ----------------------------------------------------------------

class MatrixRealization:
    """A Lie algebra spanned by explicit rational matrices.

    The abstract algebra's structure constants are read off the
    commutators of the basis matrices, so the two always agree.
    """

    def __init__(self, basis: Sequence, kind: str, name: str = "", labels: Sequence[str] | None = None):
        self.basis: tuple[Mat, ...] = tuple(as_mat(b) for b in basis)
        if not self.basis:
            raise InputError("empty matrix basis")
        self.size = len(self.basis[0])
        self.kind = kind
        self.name = name or kind
        self._flat = [flat(b) for b in self.basis]
        n = len(self.basis)
        red, piv = linalg.rref(self._flat, self.size**2)
        if len(piv) != n:
            raise InputError("basis matrices are linearly dependent")
        self._piv = piv
        sub = [[f[p] for p in piv] for f in self._flat]
        self._inv = minverse(as_mat(sub))
        self._inv_sparse = [[(i, z) for i, z in enumerate(r) if z] for r in self._inv]
        consts = {}
        for i, j in combinations(range(n), 2):
            c = self.coords(comm(self.basis[i], self.basis[j]))
            row = {k: x for k, x in enumerate(c) if x}
            if row:
                consts[(i, j)] = row
        self.algebra = LieAlgebra(n, consts, labels, name=self.name)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, m) -> Row:
        """Abstract coordinates of a matrix; raises if it is outside the algebra."""
        m = as_mat(m)
        if len(m) != self.size:
            raise InputError(f"expected a {self.size}x{self.size} matrix")
        v = flat(m)
        x = [Fraction(0)] * self.dim
        for p, row in zip(self._piv, self._inv_sparse):
            y = v[p]
            if y:
                for i, z in row:
                    x[i] += y * z
        x = tuple(x)
        recon = [Fraction(0)] * len(v)
        for xi, f in zip(x, self._flat):
            if xi:
                for k, y in enumerate(f):
                    if y:
                        recon[k] += xi * y
        if tuple(recon) != v:
            raise InputError(f"matrix lies outside {self.name}")
        return x

    def contains_matrix(self, m) -> bool:
        try:
            self.coords(m)
        except InputError:
            return False
        return True

    def matrix(self, x) -> Mat:
        x = as_row(x, self.dim)
        out = zeros(self.size)
        for xi, b in zip(x, self.basis):
            if xi:
                for i, r in enumerate(b):
                    for j, y in enumerate(r):
                        if y:
                            out[i][j] += xi * y
        return as_mat(out)

    @cached_property
    def trace_form(self) -> BilinearForm:
        n = self.dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = trace(mmul(self.basis[i], self.basis[j]))
        return BilinearForm(tuple(tuple(r) for r in m), symmetric=True)

    def covector(self, m) -> Row:
        """The covector tr(m . ) on the basis; the trace-form identification."""
        return self.trace_form.apply(self.coords(m))

    def matrix_of_covector(self, mu) -> Mat:
        """Inverse of ``covector`` (needs a nondegenerate trace form)."""
        x = linalg.solve(self.trace_form.matrix, as_row(mu, self.dim), self.dim)
        if x is None or not self.trace_form.is_nondegenerate():
            raise DegenerateFormError(f"trace form of {self.name} is degenerate")
        return self.matrix(x)


def centralizer(R: MatrixRealization, mu) -> Subspace:
    """{x in the algebra : [x, mu] = 0}, in abstract coordinates."""
    mu = as_mat(mu)
    R.coords(mu)
    cols = [flat(comm(b, mu)) for b in R.basis]
    rows = [list(r) for r in zip(*cols) if any(r)]
    if not rows:
        return Subspace.full(R.dim)
    return Subspace.span(linalg.kernel(rows, R.dim), R.dim, G)


def orbit_tangent(R: MatrixRealization, mu) -> Subspace:
    """[g, mu]: the tangent space of the adjoint orbit."""
    mu = as_mat(mu)
    return Subspace.span([R.coords(comm(b, mu)) for b in R.basis], R.dim, G)


def gl_centralizer_dim(m: Mat) -> int:
    """dim {X in gl(n) : XM = MX} by a direct n^2 x n^2 kernel."""
    n = len(m)
    rows = []
    for r in range(n):
        for c in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                if m[k][c]:
                    row[r * n + k] += m[k][c]
                if m[r][k]:
                    row[k * n + c] -= m[r][k]
            if any(row):
                rows.append(row)
    return n * n - linalg.rank(rows, n * n)


# -- Jordan types ------------------------------------------------------------------

def partitions(n: int, largest: int | None = None):
    """Partitions of n as weakly decreasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def conjugate_partition(p: Sequence[int]) -> tuple[int, ...]:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


@dataclass(frozen=True)
class JordanType:
    """Eigenvalue -> partition of its generalized eigenspace dimension."""

    blocks: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def __post_init__(self):
        items = []
        seen = set()
        for lam, part in self.blocks:
            lam = Fraction(lam)
            part = tuple(sorted((int(x) for x in part), reverse=True))
            if lam in seen:
                raise InputError(f"eigenvalue {lam} listed twice")
            if not part or part[-1] <= 0:
                raise InputError("partitions must have positive parts")
            seen.add(lam)
            items.append((lam, part))
        items.sort()
        object.__setattr__(self, "blocks", tuple(items))

    @classmethod
    def of(cls, mapping: Mapping) -> "JordanType":
        return cls(tuple(mapping.items()))

    @property
    def size(self) -> int:
        return sum(sum(p) for _, p in self.blocks)

    @property
    def eigenvalues(self) -> tuple[Fraction, ...]:
        return tuple(lam for lam, _ in self.blocks)

    def partition(self, lam) -> tuple[int, ...]:
        return dict(self.blocks)[Fraction(lam)]

    def h(self, lam) -> int:
        """Largest Jordan block for ``lam``."""
        return self.partition(lam)[0]

    @property
    def sum_h(self) -> int:
        return sum(p[0] for _, p in self.blocks)

    @property
    def trace(self) -> Fraction:
        return sum((lam * sum(p) for lam, p in self.blocks), Fraction(0))

    @property
    def shape(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted((p for _, p in self.blocks), reverse=True))

    def to_json(self) -> dict:
        return {"blocks": [{"lambda": format_scalar(lam), "partition": list(p)} for lam, p in self.blocks]}

    @classmethod
    def from_json(cls, data) -> "JordanType":
        try:
            return cls(tuple((parse_scalar(b["lambda"]), tuple(b["partition"])) for b in data["blocks"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad Jordan type JSON: {exc}") from exc

    def __str__(self):
        return "; ".join(f"{format_scalar(lam)}:{','.join(map(str, p))}" for lam, p in self.blocks)


def rational_eigenvalues(mu: Mat) -> dict[Fraction, int]:
    """Eigenvalues with algebraic multiplicity; the spectrum must be rational."""
    import sympy

    lam = sympy.Symbol("lam")
    poly = _to_sympy(mu).charpoly(lam)
    _, factors = sympy.factor_list(poly.as_expr(), lam)
    out: dict[Fraction, int] = {}
    for f, mult in factors:
        p = sympy.Poly(f, lam)
        if p.degree() == 0:
            continue
        if p.degree() > 1:
            raise IrrationalSpectrumError(f"characteristic polynomial has irreducible factor {f}")
        a, b = p.all_coeffs()
        root = -sympy.Rational(b) / sympy.Rational(a)
        out[Fraction(int(root.p), int(root.q))] = out.get(Fraction(int(root.p), int(root.q)), 0) + mult
    return out


def jordan_type(mu) -> JordanType:
    """Jordan type from the rank sequence of (mu - lambda)^k."""
    mu = as_mat(mu)
    n = len(mu)
    blocks = []
    for lam, mult in sorted(rational_eigenvalues(mu).items()):
        a = madd(mu, mscale(-lam, eye(n)))
        ranks = [n]
        p = eye(n)
        while ranks[-1] > n - mult:
            p = mmul(p, a)
            ranks.append(linalg.rank(p, n))
        # number of blocks of size >= k is ranks[k-1] - ranks[k]
        at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
        blocks.append((lam, conjugate_partition(at_least)))
    return JordanType(tuple(blocks))


def jordan_matrix(t: JordanType) -> Mat:
    """Block-diagonal Jordan form, ones on the superdiagonal."""
    n = t.size
    m = zeros(n)
    pos = 0
    for lam, part in t.blocks:
        for size in part:
            for i in range(size):
                m[pos + i][pos + i] = lam
                if i + 1 < size:
                    m[pos + i][pos + i + 1] = Fraction(1)
            pos += size
    return as_mat(m)


def jordan_blocks(mu: Mat) -> list[tuple[Fraction, int, int]] | None:
    """``(lambda, start, size)`` per block when ``mu`` is already in Jordan form."""
    n = len(mu)
    for i in range(n):
        for j in range(n):
            if j == i or (j == i + 1 and mu[i][j] in (0, 1)):
                continue
            if mu[i][j]:
                return None
    blocks = []
    start = 0
    for i in range(n):
        if i + 1 < n and mu[i][i + 1] == 1:
            if mu[i][i] != mu[i + 1][i + 1]:
                return None
            continue
        blocks.append((mu[start][start], start, i - start + 1))
        start = i + 1
    return blocks


def type_from_blocks(blocks) -> JordanType:
    return JordanType(tuple((lam, tuple(s for _, s in bl)) for lam, bl in _blocks_by_eigenvalue(blocks).items()))


def jordan_decomposition(mu) -> tuple[Mat, Mat]:
    """``(P, J)`` with mu = P J P^-1 and J in Jordan form (exact)."""
    mu = as_mat(mu)
    rational_eigenvalues(mu)
    p, j = _to_sympy(mu).jordan_form()
    return _from_sympy(p), _from_sympy(j)


def centralizer_dim_from_type(t: JordanType, *, sl: bool = False) -> int:
    d = sum(min(a, b) for _, p in t.blocks for a in p for b in p)
    return d - 1 if sl else d


def sheet_dim_sl(t: JordanType, n: int | None = None) -> int:
    n = t.size if n is None else n
    if n != t.size:
        raise InputError("Jordan type size does not match n")
    orbit = n * n - centralizer_dim_from_type(t)
    return orbit + t.sum_h - 1


def jordan_type_shapes(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Multisets of partitions with total size n (Jordan types up to eigenvalues)."""
    out = []

    def rec(remaining, max_item, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for size in range(remaining, 0, -1):
            for p in partitions(size):
                item = (size, p)
                if max_item is not None and item > max_item:
                    continue
                rec(remaining - size, item, acc + [p])

    rec(n, None, [])
    return out


def representative_type(shape: Sequence[Sequence[int]], *, traceless: bool = True) -> JordanType:
    """Distinct rational eigenvalues for a shape, shifted to trace zero if asked."""
    lams = [Fraction(i) for i in range(len(shape))]
    n = sum(sum(p) for p in shape)
    if traceless:
        c = sum((lam * sum(p) for lam, p in zip(lams, shape)), Fraction(0)) / n
        lams = [lam - c for lam in lams]
    return JordanType(tuple(zip(lams, (tuple(p) for p in shape))))


def jordan_types_sl(n: int) -> list[JordanType]:
    return [representative_type(s) for s in jordan_type_shapes(n)]


# -- semisimplicity ----------------------------------------------------------------

def minimal_polynomial(mu: Mat) -> tuple[Fraction, ...]:
    """Monic minimal polynomial, coefficients from the constant term up."""
    mu = as_mat(mu)
    n = len(mu)
    powers = [flat(eye(n))]
    p = eye(n)
    while True:
        p = mmul(p, mu)
        target = flat(p)
        cols = list(zip(*powers))
        x = linalg.solve([list(r) for r in cols], target, len(powers))
        if x is not None:
            return tuple(-c for c in x) + (Fraction(1),)
        powers.append(target)


def is_semisimple(mu) -> bool:
    """Diagonalizable over C, i.e. squarefree minimal polynomial."""
    import sympy

    lam = sympy.Symbol("lam")
    coeffs = minimal_polynomial(mu)
    poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in coeffs])), lam)
    return sympy.gcd(poly, poly.diff(lam)).degree() == 0


# -- sheets ------------------------------------------------------------------------

@dataclass(frozen=True)
class DeformationFamily:
    """First-order directions of mu_eps: a diagonal added to each Jordan block."""

    basepoint: Mat
    directions: tuple[Mat, ...]
    verified_eps: tuple[Row, ...] = ()

    @property
    def p(self) -> int:
        return len(self.directions)

    def at(self, eps) -> Mat:
        return madd(self.basepoint, *(mscale(e, d) for e, d in zip(eps, self.directions)))


def _blocks_by_eigenvalue(blocks) -> dict[Fraction, list[tuple[int, int]]]:
    out: dict[Fraction, list[tuple[int, int]]] = {}
    for lam, start, size in blocks:
        out.setdefault(lam, []).append((start, size))
    return out


def _family_directions(blocks, n: int) -> list[Mat]:
    """Per eigenvalue and position i <= h: sum over blocks of E_{ii} at position i."""
    dirs = []
    for lam, bl in sorted(_blocks_by_eigenvalue(blocks).items()):
        h = max(size for _, size in bl)
        for i in range(h):
            m = zeros(n)
            for start, size in bl:
                if size > i:
                    m[start + i][start + i] = Fraction(1)
            dirs.append(as_mat(m))
    return dirs


def _section_directions(blocks, n: int) -> list[Mat]:
    """Companion-type directions transverse to the orbit.

    Levels (positions within blocks) carrying the same set of blocks form a
    group of r consecutive levels; the group receives the last-row companion
    entries of an r x r block, repeated on every block of the group.
    """
    dirs = []
    for lam, bl in sorted(_blocks_by_eigenvalue(blocks).items()):
        h = max(size for _, size in bl)
        counts = [sum(1 for _, s in bl if s >= lev) for lev in range(1, h + 1)]
        lev = 0
        while lev < h:
            end = lev
            while end + 1 < h and counts[end + 1] == counts[lev]:
                end += 1
            members = [start for start, size in bl if size >= end + 1]
            for k in range(lev, end + 1):
                m = zeros(n)
                for start in members:
                    m[start + end][start + k] = Fraction(1)
                dirs.append(as_mat(m))
            lev = end + 1
    return dirs


def _traceless(m: Mat) -> Mat:
    n = len(m)
    t = trace(m) / n
    return madd(m, mscale(-t, eye(n))) if t else m


def _prepare_jordan(R: MatrixRealization, mu):
    """(P, J, blocks) with J in Jordan form; P is None when mu already is."""
    mu = as_mat(mu)
    R.coords(mu)
    blocks = jordan_blocks(mu)
    if blocks is not None:
        return None, mu, blocks
    p, j = jordan_decomposition(mu)
    return p, j, jordan_blocks(j)


def _check_kind(R: MatrixRealization):
    if R.kind not in ("gl", "sl"):
        raise InputError(f"sheet formulas for Jordan types need gl(n) or sl(n), got {R.name}")


def deformation_family(R: MatrixRealization, mu, *, seed: int = 0, checks: int = 3) -> DeformationFamily:
    """Directions d mu_eps / d eps_i at eps = 0.

    In sl(n) one combination is removed to keep the family traceless, giving
    (sum_lambda h(lambda)) - 1 directions; in gl(n) all of them are kept.
    """
    _check_kind(R)
    p, j, blocks = _prepare_jordan(R, mu)
    n = R.size
    dirs = _family_directions(blocks, n)
    if R.kind == "sl":
        d0 = dirs[0]
        t0 = trace(d0)
        dirs = [madd(d, mscale(-trace(d) / t0, d0)) for d in dirs[1:]]
    if p is not None:
        p_inv = minverse(p)
        dirs = [conjugate(p, d, p_inv) for d in dirs]
        base = as_mat(mu)
    else:
        base = j
    if dirs and linalg.rank([flat(d) for d in dirs], n * n) != len(dirs):
        raise InvariantViolation("deformation directions are linearly dependent")
    k0 = gl_centralizer_dim(base)
    used = []
    for ss in sampling.child_seeds(seed, checks, salt=31):
        rng = sampling.rng_for(ss)
        eps = sampling.random_vector(rng, len(dirs))
        fam = DeformationFamily(base, tuple(dirs))
        k = gl_centralizer_dim(fam.at(eps))
        if k != k0:
            raise InvariantViolation(f"centralizer dimension jumps from {k0} to {k} at eps={eps}")
        used.append(eps)
    return DeformationFamily(base, tuple(dirs), tuple(used))


DEFAULT_CURVE_SAMPLES = (Fraction(1, 7), Fraction(1, 3), Fraction(2))


def _verified_velocities(base: Mat, dirs: list[Mat], seed: int, samples) -> list[Mat]:
    """Velocities of random linear curves base + t * (combination of dirs).

    Each curve is checked to keep the centralizer dimension at every sample.
    """
    if not dirs:
        return []
    n = len(base)
    k0 = gl_centralizer_dim(base)
    vels = []
    for attempt, ss in enumerate(sampling.child_seeds(seed, 4 * len(dirs), salt=53)):
        rng = sampling.rng_for(ss)
        a = [sampling.small_rational(rng) for _ in dirs]
        v = madd(*(mscale(c, d) for c, d in zip(a, dirs)))
        if all(gl_centralizer_dim(madd(base, mscale(t, v))) == k0 for t in samples):
            if linalg.rank([flat(w) for w in vels + [v]], n * n) == len(vels) + 1:
                vels.append(v)
        if len(vels) == linalg.rank([flat(d) for d in dirs], n * n):
            return vels
    raise InvariantViolation("could not find curves in the stratum realizing all directions")


def sheet_tangent_sl(R: MatrixRealization, mu, *, seed: int = 0, samples=DEFAULT_CURVE_SAMPLES) -> Subspace:
    """Tangent space at mu of the sheet through mu, for gl(n) or sl(n).

    Spanned by the orbit tangent and the velocities of polynomial curves
    that stay at constant centralizer dimension: the eigenvalue-splitting
    family and companion-block curves.  Its dimension is checked against
    the closed form dim O + sum h(lambda) (minus one in sl(n)).
    """
    _check_kind(R)
    p, j, blocks = _prepare_jordan(R, mu)
    n = R.size
    vels = _verified_velocities(j, _family_directions(blocks, n), seed, samples)
    vels += _verified_velocities(j, _section_directions(blocks, n), seed + 1, samples)
    if R.kind == "sl":
        vels = [_traceless(v) for v in vels]
    if p is not None:
        p_inv = minverse(p)
        vels = [conjugate(p, v, p_inv) for v in vels]
        base = as_mat(mu)
    else:
        base = j
    tangent = orbit_tangent(R, base) + Subspace.span([R.coords(v) for v in vels], R.dim, G)
    t = type_from_blocks(blocks)
    expected = sheet_dim_sl(t) + (1 if R.kind == "gl" else 0)
    if tangent.dim != expected:
        raise InvariantViolation(
            f"sheet tangent has dimension {tangent.dim}, closed form gives {expected} for type {t}"
        )
    return tangent


def sheet_tangent_semisimple(R: MatrixRealization, mu) -> Subspace:
    """[g, mu] + center of the centralizer, for semisimple mu."""
    mu = as_mat(mu)
    R.coords(mu)
    if not is_semisimple(mu):
        raise NotSemisimpleError("element is not semisimple")
    cent = centralizer(R, mu)
    return orbit_tangent(R, mu) + center_of_subalgebra(R.algebra, cent)


@dataclass(frozen=True)
class SheetReport:
    mu: Mat
    tangent: Subspace
    orbit_tangent: Subspace
    centralizer: Subspace
    derived: Subspace
    perp: Subspace
    orthogonal: bool

    @property
    def n(self) -> int:
        return self.tangent.parent_dim

    @property
    def sheet_eq(self) -> bool:
        """Derived algebra of the centralizer equals the tangent's perp."""
        return self.perp == self.derived

    @property
    def dim_equals_codim(self) -> bool:
        return self.derived.dim == self.n - self.tangent.dim

    @property
    def family_identity(self) -> bool:
        return self.centralizer.dim - self.derived.dim == self.tangent.dim - self.orbit_tangent.dim

    @property
    def statements_agree(self) -> bool:
        return self.sheet_eq == self.dim_equals_codim == self.family_identity


def check_sheet_eq(R: MatrixRealization, mu, tangent: Subspace) -> SheetReport:
    mu = as_mat(mu)
    form = R.trace_form
    if not form.is_nondegenerate():
        raise DegenerateFormError(f"trace form of {R.name} is degenerate")
    orbit = orbit_tangent(R, mu)
    if not tangent.includes(orbit):
        raise InputError("supplied tangent does not contain the orbit tangent")
    cent = centralizer(R, mu)
    derived = derived_subalgebra(R.algebra, cent)
    perp = orthogonal_complement(tangent, form)
    orth = all(form(d, t) == 0 for d in derived.basis for t in tangent.basis)
    return SheetReport(mu, tangent, orbit, cent, derived, perp, orth)


@dataclass(frozen=True)
class BlockIdentityRow:
    partition: tuple[int, ...]
    centralizer_dim: int
    derived_dim: int

    @property
    def difference(self) -> int:
        return self.centralizer_dim - self.derived_dim

    @property
    def largest(self) -> int:
        return self.partition[0]

    @property
    def holds(self) -> bool:
        return self.difference == self.largest


def nilpotent_block_identity(m: int, *, max_m: int = 7, workers: int = 1) -> list[BlockIdentityRow]:
    """dim g^nu - dim [g^nu, g^nu] against the largest block, per partition of m."""
    if m > max_m:
        from .errors import BoundExceeded

        raise BoundExceeded(f"nilpotent table limited to m <= {max_m}")
    return _ordered_map(_block_identity_row, partitions(m), workers)


def _block_identity_row(part: tuple[int, ...]) -> BlockIdentityRow:
    from .catalog import make

    R = make("gl", n=sum(part)).realization
    nu = jordan_matrix(JordanType(((Fraction(0), part),)))
    cent = centralizer(R, nu)
    return BlockIdentityRow(part, cent.dim, derived_subalgebra(R.algebra, cent).dim)


def _ordered_map(fn, items, workers: int):
    """map() over items, in a process pool when workers > 1; order is kept."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class SheetScanRow:
    jordan_type: JordanType
    dim_centralizer: int
    dim_derived: int
    dim_orbit: int
    dim_sheet: int
    sheet_eq: bool
    statements_agree: bool


def sheet_scan_row(t: JordanType, seed: int = 0) -> SheetScanRow:
    from .catalog import make

    R = make("sl", n=t.size).realization
    mu = jordan_matrix(t)
    tangent = sheet_tangent_sl(R, mu, seed=seed)
    rep = check_sheet_eq(R, mu, tangent)
    return SheetScanRow(
        t, rep.centralizer.dim, rep.derived.dim, rep.orbit_tangent.dim, rep.tangent.dim,
        rep.sheet_eq, rep.statements_agree,
    )


def _scan_job(args):
    return sheet_scan_row(*args)


def sheet_scan(types: Iterable[JordanType], *, seed: int = 0, workers: int = 1) -> list[SheetScanRow]:
    return _ordered_map(_scan_job, [(t, seed) for t in types], workers)


def default_scan_types(max_n: int) -> list[JordanType]:
    """Nilpotent types of sl(2..max_n), and diag(1, .., 1, 1 - n) for n >= 3."""
    out = []
    for n in range(2, max_n + 1):
        out += [JordanType(((Fraction(0), p),)) for p in partitions(n)]
        if n >= 3:
            out.append(JordanType(((Fraction(1 - n), (1,)), (Fraction(1), (1,) * (n - 1)))))
    return out


def all_scan_types(max_n: int) -> list[JordanType]:
    return [t for n in range(2, max_n + 1) for t in jordan_types_sl(n)]
