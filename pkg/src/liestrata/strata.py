"""Strata of equal stabilizer dimension, curves in them, and the inequalities."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from . import linalg, sampling
from .algebra import LieAlgebra, as_row
from .errors import IndexDisagreement, InputError, StratumExitError
from .linalg import Row, format_scalar, parse_scalar
from .stabilizer import analyze_point, bracket_table, derived_subalgebra, poisson_tensor, stabilizer


class Provenance(enum.Enum):
    CLOSED_FORM_SL = "CLOSED_FORM_SL"
    SEMISIMPLE = "SEMISIMPLE"
    ESTIMATED = "ESTIMATED"


@dataclass(frozen=True)
class StratumSpec:
    """The stratum of covectors whose stabilizer has dimension ``k``."""

    basepoint: Row
    k: int
    known_dim: int | None = None
    provenance: Provenance | None = None

    @classmethod
    def at(cls, L: LieAlgebra, mu, known_dim=None, provenance=None) -> "StratumSpec":
        mu = as_row(mu, L.dim)
        return cls(mu, stabilizer(L, mu).dim, known_dim, provenance)


def stabilizer_dim(L: LieAlgebra, mu) -> int:
    return L.dim - poisson_tensor(L, mu).rank()


def stratum_membership(L: LieAlgebra, nu, spec: StratumSpec) -> bool:
    return stabilizer_dim(L, nu) == spec.k


@dataclass(frozen=True)
class IndexResult:
    ind: int
    witnesses: tuple[tuple[Row, int], ...]


def compute_index(
    L: LieAlgebra,
    *,
    seed: int = 0,
    samples: int = 3,
    bound: int = sampling.DEFAULT_BOUND,
    widen: int = 3,
) -> IndexResult:
    """Generic corank of the Poisson tensor, from independent random points.

    Disagreeing witnesses trigger a resample with coordinates drawn from a
    1000x wider range; if they still disagree the result is an error.
    """
    attempts = []
    for attempt in range(widen + 1):
        rngs = [sampling.rng_for(s) for s in sampling.child_seeds(seed, samples, salt=attempt)]
        witnesses = []
        for rng in rngs:
            x = sampling.random_vector(rng, L.dim, bound * 1000**attempt)
            witnesses.append((x, stabilizer_dim(L, x)))
        coranks = [c for _, c in witnesses]
        attempts.append(coranks)
        if len(set(coranks)) == 1:
            return IndexResult(coranks[0], tuple(witnesses))
    raise IndexDisagreement(attempts)


def ad_star(L: LieAlgebra, a, nu) -> Row:
    """Coadjoint action: (ad*_a nu)(b) = -nu([a, b])."""
    a = as_row(a, L.dim)
    nu = as_row(nu, L.dim)
    out = [Fraction(0)] * L.dim
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(L.dim):
            s = sum((nu[k] * c for k, c in L.structure(i, j).items() if nu[k]), Fraction(0))
            if s:
                out[j] -= x * s
    return tuple(out)


@dataclass(frozen=True)
class Curve:
    """Polynomial path gamma(t) = sum_i coeffs[i] t^i in g*."""

    coeffs: tuple[Row, ...]
    algebra: LieAlgebra | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not self.coeffs:
            raise InputError("a curve needs at least its basepoint coefficient")
        object.__setattr__(self, "coeffs", tuple(as_row(c) for c in self.coeffs))
        if len({len(c) for c in self.coeffs}) != 1:
            raise InputError("curve coefficients of differing lengths")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def basepoint(self) -> Row:
        return self.coeffs[0]

    def velocity(self) -> Row:
        if self.degree == 0:
            return tuple(Fraction(0) for _ in self.coeffs[0])
        return self.coeffs[1]

    def __call__(self, t) -> Row:
        t = Fraction(t)
        out = [Fraction(0)] * len(self.coeffs[0])
        p = Fraction(1)
        for c in self.coeffs:
            for k, x in enumerate(c):
                if x:
                    out[k] += p * x
            p *= t
        return tuple(out)

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [[format_scalar(x) for x in c] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data, algebra: LieAlgebra | None = None) -> "Curve":
        try:
            coeffs = tuple(tuple(parse_scalar(x) for x in c) for c in data["coeffs"])
            degree = data.get("degree", len(coeffs) - 1)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad curve JSON: {exc}") from exc
        if degree != len(coeffs) - 1:
            raise InputError("curve degree does not match coefficient count")
        if algebra is not None and len(coeffs[0]) != algebra.dim:
            raise InputError("curve dimension does not match the algebra")
        return cls(coeffs, algebra)


def coadjoint_curve(L: LieAlgebra, mu, a, degree: int) -> Curve:
    """Degree-``degree`` truncation of t -> exp(t ad*_a) mu."""
    mu = as_row(mu, L.dim)
    coeffs = [mu]
    term = mu
    for i in range(1, degree + 1):
        term = ad_star(L, a, term)
        coeffs.append(tuple(x / factorial(i) for x in term))
    return Curve(tuple(coeffs), L)


@dataclass(frozen=True)
class Prop1Report:
    basepoint: Row
    k: int
    samples: tuple[Fraction, ...]
    in_stratum: tuple[bool, ...]
    velocity: Row
    derived_dim: int
    pairings: tuple[tuple[tuple[int, int], Fraction], ...]
    one_sided: bool = False

    @property
    def all_zero(self) -> bool:
        return all(v == 0 for _, v in self.pairings)


def verify_prop1(
    L: LieAlgebra,
    gamma: Curve,
    samples: Sequence,
    *,
    one_sided: bool = False,
    strict: bool = True,
) -> Prop1Report:
    """Pair the curve's initial velocity with the stabilizer's brackets.

    Every sample must keep the basepoint's stabilizer dimension; with
    ``strict`` a violation raises ``StratumExitError``.  ``one_sided``
    demands positive samples (right-derivative curves).
    """
    samples = tuple(Fraction(t) for t in samples)
    if one_sided and any(t <= 0 for t in samples):
        raise InputError("one-sided curves are sampled at t > 0 only")
    mu = gamma.basepoint
    if len(mu) != L.dim:
        raise InputError("curve dimension does not match the algebra")
    s = stabilizer(L, mu)
    flags = []
    for t in samples:
        kt = stabilizer_dim(L, gamma(t))
        ok = kt == s.dim
        if strict and not ok:
            raise StratumExitError(t, s.dim, kt)
        flags.append(ok)
    vel = gamma.velocity()
    table = bracket_table(L, s)
    derived = derived_subalgebra(L, s, table=table)
    pairings = tuple((ij, linalg.dot(vel, v)) for ij, v in sorted(table.items()))
    return Prop1Report(mu, s.dim, samples, tuple(flags), vel, derived.dim, pairings, one_sided)


@dataclass(frozen=True)
class InequalityReport:
    n: int
    k: int
    dim_derived: int
    orbit_dim: int
    stratum_dim: float | int
    exact: bool

    @property
    def codim(self):
        return self.n - self.stratum_dim

    @property
    def family_dim(self):
        """Local dimension of the family of same-dimensional orbits."""
        return self.stratum_dim - self.orbit_dim

    @property
    def slack(self):
        return self.codim - self.dim_derived

    @property
    def holds(self) -> bool:
        return self.slack >= 0

    @property
    def equality(self) -> bool:
        return self.slack == 0

    @property
    def non_linearizable_witness(self) -> bool:
        # linearizable transverse structure forces equality
        return self.slack > 0


def inequality_report(
    L: LieAlgebra, mu, stratum_dim, *, exact: bool | None = None, report=None
) -> InequalityReport:
    """``report`` may pass an existing ``analyze_point`` result for the same point."""
    rep = analyze_point(L, mu) if report is None else report
    if exact is None:
        exact = isinstance(stratum_dim, int)
    return InequalityReport(L.dim, rep.dim_stabilizer, rep.dim_derived, rep.orbit_dim, stratum_dim, exact)


@dataclass(frozen=True)
class CodimScan:
    k: int
    sample_count: int
    hits: int

    @property
    def frequency(self) -> float:
        return self.hits / self.sample_count if self.sample_count else 0.0


def corollary_codim_scan(L: LieAlgebra, k: int, sample_count: int, *, seed: int = 0) -> CodimScan:
    """Frequency of dim [g_mu, g_mu] >= k at random rational covectors."""
    hits = 0
    for ss in sampling.child_seeds(seed, sample_count, salt=7):
        mu = sampling.random_vector(sampling.rng_for(ss), L.dim)
        s = stabilizer(L, mu)
        d = 0 if s.dim < 2 else derived_subalgebra(L, s).dim
        if d >= k:
            hits += 1
    return CodimScan(k, sample_count, hits)
