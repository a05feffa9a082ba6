"""Floating-point local dimension of a stratum g*_k near a point.

Points near mu are Newton-projected onto {nu : rank B(nu) <= rank B(mu)}.
The projection map's derivative along random directions (central
differences, Richardson-extrapolated) gives tangent vectors, and the
dimension is the number of singular values above ``tol`` times the largest.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg, sampling
from .algebra import LieAlgebra, as_row
from .errors import ConvergenceError
from .stabilizer import poisson_tensor
from .strata import compute_index

DEFAULT_TOL = 1e-6
DEFAULT_RADIUS = 1e-3
DEFAULT_SAMPLES = 64
DEFAULT_RETRIES = 5


@dataclass(frozen=True)
class StratumDimEstimate:
    dim_estimate: int
    singular_values: tuple[float, ...]
    rank: int
    sample_count: int
    failures: int
    exact: bool = False


def _structure_tensor(L: LieAlgebra) -> np.ndarray:
    c = np.zeros((L.dim, L.dim, L.dim))
    for (i, j), row in L.constants.items():
        for k, x in row.items():
            c[k, i, j] = float(x)
            c[k, j, i] = -float(x)
    return c


class _SchurSystem:
    """Local equations S(nu) = 0 for rank B(nu) <= r near a rank-r point."""

    def __init__(self, c: np.ndarray, keep: list[int]):
        n = c.shape[0]
        self.c = c
        self.keep = np.array(keep, dtype=int)
        self.rest = np.array([i for i in range(n) if i not in set(keep)], dtype=int)
        m = len(self.rest)
        self.iu = np.triu_indices(m, 1)

    def _blocks(self, b):
        k, r = self.keep, self.rest
        return b[np.ix_(k, k)], b[np.ix_(k, r)], b[np.ix_(r, k)], b[np.ix_(r, r)]

    def residual_and_jacobian(self, nu: np.ndarray):
        b = np.tensordot(nu, self.c, axes=1)
        a, bm, cm, d = self._blocks(b)
        ainv_bm = np.linalg.solve(a, bm)
        cm_ainv = np.linalg.solve(a.T, cm.T).T
        s = d - cm @ ainv_bm
        ak = self.c[:, self.keep][:, :, self.keep]
        bk = self.c[:, self.keep][:, :, self.rest]
        ck = self.c[:, self.rest][:, :, self.keep]
        dk = self.c[:, self.rest][:, :, self.rest]
        ds = (
            dk
            - np.einsum("kij,jl->kil", ck, ainv_bm)
            - np.einsum("ij,kjl->kil", cm_ainv, bk)
            + np.einsum("ij,kjl,lm->kim", cm_ainv, ak, ainv_bm)
        )
        f = s[self.iu]
        jac = ds[:, self.iu[0], self.iu[1]].T
        return f, jac


def _project(system: _SchurSystem, x0: np.ndarray, max_iter: int = 300) -> np.ndarray | None:
    x = x0.copy()
    scale = max(1.0, float(np.linalg.norm(x0)))
    for _ in range(max_iter):
        f, jac = system.residual_and_jacobian(x)
        step = np.linalg.lstsq(jac, f, rcond=None)[0]
        x = x - step
        if not np.all(np.isfinite(x)):
            return None
        if np.linalg.norm(step) <= 1e-15 * scale:
            return x
    return None


def _tangent_estimate(system, mu, u, h, retries_left):
    def proj(p):
        out = _project(system, p)
        if out is None or np.linalg.norm(out - mu) > 10 * np.linalg.norm(p - mu) + 1e-12:
            return None
        return out

    vals = []
    for step in (h, h / 2):
        plus, minus = proj(mu + step * u), proj(mu - step * u)
        if plus is None or minus is None:
            return None
        vals.append((plus - minus) / (2 * step))
    return (4 * vals[1] - vals[0]) / 3


def estimate_stratum_dim(
    L: LieAlgebra,
    mu,
    *,
    radius: float = DEFAULT_RADIUS,
    tol: float = DEFAULT_TOL,
    sample_count: int = DEFAULT_SAMPLES,
    retries: int = DEFAULT_RETRIES,
    seed: int = 0,
) -> StratumDimEstimate:
    mu_q = as_row(mu, L.dim)
    n = L.dim
    bt = poisson_tensor(L, mu_q)
    r = bt.rank()
    generic_rank = n - compute_index(L, seed=seed).ind
    if r == generic_rank:
        sv = (1.0,) * n
        return StratumDimEstimate(n, sv, r, 0, 0)
    # rows of B(mu) forming a basis of its row space give a nonsingular principal block
    keep = linalg.rref(linalg.transpose(bt.matrix), n)[1]
    system = _SchurSystem(_structure_tensor(L), keep)
    mu_f = np.array([float(x) for x in mu_q])
    tangents = []
    failures = 0
    for ss in sampling.child_seeds(seed, sample_count, salt=97):
        rng = np.random.default_rng(ss)
        for _ in range(retries):
            u = rng.standard_normal(n)
            u /= np.linalg.norm(u)
            t = _tangent_estimate(system, mu_f, u, radius, retries)
            if t is not None:
                tangents.append(t)
                break
            failures += 1
        else:
            raise ConvergenceError(f"Newton projection failed {retries} times for one sample")
    sv = np.linalg.svd(np.array(tangents), compute_uv=False)
    dim = int(np.sum(sv > tol * sv[0])) if sv[0] > 0 else 0
    return StratumDimEstimate(dim, tuple(float(x) for x in sv), r, sample_count, failures)
