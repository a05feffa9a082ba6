"""
Strata of gl(n) through diagonal matrices
=========================================

For a diagonal matrix the stabilizer is a product of gl(m_i) over the
eigenvalue multiplicities, its derived algebra is the product of sl(m_i),
and the stratum has codimension sum(m_i^2) - (number of distinct eigenvalues).
Both inequalities hold with equality.
"""

from fractions import Fraction

from liestrata import analyze_point
from liestrata.catalog import make
from liestrata.matrix_lie import diag, partitions, sheet_tangent_semisimple
from liestrata.strata import inequality_report

n = 4
R = make("gl", n).realization
print(f"{'multiplicities':>16}  dim g_mu  derived  codim  slack")
for pattern in partitions(n):
    eigs = [Fraction(i + 1) for i, k in enumerate(pattern) for _ in range(k)]
    m = diag(eigs)
    mu = R.covector(m)
    rep = analyze_point(R.algebra, mu)
    ineq = inequality_report(R.algebra, mu, sheet_tangent_semisimple(R, m).dim, report=rep)
    print(f"{str(pattern):>16}  {rep.dim_stabilizer:8d}  {rep.dim_derived:7d}  {ineq.codim:5d}  {ineq.slack:5d}")
