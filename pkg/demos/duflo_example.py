"""
A stratum that is not a linear subspace
=======================================

The four-dimensional Duflo algebra has a stratum of points with a
two-dimensional stabilizer, lying in the hyperplane x4 = 0.  At (0, 1, 0, 0) the stabilizer is abelian, yet the stratum
has codimension 1, so the inequality ``dim [g_mu, g_mu] <= codim`` is strict.
"""

from liestrata import analyze_point
from liestrata.catalog import make
from liestrata.estimator import estimate_stratum_dim
from liestrata.stabilizer import singular_polynomial
from liestrata.strata import compute_index, inequality_report

L = make("duflo").algebra
print(L.name, "of dimension", L.dim)

# a generic point has trivial stabilizer, so the index is 0
print("index:", compute_index(L).ind)

# the locus where the stabilizer jumps is cut out by one polynomial
print("singular polynomial:", singular_polynomial(L).as_expr())

mu = (0, 1, 0, 0)
rep = analyze_point(L, mu)
print("dim g_mu:", rep.dim_stabilizer, " dim [g_mu, g_mu]:", rep.dim_derived)

# the stratum through mu is curved, so its dimension is estimated numerically
est = estimate_stratum_dim(L, mu, seed=0)
print("estimated stratum dimension:", est.dim_estimate)
print("singular values:", ", ".join(f"{x:.2e}" for x in est.singular_values))

ineq = inequality_report(L, mu, est.dim_estimate, exact=False)
print("codim:", ineq.codim, " slack:", ineq.slack, " witness:", ineq.non_linearizable_witness)
