"""JSON-ready dictionaries for every result type, plus a plain-text renderer.

Every number is wrapped as ``{"value": ..., "exact": bool}``; rationals are
written as ``"p/q"`` strings and floats always carry ``"exact": false``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import Subspace
from .linalg import format_scalar


def fig(value, exact: bool = True) -> dict:
    if isinstance(value, float):
        return {"value": value, "exact": False}
    if isinstance(value, Fraction):
        return {"value": format_scalar(value), "exact": exact}
    return {"value": value, "exact": exact}


def vec(v) -> list[str]:
    return [format_scalar(x) for x in v]


def subspace(s: Subspace) -> dict:
    return {"dim": fig(s.dim), "space": s.space_tag, "basis": s.to_json(), "exact": True}


def matrix(m) -> list[list[str]]:
    return [vec(r) for r in m]


def stabilizer_report(rep, stype=None) -> dict:
    out = {
        "mu": vec(rep.mu),
        "dim_stabilizer": fig(rep.dim_stabilizer),
        "dim_derived": fig(rep.dim_derived),
        "orbit_dim": fig(rep.orbit_dim),
        "stabilizer": subspace(rep.stabilizer),
        "derived": subspace(rep.derived),
        "center_of_stabilizer": subspace(rep.center_of_stabilizer),
    }
    if stype is not None:
        out["stabilizer_type"] = stype.value
    return out


def prop1_report(rep) -> dict:
    return {
        "basepoint": vec(rep.basepoint),
        "k": fig(rep.k),
        "samples": [fig(t) for t in rep.samples],
        "in_stratum": list(rep.in_stratum),
        "velocity": vec(rep.velocity),
        "derived_dim": fig(rep.derived_dim),
        "pairings": [{"i": fig(i), "j": fig(j), "value": fig(v)} for (i, j), v in rep.pairings],
        "all_pairings_zero": rep.all_zero,
        "one_sided": rep.one_sided,
    }


def inequality_report(rep, provenance=None) -> dict:
    ex = rep.exact
    return {
        "n": fig(rep.n),
        "k": fig(rep.k),
        "dim_derived": fig(rep.dim_derived),
        "orbit_dim": fig(rep.orbit_dim),
        "stratum_dim": fig(rep.stratum_dim, ex),
        "stratum_dim_provenance": provenance,
        "codim": fig(rep.codim, ex),
        "inequality_1": {"lhs": fig(rep.dim_derived), "rhs": fig(rep.codim, ex)},
        "inequality_2": {"lhs": fig(rep.family_dim, ex), "rhs": fig(rep.k - rep.dim_derived)},
        "slack": fig(rep.slack, ex),
        "holds": rep.holds,
        "equality": rep.equality,
        "non_linearizable_witness": rep.non_linearizable_witness,
    }


def index_report(res) -> dict:
    return {
        "ind": fig(res.ind),
        "witnesses": [{"point": vec(p), "corank": fig(c)} for p, c in res.witnesses],
    }


def estimate_report(est) -> dict:
    return {
        "dim_estimate": fig(est.dim_estimate, False),
        "rank_at_point": fig(est.rank),
        "singular_values": [fig(float(x)) for x in est.singular_values],
        "sample_count": fig(est.sample_count),
        "failures": fig(est.failures),
    }


def sheet_report(rep, jt=None) -> dict:
    out = {
        "mu": matrix(rep.mu),
        "dim_centralizer": fig(rep.centralizer.dim),
        "dim_derived": fig(rep.derived.dim),
        "dim_orbit": fig(rep.orbit_tangent.dim),
        "dim_sheet": fig(rep.tangent.dim),
        "codim_sheet": fig(rep.n - rep.tangent.dim),
        "tangent": subspace(rep.tangent),
        "derived": subspace(rep.derived),
        "perp_of_tangent": subspace(rep.perp),
        "orthogonal": rep.orthogonal,
        "sheet_eq": rep.sheet_eq,
        "dim_derived_equals_codim": rep.dim_equals_codim,
        "family_identity": rep.family_identity,
        "statements_agree": rep.statements_agree,
    }
    if jt is not None:
        out["jordan_type"] = jt.to_json()
    return out


def envelope(command: str, seed: int, result, **extra) -> dict:
    out = {"command": command, "seed": fig(seed), "result": result}
    out.update(extra)
    return out


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


# -- plain text ---------------------------------------------------------------------

def _is_fig(v):
    return isinstance(v, dict) and set(v) == {"value", "exact"}


def _scalar_text(v):
    if _is_fig(v):
        x = v["value"]
        text = f"{x:.6g}" if isinstance(x, float) else str(x)
        return text if v["exact"] else text + "~"
    if isinstance(v, list) and all(isinstance(x, str) for x in v):
        return "(" + ", ".join(v) + ")"
    if isinstance(v, str):
        return v
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    return None


def _is_table(v):
    return isinstance(v, list) and v and all(isinstance(x, dict) and not _is_fig(x) for x in v)


def _table(rows) -> list[str]:
    cols = list(rows[0])
    cells = [[_scalar_text(r[c]) or json.dumps(r[c], sort_keys=True) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
    return lines


def render_text(data, prefix: str = "") -> str:
    """Field-for-field text view of a report; ``~`` marks inexact numbers."""
    lines: list[str] = []

    def walk(obj, path):
        s = _scalar_text(obj)
        if s is not None:
            lines.append(f"{path}: {s}")
        elif isinstance(obj, dict):
            for k in sorted(obj):
                walk(obj[k], f"{path}.{k}" if path else k)
        elif _is_table(obj):
            lines.append(f"{path}:")
            lines.extend("  " + ln for ln in _table(obj))
        elif isinstance(obj, list):
            if obj and all(isinstance(x, list) for x in obj):
                lines.append(f"{path}:")
                lines.extend("  " + (_scalar_text(x) or json.dumps(x)) for x in obj)
            else:
                lines.append(f"{path}: [" + ", ".join(_scalar_text(x) or json.dumps(x) for x in obj) + "]")
        else:
            lines.append(f"{path}: {json.dumps(obj)}")

    walk(data, prefix)
    return "\n".join(lines) + "\n"
