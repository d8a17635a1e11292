"""Plain-dict (JSON-ready) views of the pipeline results.

Key order is insertion order and therefore stable.  Infinite valuations are
written as the string "inf".
"""

from __future__ import annotations

import json
import math
from typing import Any, Optional

from .basechange import BaseChangeReport
from .chi_engine import SymbolicChi, SymbolicClass
from .covers import CoverReport, as_abstract
from .mw_bound import MWReport
from .polyfield import ValuationCluster
from .repring import VirtualModule
from .weierstrass import FiberData, SurfaceReport


def _num(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return int(x)


def module_dict(M: Optional[VirtualModule]) -> Optional[dict]:
    if M is None:
        return None
    return {"mult": list(M.mult), "dimension": M.dimension}


def cluster_dict(c: ValuationCluster) -> dict:
    return {
        "place": c.place.label(),
        "factor": None if c.place.is_infinity else c.place.factor.to_json(),
        "deg": c.deg,
        "vA": _num(c.vA),
        "vB": _num(c.vB),
        "vD": _num(c.vD),
    }


def fiber_dict(f: FiberData) -> dict:
    out = cluster_dict(f.cluster)
    out.update(kodaira=f.kodaira.code, milnor=f.milnor, euler=f.euler,
               conductor_exp=f.conductor_exp)
    return out


def surface_dict(r: SurfaceReport) -> dict:
    return {
        "n": r.deg_L,
        "A": r.surface.A.to_json(),
        "B": r.surface.B.to_json(),
        "d_E": r.d_E,
        "c_E": r.c_E,
        "mu": r.mu,
        "isotrivial": r.isotrivial,
        "fibers": [fiber_dict(f) for f in r.fibers],
    }


def cover_dict(cr: CoverReport) -> dict:
    c = as_abstract(cr.cover)
    t = c.table
    return {
        "group_order": c.order,
        "characters": [{"index": i, "dim": t.dims[i], "dual": t.dual_perm[i]}
                       for i in range(t.size)],
        "base_genus": c.genus,
        "genus_up": cr.genus_up,
        "s": cr.s,
        "branch": [{"place": b.place if isinstance(b.place, str) else b.place.label(),
                    "npoints": b.npoints, "inertia": b.inertia,
                    "e": c.group.element_order(b.inertia)} for b in c.branch],
        "h0_OZ": module_dict(cr.h0_OZ),
        "h0_K": module_dict(cr.h0_K),
        "chi_O": module_dict(cr.chi_O),
    }


def basechange_dict(bc: BaseChangeReport) -> dict:
    return {
        "hypothesis": bc.hypothesis.value,
        "group_order": bc.group_order,
        "fibers_up": [{"kodaira": u.kodaira.code, "count": u.count, "e": u.e,
                       "below": u.source.kodaira.code,
                       "below_place": u.source.cluster.place.label()}
                      for u in bc.fibers_up],
        "mu_up": bc.mu_up,
        "c_E_up": bc.c_E_up,
        "d_E_up": bc.d_E_up,
        "tjurina": module_dict(bc.tjurina),
    }


def chi_dict(x: SymbolicChi) -> dict:
    cG, cO = x.identified_pair()
    return {"cG": cG, "cO": cO, "cO_plain": x.cO, "cO_dual": x.cOd}


def class_dict(x: SymbolicClass) -> dict:
    a, b, c, d = x.coefficients()
    return {"a": a, "b": b, "c": c, "delta": d, "b_plain": x.b, "b_dual": x.b_dual}


def mw_dict(r: MWReport) -> dict:
    return {
        "M": list(r.M.mult),
        "rank_bound_dim": r.rank_bound_dim,
        "pal_bound": r.pal_bound,
        "epsilon": r.epsilon,
        "per_isotypic": [{"character": i, "dim": d, "mult": k} for i, d, k in r.per_isotypic],
        "pal_bound_plus_variant": r.pal_bound_plus_variant,
        "discrepancy_note": r.discrepancy_note,
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def to_text(obj: Any, indent: int = 0) -> str:
    """Indented key: value rendering of a report dict."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(to_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(to_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(f"{pad}{_inline(obj)}")
    return "\n".join(lines)


def _flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _inline(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)
