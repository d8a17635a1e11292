"""Command-line entry point: ``eqhodge <command> CONFIG [--json] [--check]``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import checks
from .basechange import Hypothesis, base_change, tjurina_class
from .chi_engine import (
    BundleSpec, evaluate, full_diamond, hodge_middle, weierstrass_lemma_vectors,
)
from .config import JobConfig, load_config
from .covers import (
    SuperellipticCover, cover_report, lemcan_symmetric, superelliptic_differentials_oracle,
)
from .errors import ConfigError, EqHodgeError
from .mw_bound import mw_report
from .report import (
    basechange_dict, chi_dict, class_dict, cover_dict, dumps, module_dict, mw_dict,
    surface_dict, to_text,
)
from .weierstrass import surface_report


def _surface(cfg: JobConfig):
    cfg.need("surface")
    return surface_report(cfg.surface, allow_isotrivial=cfg.allow_isotrivial)


def cmd_analyze(cfg: JobConfig) -> dict:
    return {"surface": surface_dict(_surface(cfg))}


def cmd_basechange(cfg: JobConfig) -> dict:
    cfg.need("surface", "cover")
    sr = _surface(cfg)
    bc = base_change(sr, cfg.cover)
    return {"surface": surface_dict(sr), "cover": cover_dict(cover_report(cfg.cover)),
            "basechange": basechange_dict(bc)}


def _evaluated_diamond(bundle: BundleSpec, cr, tjurina=None, singular=False) -> dict:
    diamond = full_diamond(bundle, singular)
    n = bundle.dim
    out = {}
    for p in range(n + 1):
        for q in range(n + 1):
            cls = diamond[p][q]
            entry = {"symbolic": class_dict(cls)}
            entry["module"] = (module_dict(evaluate(cls, cr, tjurina))
                               if not cls.delta or tjurina is not None else None)
            out[f"{p},{q}"] = entry
    return out


def cmd_hodge(cfg: JobConfig) -> dict:
    cfg.need("surface", "cover")
    sr = _surface(cfg)
    bc = base_change(sr, cfg.cover)
    cr = cover_report(cfg.cover)
    bundle = BundleSpec.weierstrass(sr.deg_L)
    tj = bc.tjurina
    out = {
        "hypothesis": bc.hypothesis.value,
        "genus_up": cr.genus_up,
        "resolved": _evaluated_diamond(bundle, cr),
    }
    sing = hodge_middle(1, bundle, singular=True)
    out["weierstrass_model_h11"] = {
        "symbolic": class_dict(sing),
        "module": module_dict(evaluate(sing, cr, tj)) if tj is not None else None,
        "note": None if tj is not None else
        "Tjurina class unavailable: a multiplicative fiber lies over a branch point",
    }
    if cfg.check_level == "full":
        out["checks"] = checks.check_diamond(bundle, cr, tj)
    return out


def cmd_mwbound(cfg: JobConfig) -> dict:
    cfg.need("surface", "cover")
    sr = _surface(cfg)
    return {"surface": {"n": sr.deg_L, "d_E": sr.d_E, "c_E": sr.c_E, "mu": sr.mu},
            "mwbound": mw_dict(mw_report(sr, cfg.cover, cfg.epsilon))}


def cmd_engine(cfg: JobConfig) -> dict:
    cfg.need("bundle")
    b = cfg.bundle
    spec = b.spec
    diamond = full_diamond(spec, b.singular)
    out = {
        "bundle": {"degrees": list(spec.degrees), "ell": spec.ell, "d": spec.d, "r": spec.r},
        "table": {f"{p},{q}": class_dict(diamond[p][q])
                  for p in range(spec.dim + 1) for q in range(spec.dim + 1)},
    }
    if b.p is not None or b.q is not None:
        if b.p is None or b.q is None:
            raise ConfigError("give both bundle.p and bundle.q")
        if not (0 <= b.p <= spec.dim and 0 <= b.q <= spec.dim):
            raise ConfigError(f"(p,q) = ({b.p},{b.q}) out of range 0..{spec.dim}")
        out["selected"] = {"p": b.p, "q": b.q, **class_dict(diamond[b.p][b.q])}
    if spec.r == 3 and spec == BundleSpec.weierstrass(-spec.degrees[1] // 2):
        out["euler_characteristics"] = {k: chi_dict(v) for k, v in
                                        weierstrass_lemma_vectors(spec).items()}
    if cfg.cover is not None:
        cr = cover_report(cfg.cover)
        out["evaluated"] = {k: v["module"] for k, v in
                            _evaluated_diamond(spec, cr, None, b.singular).items()}
    if cfg.check_level == "full":
        out["checks"] = checks.check_regression()
    return out


def cmd_oracle(cfg: JobConfig) -> dict:
    cfg.need("cover")
    cover = cfg.cover
    if not isinstance(cover, SuperellipticCover):
        raise ConfigError("the oracle command needs a superelliptic cover")
    cr = cover_report(cover)
    oracle = superelliptic_differentials_oracle(cover.m, cover.f)
    sym = lemcan_symmetric(cover)
    return {
        "m": cover.m,
        "f": cover.f.to_json(),
        "genus_up": cr.genus_up,
        "oracle": list(oracle.mult),
        "h0_K": list(cr.h0_K.mult),
        "h0_K_plus_dual": list(sym.mult),
        "agree": oracle == cr.h0_K and oracle + oracle.dual() == sym,
    }


COMMANDS: dict[str, Callable[[JobConfig], dict]] = {
    "analyze": cmd_analyze,
    "basechange": cmd_basechange,
    "hodge": cmd_hodge,
    "mwbound": cmd_mwbound,
    "engine": cmd_engine,
    "oracle": cmd_oracle,
}


def _full_checks(cfg: JobConfig, result: dict) -> list[str]:
    done = list(result.get("checks", []))
    if "regression n=1" not in done:
        done += checks.check_regression()
    if cfg.cover is not None:
        done += checks.check_oracle(cfg.cover)
    if cfg.surface is not None and cfg.cover is not None:
        sr = _surface(cfg)
        bc = base_change(sr, cfg.cover)
        cr = cover_report(cfg.cover)
        if not any(c.startswith("diamond") for c in done):
            done += checks.check_diamond(BundleSpec.weierstrass(sr.deg_L), cr, bc.tjurina)
        if bc.hypothesis is Hypothesis.SMOOTH_BRANCH:
            mw_report(sr, cfg.cover, None)  # runs the two-path H^{1,1} check
            done.append("two-path H^{1,1}")
        if tjurina_class(sr, cfg.cover, bc.hypothesis) is not None:
            done.append("tjurina available")
    return done


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eqhodge", description=__doc__)
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("config", help="TOML job file")
    ap.add_argument("--json", action="store_true", help="force JSON output")
    ap.add_argument("--check", action="store_true", help="run every cross-module check")
    return ap


def run(argv=None) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.check:
            cfg.check_level = "full"
        result = COMMANDS[args.command](cfg)
        if cfg.check_level == "full":
            result["checks"] = _full_checks(cfg, result)
        text = dumps(result) if (args.json or cfg.output == "json") else to_text(result)
        return 0, text
    except EqHodgeError as exc:
        err = {"error": {"kind": type(exc).__name__, "message": str(exc),
                         "exit_code": exc.exit_code}}
        violations = getattr(exc, "violations", None)
        if violations:
            err["error"]["violations"] = [
                {"place": v.cluster.place.label(), "message": v.message,
                 "suggested_n": v.suggested_n} for v in violations]
        return exc.exit_code, json.dumps(err, indent=2)
    except Exception as exc:  # noqa: BLE001 - any other failure is internal
        err = {"error": {"kind": type(exc).__name__, "message": str(exc), "exit_code": 4}}
        return 4, json.dumps(err, indent=2)


def main(argv=None) -> int:
    code, text = run(argv)
    print(text, file=sys.stdout if code == 0 else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
