"""Job configuration files (TOML).

Example::

    epsilon = 2
    output = "json"          # or "text"
    check_level = "full"     # or "fast"

    [surface]
    n = 1
    A = ["0", "1"]           # coefficients, lowest degree first; "num/den" allowed
    B = ["0", "1"]

    [cover]
    type = "abstract"        # or "superelliptic" with m = 2, f = [...]
    genus = 0
    [cover.group]
    kind = "cyclic"          # cyclic | dihedral | table
    order = 2
    [[cover.branch]]
    point = "1"              # rational, "inf", {factor = [...]}, or a bare label
    inertia = 1

    [bundle]
    weierstrass_n = 1        # or degrees = [...], ell = ..., d = ...
    p = 1
    q = 1
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .chi_engine import BundleSpec
from .covers import AbstractCover, Branch, Cover, SuperellipticCover
from .errors import ConfigError, EqHodgeError
from .polyfield import INFINITY, Place, Poly, parse_rational
from .repring import FiniteGroup, character_table, cyclic_table, dihedral_table
from .weierstrass import WeierstrassSurface


@dataclass
class BundleConfig:
    spec: BundleSpec
    p: Optional[int] = None
    q: Optional[int] = None
    singular: bool = False


@dataclass
class JobConfig:
    surface: Optional[WeierstrassSurface] = None
    cover: Optional[Cover] = None
    bundle: Optional[BundleConfig] = None
    epsilon: Optional[int] = None
    output: str = "json"
    check_level: str = "fast"
    allow_isotrivial: bool = False

    def need(self, *sections: str) -> None:
        missing = [s for s in sections if getattr(self, s) is None]
        if missing:
            raise ConfigError("config is missing section(s): " + ", ".join(missing))


def _poly(raw: Any, what: str) -> Poly:
    if not isinstance(raw, list):
        raise ConfigError(f"{what} must be a list of coefficients, lowest degree first")
    try:
        return Poly(raw)
    except ValueError as exc:
        raise ConfigError(f"{what}: {exc}") from None


def _int(raw: Any, what: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise ConfigError(f"{what} must be an integer, got {raw!r}")
    return raw


def _surface(raw: dict) -> WeierstrassSurface:
    try:
        n = _int(raw["n"], "surface.n")
        A, B = _poly(raw["A"], "surface.A"), _poly(raw["B"], "surface.B")
    except KeyError as exc:
        raise ConfigError(f"surface section needs key {exc.args[0]!r}") from None
    try:
        return WeierstrassSurface(n, A, B)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _point(raw: Any):
    if isinstance(raw, dict):
        if "factor" not in raw:
            raise ConfigError("branch point tables need a 'factor' key")
        f = _poly(raw["factor"], "branch factor")
        if f.degree < 1:
            raise ConfigError("branch factor must be non-constant")
        return Place(f.monic())
    if isinstance(raw, str) and raw.strip().lower() in ("inf", "infinity"):
        return INFINITY
    if isinstance(raw, (int, str)) and not isinstance(raw, bool):
        try:
            return Place.at(parse_rational(raw))
        except ValueError:
            if isinstance(raw, str) and raw.strip():
                return raw.strip()
    raise ConfigError(f"cannot read branch point {raw!r}")


def _group_table(raw: dict):
    kind = raw.get("kind", "cyclic")
    if kind == "cyclic":
        return cyclic_table(_int(raw.get("order"), "cover.group.order"))
    if kind == "dihedral":
        order = _int(raw.get("order"), "cover.group.order")
        if order < 6 or order % 2:
            raise ConfigError("dihedral groups need an even order >= 6")
        return dihedral_table(order // 2)
    if kind == "table":
        try:
            group = FiniteGroup(raw["cayley"], raw.get("identity", 0), raw.get("name", "G"))
            chars = [[complex(*v) if isinstance(v, list) else complex(v) for v in row]
                     for row in raw["characters"]]
        except KeyError as exc:
            raise ConfigError(f"table groups need key {exc.args[0]!r}") from None
        return character_table(group, ("user", chars))
    raise ConfigError(f"unknown group kind {kind!r}")


def _cover(raw: dict) -> Cover:
    kind = raw.get("type")
    if kind == "superelliptic":
        return SuperellipticCover(_int(raw.get("m"), "cover.m"), _poly(raw.get("f"), "cover.f"))
    if kind == "abstract":
        table = _group_table(raw.get("group", {}))
        branch = []
        for b in raw.get("branch", []):
            if "point" not in b or "inertia" not in b:
                raise ConfigError("each branch entry needs 'point' and 'inertia'")
            branch.append(Branch(_point(b["point"]), _int(b["inertia"], "inertia")))
        return AbstractCover(table, _int(raw.get("genus", 0), "cover.genus"), tuple(branch))
    raise ConfigError(f"cover.type must be 'superelliptic' or 'abstract', got {kind!r}")


def _bundle(raw: dict) -> BundleConfig:
    if "weierstrass_n" in raw:
        spec = BundleSpec.weierstrass(_int(raw["weierstrass_n"], "bundle.weierstrass_n"))
    else:
        try:
            spec = BundleSpec(tuple(_int(a, "bundle.degrees") for a in raw["degrees"]),
                              _int(raw["ell"], "bundle.ell"), _int(raw["d"], "bundle.d"),
                              bool(raw.get("assumptions_asserted", True)))
        except KeyError as exc:
            raise ConfigError(f"bundle section needs key {exc.args[0]!r}") from None
    p = raw.get("p")
    q = raw.get("q")
    return BundleConfig(spec, None if p is None else _int(p, "bundle.p"),
                        None if q is None else _int(q, "bundle.q"),
                        bool(raw.get("singular", False)))


def parse_config(data: dict) -> JobConfig:
    cfg = JobConfig()
    try:
        if "surface" in data:
            cfg.surface = _surface(data["surface"])
            cfg.allow_isotrivial = bool(data["surface"].get("allow_isotrivial", False))
        if "cover" in data:
            cfg.cover = _cover(data["cover"])
        if "bundle" in data:
            cfg.bundle = _bundle(data["bundle"])
    except ConfigError:
        raise
    except EqHodgeError as exc:
        raise ConfigError(str(exc)) from None
    if "epsilon" in data:
        cfg.epsilon = _int(data["epsilon"], "epsilon")
        if cfg.epsilon < 1:
            raise ConfigError("epsilon must be positive")
    cfg.output = data.get("output", "json")
    if cfg.output not in ("json", "text"):
        raise ConfigError("output must be 'json' or 'text'")
    cfg.check_level = data.get("check_level", "fast")
    if cfg.check_level not in ("fast", "full"):
        raise ConfigError("check_level must be 'fast' or 'full'")
    return cfg


def load_config(path) -> JobConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return parse_config(data)
