"""Finite groups, character tables and the representation ring K(C[G]).

Groups are explicit Cayley tables on elements ``0..order-1``.  Character
values are complex floats; every multiplicity derived from them is rounded
to an integer with the residual checked against ``MULT_TOL``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .errors import InconsistentData

ORTHO_TOL = 1e-9
MULT_TOL = 1e-6


def round_multiplicity(x: complex, what: str = "multiplicity") -> int:
    r = round(x.real)
    if abs(x - r) > MULT_TOL:
        raise InconsistentData(f"non-integral {what}: {x!r}")
    return int(r)


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[a, b]`` is the index of the product ``a*b``.
    """

    def __init__(self, table, identity: int = 0, name: str = "G"):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise InconsistentData("Cayley table must be a non-empty square matrix")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise InconsistentData("Cayley table entries out of range")
        if not 0 <= identity < n:
            raise InconsistentData("identity index out of range")
        ar = np.arange(n)
        if not (np.array_equal(t[identity], ar) and np.array_equal(t[:, identity], ar)):
            raise InconsistentData(f"element {identity} is not a two-sided identity")
        # Latin square <=> unique solutions of ax=b, ya=b.
        for row in t:
            if len(np.unique(row)) != n:
                raise InconsistentData("Cayley table is not a Latin square")
        for col in t.T:
            if len(np.unique(col)) != n:
                raise InconsistentData("Cayley table is not a Latin square")
        t = np.ascontiguousarray(t)
        if _kernels.associativity_failures(t):
            raise InconsistentData("multiplication table is not associative")
        self.table = t
        self.table.setflags(write=False)
        self.order = n
        self.identity = int(identity)
        self.name = name
        inv = np.argmax(t == identity, axis=1)
        self.inverses = np.ascontiguousarray(inv.astype(np.int64))
        self.inverses.setflags(write=False)

    @classmethod
    def cyclic(cls, m: int) -> "FiniteGroup":
        """Z/m with element k standing for g^k."""
        if m < 1:
            raise ValueError("cyclic group order must be positive")
        ar = np.arange(m)
        return cls((ar[:, None] + ar[None, :]) % m, 0, f"Z/{m}")

    @classmethod
    def dihedral(cls, m: int) -> "FiniteGroup":
        """Dihedral group of order 2m; index k + m*e stands for r^k s^e."""
        if m < 2:
            raise ValueError("dihedral group needs m >= 2")
        n = 2 * m
        t = np.empty((n, n), dtype=np.int64)
        for x in range(n):
            k1, e1 = x % m, x // m
            for y in range(n):
                k2, e2 = y % m, y // m
                # r^k1 s^e1 r^k2 s^e2 = r^(k1 + (-1)^e1 k2) s^(e1+e2)
                k = (k1 + (k2 if e1 == 0 else -k2)) % m
                t[x, y] = k + m * ((e1 + e2) % 2)
        return cls(t, 0, f"D{m}")

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse(a), -k
        result = self.identity
        for _ in range(k):
            result = int(self.table[result, a])
        return result

    def element_order(self, a: int) -> int:
        return int(self.element_orders()[a])

    def element_orders(self) -> np.ndarray:
        if not hasattr(self, "_orders"):
            self._orders = _kernels.element_orders(self.table, self.identity)
        return self._orders

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def conjugacy_classes(group: FiniteGroup) -> list[tuple[int, ...]]:
    """Conjugacy classes as sorted element tuples, ordered by smallest member.

    The identity's class is always the singleton ``(identity,)``; it sits
    first whenever the identity is element 0.
    """
    labels = _kernels.conjugacy_labels(group.table, group.inverses)
    classes: dict[int, list[int]] = {}
    for x, lab in enumerate(labels.tolist()):
        classes.setdefault(lab, []).append(x)
    out = [tuple(v) for _, v in sorted(classes.items())]
    if (group.identity,) not in out:
        raise InconsistentData("identity is not a singleton class")
    return out


@dataclass(eq=False)
class CharacterTable:
    """Irreducible characters of ``group``; ``values[i, c]`` is chi_i on class c."""

    group: FiniteGroup
    classes: list[tuple[int, ...]]
    values: np.ndarray
    class_of: np.ndarray = field(init=False)
    dims: tuple[int, ...] = field(init=False)
    trivial_index: int = field(init=False)
    dual_perm: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        g = self.group
        self.values = np.asarray(self.values, dtype=complex)
        k = len(self.classes)
        if self.values.shape != (k, k):
            raise InconsistentData(
                f"character matrix has shape {self.values.shape}, expected {(k, k)}")
        self.class_of = np.empty(g.order, dtype=np.int64)
        for ci, cl in enumerate(self.classes):
            self.class_of[list(cl)] = ci
        sizes = np.array([len(c) for c in self.classes], dtype=float)
        id_col = int(self.class_of[g.identity])
        gram = (self.values * sizes) @ self.values.conj().T / g.order
        if not np.allclose(gram, np.eye(k), atol=ORTHO_TOL, rtol=0):
            err = np.abs(gram - np.eye(k)).max()
            raise InconsistentData(f"character table fails row orthogonality (max error {err:.3g})")
        dims = []
        for v in self.values[:, id_col]:
            dims.append(round_multiplicity(v, "character degree"))
        if sum(d * d for d in dims) != g.order:
            raise InconsistentData("sum of squared degrees differs from |G|")
        self.dims = tuple(dims)
        triv = [i for i in range(k) if np.allclose(self.values[i], 1.0, atol=ORTHO_TOL)]
        if len(triv) != 1:
            raise InconsistentData("character table has no unique trivial row")
        self.trivial_index = triv[0]
        perm = []
        conj = self.values.conj()
        for i in range(k):
            match = [j for j in range(k) if np.allclose(conj[i], self.values[j], atol=1e-7)]
            if len(match) != 1:
                raise InconsistentData("conjugate of an irreducible character not found")
            perm.append(match[0])
        self.dual_perm = tuple(perm)

    @property
    def size(self) -> int:
        return len(self.classes)

    @property
    def class_sizes(self) -> np.ndarray:
        return np.array([len(c) for c in self.classes], dtype=float)

    def value(self, i: int, element: int) -> complex:
        return complex(self.values[i, self.class_of[element]])

    def all_real(self) -> bool:
        return all(self.dual_perm[i] == i for i in range(self.size))

    def decompose(self, character: Sequence[complex]) -> tuple[int, ...]:
        """Multiplicities of the irreducibles in a class function (per class)."""
        ch = np.asarray(character, dtype=complex)
        raw = (self.values.conj() * self.class_sizes) @ ch / self.group.order
        return tuple(round_multiplicity(x) for x in raw)


def _cyclic_values(group: FiniteGroup, m: int, classes) -> np.ndarray:
    orders = group.element_orders()
    gens = [x for x in range(group.order) if orders[x] == m]
    if group.order != m or not gens:
        raise InconsistentData(f"group {group.name} is not cyclic of order {m}")
    gen = 1 if (m > 1 and orders[1] == m) else gens[0]
    exponent = np.zeros(m, dtype=np.int64)
    x = group.identity
    for k in range(m):
        exponent[x] = k
        x = group.mul(x, gen)
    vals = np.empty((m, m), dtype=complex)
    for j in range(m):
        for ci, cl in enumerate(classes):
            vals[j, ci] = cmath.exp(2j * math.pi * j * exponent[cl[0]] / m)
    return vals


def _dihedral_values(group: FiniteGroup, m: int, classes) -> np.ndarray:
    if group.order != 2 * m:
        raise InconsistentData(f"group {group.name} is not dihedral of order {2 * m}")
    orders = group.element_orders()
    # find r of order m and a reflection s with s r s^-1 = r^-1
    found = None
    for r in range(group.order):
        if orders[r] != m:
            continue
        rot = [group.power(r, k) for k in range(m)]
        rset = set(rot)
        for s in range(group.order):
            if s in rset or orders[s] != 2:
                continue
            if group.mul(group.mul(s, r), s) == group.inverse(r):
                found = (rot, s)
                break
        if found:
            break
    if not found:
        raise InconsistentData(f"group {group.name} is not dihedral of order {2 * m}")
    rot, s = found
    coord = {}
    for k, x in enumerate(rot):
        coord[x] = (k, 0)
        coord[group.mul(x, s)] = (k, 1)
    rows = []
    linear = [(1, 1), (1, -1)]
    if m % 2 == 0:
        linear += [(-1, 1), (-1, -1)]
    for rs, ss in linear:
        rows.append(lambda k, e, rs=rs, ss=ss: (rs ** k) * (ss ** e))
    for h in range(1, (m - 1) // 2 + 1 if m % 2 else m // 2):
        rows.append(lambda k, e, h=h: 2 * math.cos(2 * math.pi * h * k / m) if e == 0 else 0.0)
    vals = np.empty((len(rows), len(classes)), dtype=complex)
    for i, f in enumerate(rows):
        for ci, cl in enumerate(classes):
            per = {f(*coord[x]) for x in cl}
            vals[i, ci] = per.pop()
    return vals


def character_table(group: FiniteGroup, hint: Optional[tuple] = None) -> CharacterTable:
    """Build and verify a character table.

    ``hint`` is ``("cyclic", m)``, ``("dihedral", m)`` or ``("user", matrix)``.
    A user matrix has one row per irreducible; its columns are either the
    conjugacy classes (ordered by smallest element index) or all group
    elements, in which case the values must be class functions.
    """
    classes = conjugacy_classes(group)
    if hint is None:
        if group.order == 1:
            hint = ("cyclic", 1)
        else:
            raise ValueError("character_table needs a hint for non-trivial groups")
    kind, arg = hint
    if kind == "cyclic":
        vals = _cyclic_values(group, int(arg), classes)
    elif kind == "dihedral":
        vals = _dihedral_values(group, int(arg), classes)
    elif kind == "user":
        mat = np.asarray(arg, dtype=complex)
        if mat.ndim != 2:
            raise InconsistentData("user character matrix must be two-dimensional")
        if mat.shape[1] == group.order and group.order != len(classes):
            per_class = np.empty((mat.shape[0], len(classes)), dtype=complex)
            for ci, cl in enumerate(classes):
                col = mat[:, list(cl)]
                if not np.allclose(col, col[:, :1], atol=ORTHO_TOL):
                    raise InconsistentData("user characters are not class functions")
                per_class[:, ci] = col[:, 0]
            mat = per_class
        vals = mat
    else:
        raise ValueError(f"unknown character-table hint {kind!r}")
    return CharacterTable(group, classes, vals)


@dataclass(frozen=True)
class VirtualModule:
    """An element of K(C[G]): integer multiplicities over the irreducibles."""

    table: CharacterTable = field(repr=False, compare=False)
    mult: tuple[int, ...]

    def __post_init__(self):
        if len(self.mult) != self.table.size:
            raise ValueError("multiplicity vector has the wrong length")
        object.__setattr__(self, "mult", tuple(int(x) for x in self.mult))

    def _check(self, other: "VirtualModule"):
        if other.table is not self.table:
            raise ValueError("virtual modules over different character tables")

    def __add__(self, other: "VirtualModule") -> "VirtualModule":
        self._check(other)
        return VirtualModule(self.table, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def __sub__(self, other: "VirtualModule") -> "VirtualModule":
        self._check(other)
        return VirtualModule(self.table, tuple(a - b for a, b in zip(self.mult, other.mult)))

    def __neg__(self) -> "VirtualModule":
        return VirtualModule(self.table, tuple(-a for a in self.mult))

    def __mul__(self, k: int) -> "VirtualModule":
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        return VirtualModule(self.table, tuple(int(k) * a for a in self.mult))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, VirtualModule):
            return NotImplemented
        return other.table is self.table and self.mult == other.mult

    def __hash__(self):
        return hash(self.mult)

    @property
    def dimension(self) -> int:
        return sum(m * d for m, d in zip(self.mult, self.table.dims))

    def dual(self) -> "VirtualModule":
        out = [0] * self.table.size
        for i, m in enumerate(self.mult):
            out[self.table.dual_perm[i]] += m
        return VirtualModule(self.table, tuple(out))

    def halve(self) -> "VirtualModule":
        if any(m % 2 for m in self.mult):
            raise InconsistentData(f"cannot halve {self.mult}: odd multiplicity")
        return VirtualModule(self.table, tuple(m // 2 for m in self.mult))

    def is_honest(self) -> bool:
        return all(m >= 0 for m in self.mult)

    def is_zero(self) -> bool:
        return not any(self.mult)

    def character(self) -> np.ndarray:
        """Class function of the module (one value per conjugacy class)."""
        return np.asarray(self.mult, dtype=float) @ self.table.values


def zero_class(table: CharacterTable) -> VirtualModule:
    return VirtualModule(table, (0,) * table.size)


def regular_class(table: CharacterTable) -> VirtualModule:
    return VirtualModule(table, table.dims)


def trivial_class(table: CharacterTable) -> VirtualModule:
    mult = [0] * table.size
    mult[table.trivial_index] = 1
    return VirtualModule(table, tuple(mult))


def from_character(table: CharacterTable, character) -> VirtualModule:
    return VirtualModule(table, table.decompose(character))


def inner_product(u: VirtualModule, v: VirtualModule) -> int:
    """<u, v> computed from class sums of the two characters."""
    u._check(v)
    t = u.table
    val = np.sum(t.class_sizes * u.character() * v.character().conj()) / t.group.order
    return round_multiplicity(complex(val), "inner product")


def induced_trivial(table: CharacterTable, generator: int) -> VirtualModule:
    """Permutation module of G on the cosets of the cyclic subgroup <generator>."""
    g = table.group
    e = g.element_order(generator)
    powers = [g.power(generator, j) for j in range(e)]
    mult = []
    for i in range(table.size):
        s = sum(table.value(i, x) for x in powers) / e
        mult.append(round_multiplicity(s, "induced multiplicity"))
    out = VirtualModule(table, tuple(mult))
    if out.dimension * e != g.order:
        raise InconsistentData("induced module has the wrong dimension")
    return out


def eigenvalue_multiplicity(table: CharacterTable, i: int, element: int, k: int) -> int:
    """Multiplicity of exp(2 pi i k / e) as an eigenvalue of rho_i(element), e = order."""
    g = table.group
    e = g.element_order(element)
    s = 0j
    x = g.identity
    for j in range(e):
        s += table.value(i, x) * cmath.exp(-2j * math.pi * j * k / e)
        x = g.mul(x, element)
    return round_multiplicity(s / e, "eigenvalue multiplicity")


@lru_cache(maxsize=None)
def cyclic_table(m: int) -> CharacterTable:
    """Shared table of Z/m: chi_j(g^k) = exp(2 pi i jk/m)."""
    return character_table(FiniteGroup.cyclic(m), ("cyclic", m))


@lru_cache(maxsize=None)
def dihedral_table(m: int) -> CharacterTable:
    return character_table(FiniteGroup.dihedral(m), ("dihedral", m))
