"""The p^2 x p^2 symbol matrix M_p whose columns encode a GBTD(p, p).

Row layout (top to bottom): the p rows of H*, then H_0, ..., H_{p-1} with
p-1 rows each.  Column layout: groups V_0, ..., V_{p-1} of p columns each.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from gbtd.zp import PrimeModulus, Residue, as_modulus


HSTAR = "hstar"
HBLOCK = "hblock"


@dataclass(frozen=True, order=True)
class RowAddress:
    """Structured row index: ``HStar(i)`` or ``HBlock(i, l)`` with ``0 <= l <= p-2``."""

    kind: Literal["hstar", "hblock"]
    i: int
    l: int | None = None

    @classmethod
    def hstar(cls, i: int) -> RowAddress:
        return cls(HSTAR, int(i))

    @classmethod
    def hblock(cls, i: int, l: int) -> RowAddress:
        return cls(HBLOCK, int(i), int(l))

    def flat(self, p: int) -> int:
        if self.kind == HSTAR:
            if not 0 <= self.i < p:
                raise ValueError(f"H* row {self.i} out of range for p={p}")
            return self.i
        if not 0 <= self.i < p or self.l is None or not 0 <= self.l <= p - 2:
            raise ValueError(f"H-block address ({self.i}, {self.l}) out of range for p={p}")
        return p + self.i * (p - 1) + self.l

    @classmethod
    def from_flat(cls, p: int, index: int) -> RowAddress:
        if not 0 <= index < p * p:
            raise ValueError(f"row {index} out of range for p={p}")
        if index < p:
            return cls.hstar(index)
        i, l = divmod(index - p, p - 1)
        return cls.hblock(i, l)


@dataclass(frozen=True, order=True)
class ColAddress:
    j: int
    c: int

    def flat(self, p: int) -> int:
        if not (0 <= self.j < p and 0 <= self.c < p):
            raise ValueError(f"column address ({self.j}, {self.c}) out of range for p={p}")
        return self.j * p + self.c

    @classmethod
    def from_flat(cls, p: int, index: int) -> ColAddress:
        if not 0 <= index < p * p:
            raise ValueError(f"column {index} out of range for p={p}")
        return cls(*divmod(index, p))


class SymbolMatrix:
    """Immutable p^2 x p^2 matrix over Z_p."""

    __slots__ = ("modulus", "_entries")

    def __init__(self, p: int | PrimeModulus, entries) -> None:
        modulus = as_modulus(p)
        arr = np.array(entries, dtype=np.int64)
        n = modulus.p ** 2
        if arr.shape != (n, n):
            raise ValueError(f"matrix for p={modulus.p} must be {n}x{n}, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= modulus.p):
            bad = np.argwhere((arr < 0) | (arr >= modulus.p))[0]
            raise ValueError(
                f"entry {int(arr[tuple(bad)])} at ({bad[0]}, {bad[1]}) is not in [0, {modulus.p})"
            )
        arr.setflags(write=False)
        self.modulus = modulus
        self._entries = arr

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def side(self) -> int:
        return self.modulus.p ** 2

    @property
    def entries(self) -> np.ndarray:
        """Read-only view of the underlying integer array."""
        return self._entries

    def to_list(self) -> list[list[int]]:
        return self._entries.tolist()

    def __getitem__(self, key):
        return self._entries[key]

    def entry(self, row: RowAddress, col: ColAddress) -> Residue:
        return self.modulus(self._entries[row.flat(self.p), col.flat(self.p)])

    def group(self, j: int) -> np.ndarray:
        """Columns of V_j as a p^2 x p block."""
        return self._entries[:, j * self.p:(j + 1) * self.p]

    def with_entries(self, entries) -> SymbolMatrix:
        return SymbolMatrix(self.modulus, entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolMatrix):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(self._entries, other._entries)

    def __hash__(self) -> int:
        return hash((self.p, self._entries.tobytes()))

    def __repr__(self) -> str:
        return f"SymbolMatrix(p={self.p})"


def _residue(modulus: PrimeModulus, x: int | Residue) -> Residue:
    if isinstance(x, Residue):
        if x.modulus != modulus:
            raise ValueError(f"residue mod {x.modulus.p} used with p={modulus.p}")
        return x
    return modulus(x)


def _prog(start: Residue) -> np.ndarray:
    p = start.modulus.p
    return (start.value + np.arange(p)) % p


def hstar_row(p: int | PrimeModulus, i: int | Residue) -> np.ndarray:
    """Row i of H*: the constant blocks i, i+1, ..., i+p-1, each repeated p times."""
    modulus = as_modulus(p)
    i = _residue(modulus, i)
    return np.repeat(_prog(i), modulus.p)


def vblock_start(p: int | PrimeModulus, i: int | Residue, l: int, j: int) -> Residue:
    """Starting value of the progression filling row l of (H_i, V_j)."""
    modulus = as_modulus(p)
    i = _residue(modulus, i)
    _check_inner_row(modulus.p, l)
    if not 0 <= j < modulus.p:
        raise ValueError(f"group index {j} out of range for p={modulus.p}")
    if j < modulus.p - 1:
        return i * (j + 1) + modulus(j) * l
    # last group: comparison on canonical representatives, no wraparound
    if l >= i.value:
        return modulus(-l)
    return modulus(-l + 1)


def _check_inner_row(p: int, l: int) -> None:
    if isinstance(l, bool) or not isinstance(l, (int, np.integer)) or not 0 <= l <= p - 2:
        raise ValueError(f"inner row index must be in [0, {p - 2}], got {l!r}")


def hblock_row(p: int | PrimeModulus, i: int | Residue, l: int) -> np.ndarray:
    modulus = as_modulus(p)
    _check_inner_row(modulus.p, l)
    return np.concatenate([_prog(vblock_start(modulus, i, l, j)) for j in range(modulus.p)])


def build_mp(p: int | PrimeModulus) -> SymbolMatrix:
    """Construct M_p for an odd prime p.

    Raises ``ModulusError`` when p is not an odd prime.
    """
    modulus = as_modulus(p)
    q = modulus.p
    rows = [hstar_row(modulus, i) for i in range(q)]
    rows += [hblock_row(modulus, i, l) for i in range(q) for l in range(q - 1)]
    return SymbolMatrix(modulus, np.vstack(rows))
