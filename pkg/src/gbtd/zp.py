"""Arithmetic over the integers mod an odd prime.

Residues carry their modulus so that values from different fields are never
combined silently.  Plain ``int`` operands are accepted and reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


class ModulusError(ValueError):
    """Raised for invalid moduli and for operations mixing different moduli."""


def check_prime(n: int) -> bool:
    """Trial-division primality test for small ``n >= 0``."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, order=True)
class PrimeModulus:
    p: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise ModulusError(f"modulus must be an int, got {self.p!r}")
        if self.p < 3:
            raise ModulusError(f"modulus must be an odd prime >= 3, got {self.p}")
        if not check_prime(self.p):
            raise ModulusError(f"modulus {self.p} is not prime")

    def __call__(self, value: int) -> Residue:
        return Residue(int(value) % self.p, self)

    def __int__(self) -> int:
        return self.p

    def residues(self) -> Iterator[Residue]:
        for v in range(self.p):
            yield Residue(v, self)


IntLike = Union[int, "Residue"]


def as_modulus(p: int | PrimeModulus) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.p:
            raise ModulusError(f"{self.value} is not a canonical residue mod {self.modulus.p}")

    def _coerce(self, other: IntLike) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusError(
                    f"cannot combine residues mod {self.modulus.p} and mod {other.modulus.p}"
                )
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other: IntLike) -> Residue:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.modulus(self.value + o)

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> Residue:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.modulus(self.value - o)

    def __rsub__(self, other: IntLike) -> Residue:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.modulus(o - self.value)

    def __mul__(self, other: IntLike) -> Residue:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.modulus(self.value * o)

    __rmul__ = __mul__

    def __neg__(self) -> Residue:
        return self.modulus(-self.value)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.modulus.p})"

    def inverse(self) -> Residue:
        return mod_inverse(self)


def mod_inverse(a: Residue) -> Residue:
    if a.value == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {a.modulus.p}")
    return Residue(pow(a.value, -1, a.modulus.p), a.modulus)


class PVector(tuple):
    """A length-p tuple of residues sharing one modulus."""

    def __new__(cls, entries) -> PVector:
        entries = tuple(entries)
        if not entries:
            raise ModulusError("empty PVector")
        modulus = entries[0].modulus
        if len(entries) != modulus.p:
            raise ModulusError(f"PVector mod {modulus.p} needs {modulus.p} entries, got {len(entries)}")
        if any(e.modulus != modulus for e in entries):
            raise ModulusError("PVector entries have mixed moduli")
        return super().__new__(cls, entries)

    @property
    def modulus(self) -> PrimeModulus:
        return self[0].modulus

    def values(self) -> list[int]:
        return [e.value for e in self]


def const_vec(i: Residue) -> PVector:
    """(i, i, ..., i)"""
    return PVector([i] * i.modulus.p)


def prog_vec(i: Residue) -> PVector:
    """(i, i+1, ..., i+p-1) reduced mod p."""
    return PVector([i + c for c in range(i.modulus.p)])
