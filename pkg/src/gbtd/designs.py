"""Block-array representation of a GBTD and conversions to/from SymbolMatrix.

A design is stored as an integer array of shape ``(m, n_cols, k)``: design
row, design column, then the k points of the block in ascending order.
Points are 0-based.  Design columns are stored 0-based; column ``t`` of the
design corresponds to matrix row ``t + 1`` (matrix row 0 is the deficiency
row).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from math import isqrt

import numpy as np

from gbtd.construction import SymbolMatrix


class DesignError(ValueError):
    """Base class for conversion and rearrangement failures."""


class MalformedMatrixError(DesignError):
    pass


class InvalidDesignError(DesignError):
    pass


class ProfileError(DesignError):
    pass


class NormalizationError(DesignError):
    pass


class GbtdArray:
    """An m x n_cols array of k-point blocks over the points ``0..k*m-1``.

    Structural shape and point range are checked here; the combinatorial
    conditions are left to :mod:`gbtd.verify` so that defective designs can
    still be represented and reported on.
    """

    __slots__ = ("_cells",)

    def __init__(self, cells) -> None:
        arr = np.array(cells, dtype=np.int64)
        if arr.ndim != 3 or 0 in arr.shape:
            raise InvalidDesignError(f"cells must be a non-empty rows x columns x block array, got shape {arr.shape}")
        m, _, k = arr.shape
        v = k * m
        if arr.min() < 0 or arr.max() >= v:
            bad = np.argwhere((arr < 0) | (arr >= v))[0]
            raise InvalidDesignError(
                f"point {int(arr[tuple(bad)])} in cell ({bad[0]}, {bad[1]}) is outside [0, {v})"
            )
        arr = np.sort(arr, axis=2)
        arr.setflags(write=False)
        self._cells = arr

    @classmethod
    def from_blocks(cls, rows: Sequence[Sequence[Iterable[int]]]) -> GbtdArray:
        return cls([[sorted(block) for block in row] for row in rows])

    @property
    def cells(self) -> np.ndarray:
        return self._cells

    @property
    def m(self) -> int:
        return self._cells.shape[0]

    @property
    def n_cols(self) -> int:
        return self._cells.shape[1]

    @property
    def k(self) -> int:
        return self._cells.shape[2]

    @property
    def v(self) -> int:
        return self.k * self.m

    @property
    def p(self) -> int:
        if self.k != self.m:
            raise InvalidDesignError(f"design has k={self.k}, m={self.m}; not a GBTD(p, p)")
        return self.k

    @property
    def n_blocks(self) -> int:
        return self.m * self.n_cols

    def block(self, row: int, col: int) -> tuple[int, ...]:
        return tuple(self._cells[row, col].tolist())

    def rows(self) -> list[list[tuple[int, ...]]]:
        return [[tuple(b) for b in row] for row in self._cells.tolist()]

    def row_multiplicity(self) -> np.ndarray:
        """``counts[r, x]`` = number of cells of design row r containing point x."""
        return np.stack([np.bincount(row.ravel(), minlength=self.v) for row in self._cells])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GbtdArray):
            return NotImplemented
        return np.array_equal(self._cells, other._cells)

    def __hash__(self) -> int:
        return hash((self._cells.shape, self._cells.tobytes()))

    def __repr__(self) -> str:
        return f"GbtdArray(k={self.k}, m={self.m}, n_cols={self.n_cols})"


def deficiency_profile(design: GbtdArray) -> tuple[tuple[int, ...], ...]:
    """Per design row, the sorted points occurring exactly k-1 times in that row."""
    counts = design.row_multiplicity()
    return tuple(tuple(np.flatnonzero(counts[r] == design.k - 1).tolist()) for r in range(design.m))


def infer_deficient_symbol(column_counts: Mapping[int, int] | Iterable[int], p: int | None = None) -> int:
    """The symbol appearing p-1 times when every other symbol appears p times.

    ``column_counts`` is either a symbol -> count mapping or the raw symbols
    of one matrix column below the deficiency row.
    """
    counts = Counter(column_counts) if not isinstance(column_counts, Mapping) else Counter(dict(column_counts))
    total = sum(counts.values())
    if p is None:
        p = isqrt(total + 1)
        if p * p != total + 1:
            raise ProfileError(f"{total} symbols is not p^2-1 for any p")
    if total != p * p - 1 or any(not 0 <= s < p for s in counts):
        raise ProfileError(f"expected p^2-1={p * p - 1} symbols from [0, {p}), got {dict(counts)}")
    short = [s for s in range(p) if counts[s] == p - 1]
    if len(short) != 1 or any(counts[s] != p for s in range(p) if s != short[0]):
        raise ProfileError(f"count profile {dict(sorted(counts.items()))} is not one symbol at {p - 1}, rest at {p}")
    return short[0]


def matrix_to_gbtd(M: SymbolMatrix, check: bool = True) -> GbtdArray:
    """Read the design off a matrix whose row 0 is the deficiency row.

    Cell ``(k, t)`` holds the columns j with ``M[t + 1, j] == k``.  With
    ``check`` the matrix must also pass ``verify_matrix`` with column groups
    taken from row 0; otherwise the result need not be a GBTD.
    """
    p = M.p
    E = M.entries
    cells = []
    for k in range(p):
        row = []
        for t in range(1, p * p):
            pts = np.flatnonzero(E[t] == k)
            if len(pts) != p:
                raise MalformedMatrixError(
                    f"design cell (row {k}, column {t - 1}) from matrix row {t} "
                    f"would hold {len(pts)} points, expected {p}"
                )
            row.append(pts)
        cells.append(row)
    for j in range(p * p):
        try:
            d = infer_deficient_symbol(E[1:, j].tolist(), p)
        except ProfileError as exc:
            raise MalformedMatrixError(f"column {j}: {exc}") from None
        if d != E[0, j]:
            raise MalformedMatrixError(
                f"column {j}: row 0 holds {E[0, j]} but the deficient symbol is {d}"
            )
    if check:
        from gbtd.verify import verify_matrix

        failed = verify_matrix(M).failed()
        if failed:
            raise MalformedMatrixError(
                f"row 0 is not a valid deficiency row: {failed[0].name}: {failed[0].counterexample}"
            )
    return GbtdArray(cells)


def gbtd_to_matrix(R: GbtdArray) -> SymbolMatrix:
    """Encode a GBTD(p, p) as its unnormalized matrix (column j = point j)."""
    p = R.p
    n = p * p
    if R.n_cols != n - 1:
        raise InvalidDesignError(f"GBTD({p},{p}) needs {n - 1} columns, got {R.n_cols}")
    E = np.full((n, n), -1, dtype=np.int64)
    for t in range(n - 1):
        seen = np.zeros(n, dtype=np.int64)
        for k in range(p):
            for x in R.cells[k, t]:
                seen[x] += 1
                E[t + 1, x] = k
        bad = np.flatnonzero(seen != 1)
        if len(bad):
            x = int(bad[0])
            raise InvalidDesignError(f"point {x} appears {seen[x]} times in design column {t}")
    for j in range(n):
        try:
            E[0, j] = infer_deficient_symbol(E[1:, j].tolist(), p)
        except ProfileError as exc:
            raise InvalidDesignError(f"point {j}: {exc}") from None
    return SymbolMatrix(p, E)


def normalizing_order(M: SymbolMatrix) -> np.ndarray:
    """Stable column order that sorts row 0 ascending."""
    p = M.p
    counts = np.bincount(M.entries[0], minlength=p)
    if np.any(counts != p):
        raise NormalizationError(f"row 0 symbol counts {counts.tolist()} are not all {p}")
    return np.argsort(M.entries[0], kind="stable")


def normalize_columns(M: SymbolMatrix) -> SymbolMatrix:
    return M.with_entries(M.entries[:, normalizing_order(M)])


# equivalence operations on designs

def swap_design_rows(R: GbtdArray, a: int, b: int) -> GbtdArray:
    _check_index(a, R.m, "design row")
    _check_index(b, R.m, "design row")
    cells = R.cells.copy()
    cells[[a, b]] = cells[[b, a]]
    return GbtdArray(cells)


def swap_design_columns(R: GbtdArray, a: int, b: int) -> GbtdArray:
    _check_index(a, R.n_cols, "design column")
    _check_index(b, R.n_cols, "design column")
    cells = R.cells.copy()
    cells[:, [a, b]] = cells[:, [b, a]]
    return GbtdArray(cells)


def permute_points(R: GbtdArray, perm: Sequence[int]) -> GbtdArray:
    """Rename point x to ``perm[x]``."""
    perm = _check_bijection(perm, R.v, "point permutation")
    return GbtdArray(perm[R.cells])


# equivalence operations on matrices

def permute_symbols(M: SymbolMatrix, perm: Sequence[int]) -> SymbolMatrix:
    """Replace symbol s by ``perm[s]`` everywhere, row 0 included."""
    perm = _check_bijection(perm, M.p, "symbol permutation")
    return M.with_entries(perm[M.entries])


def swap_matrix_rows(M: SymbolMatrix, a: int, b: int) -> SymbolMatrix:
    _check_index(a, M.side, "matrix row")
    _check_index(b, M.side, "matrix row")
    if a == 0 or b == 0:
        raise ValueError("row 0 is the deficiency row and cannot be swapped")
    E = M.entries.copy()
    E[[a, b]] = E[[b, a]]
    return M.with_entries(E)


def swap_matrix_columns(M: SymbolMatrix, a: int, b: int) -> SymbolMatrix:
    _check_index(a, M.side, "matrix column")
    _check_index(b, M.side, "matrix column")
    E = M.entries.copy()
    E[:, [a, b]] = E[:, [b, a]]
    return M.with_entries(E)


def _check_index(i: int, n: int, what: str) -> None:
    if not 0 <= i < n:
        raise IndexError(f"{what} {i} out of range [0, {n})")


def _check_bijection(perm: Sequence[int], n: int, what: str) -> np.ndarray:
    arr = np.asarray(perm, dtype=np.int64)
    if arr.shape != (n,) or sorted(arr.tolist()) != list(range(n)):
        raise ValueError(f"{what} must be a bijection on [0, {n})")
    return arr
