"""Exhaustive checks of the BIBD, GBTD and matrix properties.

Column groups are taken from the symbol in row 0, which for a normalized
matrix coincides with the positional groups V_0, ..., V_{p-1} and is
preserved by every equivalence operation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from gbtd.construction import RowAddress, SymbolMatrix
from gbtd.designs import GbtdArray, deficiency_profile
from gbtd.zp import PrimeModulus, as_modulus, mod_inverse


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    counterexample: str | None = None

    def __str__(self) -> str:
        if self.passed:
            return f"PASS  {self.name}"
        return f"FAIL  {self.name}: {self.counterexample}"


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, counterexample: str | None) -> None:
        self.checks.append(Check(name, counterexample is None, counterexample))

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def format(self) -> str:
        lines = [str(c) for c in self.checks]
        lines.append("overall: " + ("PASS" if self.overall else "FAIL"))
        return "\n".join(lines)

    def __bool__(self) -> bool:
        return self.overall


@dataclass(frozen=True)
class AgreementProfile:
    columns: tuple[int, int]
    rows: frozenset[int]

    @property
    def count(self) -> int:
        return len(self.rows)


def agreement_count(M: SymbolMatrix, c1: int, c2: int) -> AgreementProfile:
    """Rows in which columns c1 and c2 hold the same symbol."""
    if c1 == c2:
        raise ValueError("agreement of a column with itself is degenerate")
    E = M.entries
    rows = frozenset(np.flatnonzero(E[:, c1] == E[:, c2]).tolist())
    return AgreementProfile((c1, c2), rows)


def agreement_matrix(E: np.ndarray, n_symbols: int) -> np.ndarray:
    """``A[a, b]`` = number of rows where columns a and b agree, for all pairs at once."""
    # float64 products go through BLAS and are exact for counts far below 2**53
    onehot = (E[:, :, None] == np.arange(n_symbols)).astype(np.float64)  # rows, cols, symbols
    X = onehot.transpose(1, 0, 2).reshape(E.shape[1], -1)
    return np.rint(X @ X.T).astype(np.int64)


def verify_matrix(M: SymbolMatrix) -> VerificationReport:
    p = M.p
    E = M.entries
    report = VerificationReport()

    bad = None
    for axis, label in ((1, "row"), (0, "column")):
        lines = E if axis == 1 else E.T
        for idx, line in enumerate(lines):
            counts = np.bincount(line, minlength=p)
            if np.any(counts != p):
                s = int(np.flatnonzero(counts != p)[0])
                bad = f"{label} {idx} contains symbol {s} {counts[s]} times, expected {p}"
                break
        if bad:
            break
    report.add("symbol balance", bad)

    A = agreement_matrix(E, p)
    group = E[0]
    same = group[:, None] == group[None, :]
    iu = np.triu_indices(E.shape[1], k=1)
    for name, mask, want in (
        ("same-group agreement", same, p),
        ("cross-group agreement", ~same, p - 1),
    ):
        sel = mask[iu] & (A[iu] != want)
        bad = None
        if np.any(sel):
            n = int(np.flatnonzero(sel)[0])
            a, b = int(iu[0][n]), int(iu[1][n])
            bad = (
                f"columns {a} (group {group[a]}) and {b} (group {group[b]}) "
                f"agree in {A[a, b]} rows, expected {want}"
            )
        report.add(name, bad)
    return report


def hstar_locality(M: SymbolMatrix) -> VerificationReport:
    """For a construction-layout matrix: same-group pairs agree only in H*,
    cross-group pairs never agree in H*."""
    p = M.p
    E = M.entries
    report = VerificationReport()
    A_h = agreement_matrix(E[p:], p)
    A_star = agreement_matrix(E[:p], p)
    groups = np.arange(p * p) // p
    same = groups[:, None] == groups[None, :]
    iu = np.triu_indices(p * p, k=1)
    for name, offending in (
        ("same-group agreement outside H*", same[iu] & (A_h[iu] != 0)),
        ("cross-group agreement inside H*", ~same[iu] & (A_star[iu] != 0)),
    ):
        bad = None
        if np.any(offending):
            n = int(np.flatnonzero(offending)[0])
            bad = f"columns {iu[0][n]} and {iu[1][n]}"
        report.add(name, bad)
    return report


def _pair_counts(R: GbtdArray) -> np.ndarray:
    """``P[x, y]`` = number of blocks containing both x and y."""
    blocks = R.cells.reshape(-1, R.k)
    N = np.zeros((R.v, len(blocks)), dtype=np.float64)
    for b, block in enumerate(blocks):
        N[np.unique(block), b] = 1
    return np.rint(N @ N.T).astype(np.int64)


def verify_bibd(R: GbtdArray) -> VerificationReport:
    """(k*m, k, k-1)-BIBD checks: block size, pair balance, block count."""
    k, v = R.k, R.v
    lam = k - 1
    report = VerificationReport()

    bad = None
    for r in range(R.m):
        for t in range(R.n_cols):
            block = R.cells[r, t]
            if len(np.unique(block)) != k:
                bad = f"block at (row {r}, column {t}) = {block.tolist()} has repeated points"
                break
        if bad:
            break
    report.add("block size", bad)

    P = _pair_counts(R)
    iu = np.triu_indices(v, k=1)
    off = np.flatnonzero(P[iu] != lam)
    bad = None
    if len(off):
        x, y = int(iu[0][off[0]]), int(iu[1][off[0]])
        bad = f"pair {{{x}, {y}}} occurs in {P[x, y]} blocks, expected {lam}"
    report.add("pair balance", bad)

    expected = lam * v * (v - 1) // (k * (k - 1))
    report.add(
        "block count",
        None if R.n_blocks == expected else f"{R.n_blocks} blocks, expected {expected}",
    )
    return report


def verify_gbtd(R: GbtdArray) -> VerificationReport:
    k, m, v = R.k, R.m, R.v
    report = VerificationReport()

    bad = None
    for t in range(R.n_cols):
        counts = np.bincount(R.cells[:, t].ravel(), minlength=v)
        if np.any(counts != 1):
            x = int(np.flatnonzero(counts != 1)[0])
            bad = f"point {x} occurs {counts[x]} times in column {t}"
            break
    report.add("once per column", bad)

    counts = R.row_multiplicity()
    bad = None
    if np.any(counts > k):
        r, x = (int(z) for z in np.argwhere(counts > k)[0])
        bad = f"point {x} occurs in {counts[r, x]} cells of row {r}, more than {k}"
    report.add("at most k per row", bad)

    bad = None
    for x in range(v):
        col = counts[:, x]
        if np.count_nonzero(col == k) != m - 1 or np.count_nonzero(col == k - 1) != 1:
            bad = f"point {x} has row multiplicities {col.tolist()}"
            break
    report.add("row multiplicity profile", bad)

    tuples = deficiency_profile(R)
    bad = None
    sizes = [len(t) for t in tuples]
    flat = sorted(x for t in tuples for x in t)
    if any(s != k for s in sizes):
        r = next(i for i, s in enumerate(sizes) if s != k)
        bad = f"row {r} has {sizes[r]} deficient points {list(tuples[r])}, expected {k}"
    elif flat != list(range(v)):
        bad = f"deficient tuples {[list(t) for t in tuples]} do not partition [0, {v})"
    report.add("deficient tuples partition", bad)

    report.extend(verify_bibd(R))
    return report


def lemma3_counts(p: int | PrimeModulus, m: int) -> tuple[int, int]:
    """Enumerate x + y = m (mod p), 0 <= y < p-1; count all solutions and those with y >= x."""
    q = as_modulus(p).p
    total = y_ge_x = 0
    for y in range(q - 1):
        x = (m - y) % q
        total += 1
        y_ge_x += y >= x
    return total, y_ge_x


def solve_agreement(p: int | PrimeModulus, j1: int, m: int, j2: int, n: int) -> frozenset[RowAddress]:
    """H-block rows where columns (V_j1)^m and (V_j2)^n agree, solved analytically.

    For j2 < p-1 the agreement condition reduces to i + l = (n-m)/(j1-j2);
    for j2 = p-1 it splits into (i+l)(j1+1) = n-m with l >= i and
    (i+l)(j1+1) = n-m+1 with l < i.
    """
    F = as_modulus(p)
    q = F.p
    if not (0 <= j1 < j2 < q):
        raise ValueError(f"need 0 <= j1 < j2 < p, got j1={j1}, j2={j2}")
    rows = set()
    if j2 < q - 1:
        s = (F(n) - m) * mod_inverse(F(j1) - j2)
        for i in range(q):
            l = (s - i).value
            if l <= q - 2:
                rows.add(RowAddress.hblock(i, l))
    else:
        inv = mod_inverse(F(j1) + 1)
        s_ge = (F(n) - m) * inv
        s_lt = (F(n) - m + 1) * inv
        for i in range(q):
            l = (s_ge - i).value
            if l <= q - 2 and l >= i:
                rows.add(RowAddress.hblock(i, l))
            l = (s_lt - i).value
            if l <= q - 2 and l < i:
                rows.add(RowAddress.hblock(i, l))
    return frozenset(rows)


def brute_force_hblock_agreement(M: SymbolMatrix, c1: int, c2: int) -> frozenset[RowAddress]:
    p = M.p
    rows = agreement_count(M, c1, c2).rows
    return frozenset(RowAddress.from_flat(p, r) for r in rows if r >= p)


def cross_group_pairs(p: int):
    """All ((j1, m), (j2, n)) with j1 < j2."""
    for (j1, j2) in combinations(range(p), 2):
        for m in range(p):
            for n in range(p):
                yield j1, m, j2, n
