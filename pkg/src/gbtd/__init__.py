"""Generalized balanced tournament designs GBTD(p, p) from matrices over Z_p."""

from gbtd.construction import ColAddress, RowAddress, SymbolMatrix, build_mp, hblock_row, hstar_row
from gbtd.designs import (
    GbtdArray,
    deficiency_profile,
    gbtd_to_matrix,
    infer_deficient_symbol,
    matrix_to_gbtd,
    normalize_columns,
)
from gbtd.verify import (
    VerificationReport,
    agreement_count,
    lemma3_counts,
    solve_agreement,
    verify_bibd,
    verify_gbtd,
    verify_matrix,
)
from gbtd.zp import PrimeModulus, Residue, check_prime, const_vec, mod_inverse, prog_vec

__version__ = "0.1.0"

__all__ = [
    "ColAddress",
    "GbtdArray",
    "PrimeModulus",
    "Residue",
    "RowAddress",
    "SymbolMatrix",
    "VerificationReport",
    "agreement_count",
    "build_mp",
    "check_prime",
    "const_vec",
    "deficiency_profile",
    "gbtd_to_matrix",
    "hblock_row",
    "hstar_row",
    "infer_deficient_symbol",
    "lemma3_counts",
    "matrix_to_gbtd",
    "mod_inverse",
    "normalize_columns",
    "prog_vec",
    "solve_agreement",
    "verify_bibd",
    "verify_gbtd",
    "verify_matrix",
]
