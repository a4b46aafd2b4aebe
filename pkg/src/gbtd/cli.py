"""Command-line entry point.

Exit codes: 0 success, 1 domain failure (a check failed or a conversion
precondition does not hold), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from gbtd.construction import SymbolMatrix, build_mp
from gbtd.designs import DesignError, gbtd_to_matrix, matrix_to_gbtd, normalize_columns
from gbtd.documents import DesignDocument, DocumentError, emit, parse
from gbtd.verify import lemma3_counts, verify_gbtd, verify_matrix
from gbtd.zp import ModulusError, PrimeModulus

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gbtd", description="Construct and verify GBTD(p,p) designs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", help="build M_p and/or the design it encodes")
    gen.add_argument("--p", type=int, required=True)
    gen.add_argument("--kind", choices=("matrix", "design", "both"), default="matrix")
    gen.add_argument("--format", choices=("json", "grid"), default="json")
    gen.add_argument("--out", help="output path (default stdout); with --kind both, "
                     "writes <stem>.matrix<suffix> and <stem>.design<suffix>")

    ver = sub.add_parser("verify", help="verify a matrix or design document")
    ver.add_argument("--in", dest="input", help="input path (default stdin)")
    ver.add_argument("--format", choices=("json", "grid"), default=None)

    conv = sub.add_parser("convert", help="convert between matrix and design documents")
    conv.add_argument("direction", choices=("to-design", "to-matrix", "normalize"))
    conv.add_argument("--in", dest="input", help="input path (default stdin)")
    conv.add_argument("--out", help="output path (default stdout)")
    conv.add_argument("--format", choices=("json", "grid"), default="json",
                      help="output format for matrices")

    lem = sub.add_parser("lemma3", help="count solutions of x + y = m, 0 <= y < p-1")
    lem.add_argument("--p", type=int, required=True)
    return parser


def _read_input(path: str | None) -> bytes:
    if path is None:
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write_output(data: bytes, path: str | None) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(path).write_bytes(data)


def _modulus(parser: argparse.ArgumentParser, p: int) -> PrimeModulus:
    try:
        return PrimeModulus(p)
    except ModulusError as exc:
        parser.error(str(exc))


def _cmd_generate(args, parser) -> int:
    modulus = _modulus(parser, args.p)
    if args.format == "grid" and args.kind != "matrix":
        parser.error("--format grid supports --kind matrix only")
    M = build_mp(modulus)
    docs = []
    if args.kind in ("matrix", "both"):
        docs.append(("matrix", DesignDocument.of(M)))
    if args.kind in ("design", "both"):
        docs.append(("design", DesignDocument.of(matrix_to_gbtd(M))))
    if args.out is None:
        _write_output(b"\n".join(emit(d, args.format) for _, d in docs), None)
    elif len(docs) == 1:
        _write_output(emit(docs[0][1], args.format), args.out)
    else:
        out = Path(args.out)
        for label, doc in docs:
            _write_output(emit(doc, args.format), str(out.with_name(f"{out.stem}.{label}{out.suffix}")))
    return EXIT_OK


def _load(args) -> DesignDocument | None:
    try:
        return parse(_read_input(args.input), args.format if args.command == "verify" else None)
    except (OSError, DocumentError) as exc:
        print(f"gbtd: cannot read input: {exc}", file=sys.stderr)
        return None


def _cmd_verify(args, parser) -> int:
    doc = _load(args)
    if doc is None:
        return EXIT_USAGE
    report = verify_matrix(doc.payload) if doc.kind == "matrix" else verify_gbtd(doc.payload)
    print(f"{doc.kind} p={doc.p}")
    print(report.format())
    return EXIT_OK if report.overall else EXIT_FAIL


def _cmd_convert(args, parser) -> int:
    doc = _load(args)
    if doc is None:
        return EXIT_USAGE
    wanted = "design" if args.direction == "to-matrix" else "matrix"
    if doc.kind != wanted:
        print(f"gbtd: {args.direction} needs a {wanted} document, got {doc.kind}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.direction == "to-matrix":
            out = gbtd_to_matrix(doc.payload)
        elif args.direction == "to-design":
            out = matrix_to_gbtd(doc.payload)
        else:
            out = normalize_columns(doc.payload)
    except DesignError as exc:
        print(f"gbtd: conversion failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    fmt = args.format if isinstance(out, SymbolMatrix) else "json"
    _write_output(emit(DesignDocument.of(out), fmt), args.out)
    return EXIT_OK


def _cmd_lemma3(args, parser) -> int:
    modulus = _modulus(parser, args.p)
    p = modulus.p
    ok = True
    for m in range(p):
        total, y_ge_x = lemma3_counts(modulus, m)
        print(total, y_ge_x)
        ok &= (total, y_ge_x) == (p - 1, (p - 1) // 2)
    return EXIT_OK if ok else EXIT_FAIL


_COMMANDS = {
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "convert": _cmd_convert,
    "lemma3": _cmd_lemma3,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
