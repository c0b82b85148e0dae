"""Command-line front-end.

Subcommands: synth, transport, peg, verify, embed-check. All output is
line-oriented plain text; programs print one gate per line (first applied
first) followed by a ``# gates: <count>`` comment line.

Exit codes: 0 success, 1 infeasible transport, 2 parse/usage error,
3 invalid input (non-symplectic matrix, identity word), 4 verification
failure, 5 scale cap exceeded. The environment variable ``CS_TOL`` sets
the dense-oracle tolerance (default 1e-9).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .embedding import (
    Embedding,
    logical_feasible_single,
    logical_feasible_sum,
)
from .errors import (
    CliffSynthError,
    DegenerateWordError,
    NonSymplecticError,
    ParseError,
    ScaleLimitError,
)
from .pauli import PauliWord, parse_word
from .symplectic import (
    GateSequence,
    SymplecticMatrix,
    apply_to_word,
    format_gate,
    is_symplectic,
    parse_matrix_text,
    sequence_matrix,
)
from .synthesis import decompose, generalized_peg, transport
from .unitary import check_program, equal_up_to_phase, sequence_unitary, word_unitary

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_VERIFY = 4
EXIT_SCALE = 5


def _tolerance() -> float:
    return float(os.environ.get("CS_TOL", "1e-9"))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _load_matrix(path: str) -> SymplecticMatrix:
    mat, dim = parse_matrix_text(_read_text(path))
    if not is_symplectic(mat, dim):
        raise NonSymplecticError(f"matrix in {path} is not symplectic mod {dim.D}")
    return SymplecticMatrix(dim, mat)


def _print_program(seq: GateSequence) -> None:
    for g in seq:
        print(format_gate(g))
    print(f"# gates: {len(seq)}")


def _conjugates_to(seq: GateSequence, source: PauliWord, target: PauliWord) -> bool:
    u = sequence_unitary(seq)
    conj = u @ word_unitary(source) @ u.dagger()
    return equal_up_to_phase(conj, word_unitary(target), _tolerance())


def _cmd_synth(args: argparse.Namespace) -> int:
    m = _load_matrix(args.matrix)
    seq = decompose(m)
    _print_program(seq)
    if args.verify == "symplectic" and sequence_matrix(seq) != m:
        print("verification failed: program does not recompose the matrix", file=sys.stderr)
        return EXIT_VERIFY
    if args.verify == "unitary" and not check_program(seq, m, _tolerance()):
        print("verification failed: unitary oracle mismatch", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_transport(args: argparse.Namespace) -> int:
    p, q = parse_word(args.source), parse_word(args.target)
    seq = transport(p, q)
    if seq is None:
        print("infeasible")
        return EXIT_INFEASIBLE
    _print_program(seq)
    if args.verify == "symplectic" and apply_to_word(sequence_matrix(seq), p) != q:
        print("verification failed: program does not map source to target", file=sys.stderr)
        return EXIT_VERIFY
    if args.verify == "unitary" and not _conjugates_to(seq, p, q):
        print("verification failed: unitary oracle mismatch", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_peg(args: argparse.Namespace) -> int:
    w = parse_word(args.word)
    seq, k = generalized_peg(w)
    _print_program(seq)
    print(f"# gcd: {k}")
    normal = PauliWord(w.dim, (0,) * w.n, (0,) * (w.n - 1) + (k,))
    if args.verify == "symplectic" and apply_to_word(sequence_matrix(seq), w) != normal:
        print("verification failed: program does not normalize the word", file=sys.stderr)
        return EXIT_VERIFY
    if args.verify == "unitary" and not _conjugates_to(seq, w, normal):
        print("verification failed: unitary oracle mismatch", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    m = _load_matrix(args.matrix)
    seq = GateSequence.from_text(_read_text(args.program), m.n, m.dim)
    if args.mode == "symplectic":
        ok = sequence_matrix(seq) == m
    else:
        ok = check_program(seq, m, _tolerance())
    if not ok:
        print("mismatch")
        return EXIT_VERIFY
    print("ok")
    return EXIT_OK


def _format_witness(m: SymplecticMatrix) -> str:
    return "[" + " ".join(str(int(v)) for v in m.mat.ravel()) + "]"


def _cmd_embed_check(args: argparse.Namespace) -> int:
    emb = Embedding(args.n, args.r_x, args.r_z)
    if emb.d > 36:
        print(f"ambient dimension {emb.d} exceeds the embed-check cap 36", file=sys.stderr)
        return EXIT_SCALE
    qft = logical_feasible_single(emb, "qft")
    phase = logical_feasible_single(emb, "phase")
    summ = logical_feasible_sum(emb)
    print(f"symplectic: {'yes' if qft is not None and phase is not None else 'no'}")
    print(f"QFT: {'feasible ' + _format_witness(qft) if qft is not None else 'infeasible'}")
    print(
        "PhaseShift: "
        + (("feasible " + _format_witness(phase)) if phase is not None else "infeasible")
    )
    print(f"SUM: feasible {_format_witness(summ)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffsynth",
        description=(
            "Exact synthesis of qudit Clifford operations over the "
            "Fourier / phase-shift / sum gate set."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify_kwargs = dict(
        choices=["none", "symplectic", "unitary"],
        default="none",
        help="check the printed program before exiting",
    )

    p_synth = sub.add_parser("synth", help="decompose a symplectic matrix file")
    p_synth.add_argument("matrix", help="matrix file (or - for stdin)")
    p_synth.add_argument("--verify", **verify_kwargs)
    p_synth.set_defaults(func=_cmd_synth)

    p_tr = sub.add_parser("transport", help="map one Pauli word to another")
    p_tr.add_argument("source", help="word like 'd=6 n=2 a=1,0 b=0,3'")
    p_tr.add_argument("target", help="word in the same format")
    p_tr.add_argument("--verify", **verify_kwargs)
    p_tr.set_defaults(func=_cmd_transport)

    p_peg = sub.add_parser("peg", help="reduce a Pauli word to its normal form")
    p_peg.add_argument("word", help="word like 'd=6 n=2 a=1,0 b=0,3'")
    p_peg.add_argument("--verify", **verify_kwargs)
    p_peg.set_defaults(func=_cmd_peg)

    p_ver = sub.add_parser("verify", help="check a gate program against a matrix")
    p_ver.add_argument("matrix", help="matrix file")
    p_ver.add_argument("program", nargs="?", default="-", help="program file (default stdin)")
    p_ver.add_argument(
        "--mode", choices=["symplectic", "unitary"], default="symplectic"
    )
    p_ver.set_defaults(func=_cmd_verify)

    p_emb = sub.add_parser("embed-check", help="analyze a logical embedding")
    p_emb.add_argument("n", type=int, help="logical dimension")
    p_emb.add_argument("r_x", type=int, help="X spacing")
    p_emb.add_argument("r_z", type=int, help="Z spacing")
    p_emb.set_defaults(func=_cmd_embed_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NonSymplecticError, DegenerateWordError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ScaleLimitError as exc:
        print(f"scale limit: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except CliffSynthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
