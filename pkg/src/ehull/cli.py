"""Command-line interface: ``ehull <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from collections.abc import Sequence

from ehull import buildup, classify, equivalence, oracle, symplectic
from ehull.code import ECode, canonical_generator_matrix, from_generator_matrix, min_weight_word
from ehull.errors import DimensionError, GuardExceeded, HypothesisError, MatrixFormatError
from ehull.ring import EMatrix
from ehull.textio import format_matrix, read_matrix

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GUARD = 2
EXIT_HYPOTHESIS = 3


def _bits(text: str) -> tuple[int, ...]:
    if not text or any(ch not in "01" for ch in text):
        raise argparse.ArgumentTypeError(f"expected a 0/1 string, got {text!r}")
    return tuple(int(ch) for ch in text)


def _load(path: str) -> ECode:
    try:
        return from_generator_matrix(read_matrix(path))
    except OSError as exc:
        raise MatrixFormatError(f"{path}: {exc.strerror}") from exc


def _block(title: str, m: EMatrix) -> list[str]:
    body = format_matrix(m) if m else "(empty)"
    return [f"{title}:", body]


def _flags(c: ECode) -> str:
    return f"length {c.length}, k1 {c.k1}, k2 {c.k2}, free {'yes' if c.is_free else 'no'}"


def _cmd_hull(args: argparse.Namespace) -> list[str]:
    c = _load(args.matrix)
    h = symplectic.hull(c, args.side)
    out = [f"code: {_flags(c)}"]
    out += _block(f"{args.side} hull generator", canonical_generator_matrix(h))
    out.append(f"hull residue dim {h.residue.nrows}, torsion dim {h.torsion.nrows}")
    out.append(f"hull: {_flags(h)}")
    if c.is_free:
        out.append(f"hull-rank: {symplectic.hull_rank(c)}")
    else:
        out.append("hull-rank: undefined (code is not free)")
    return out


def _cmd_dual(args: argparse.Namespace) -> list[str]:
    c = _load(args.matrix)
    d = symplectic.dual(c, args.side)
    out = _block(f"{args.side} dual generator", canonical_generator_matrix(d))
    out.append(f"(k1, k2) = ({d.k1}, {d.k2})")
    return out


def _cmd_distance(args: argparse.Namespace) -> list[str]:
    c = _load(args.matrix)
    if c.is_zero:
        raise MatrixFormatError("minimum distance of the zero code is undefined")
    d, word = min_weight_word(c)
    return [f"d_s: {d}", "witness: " + " ".join(e.symbol for e in word)]


def _cmd_buildup(args: argparse.Namespace) -> list[str]:
    c = _load(args.matrix)
    build = buildup.construction_i if args.mode == "i" else buildup.construction_ii
    parity = buildup.construction_i_parity if args.mode == "i" else buildup.construction_ii_parity
    x = args.x
    if x is None:
        x = buildup.default_x(c)
    d = build(c, x)
    out = [
        "x: " + "".join(map(str, x)),
        f"input: [{c.length},{c.k1}] hull-rank {symplectic.hull_rank(c)}",
        f"output: [{d.length},{d.k1}] hull-rank {symplectic.hull_rank(d)}",
    ]
    out += _block("generator", d.generator_matrix())
    if args.parity:
        y = args.y
        if y is None:
            if args.mode == "ii":
                x_pair, y = buildup.find_parity_pair_ii(c)
                if x_pair != tuple(x):
                    raise HypothesisError(
                        "x does not meet the parity hypotheses; try --x " + "".join(map(str, x_pair))
                    )
            else:
                y = x
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", buildup.ParityRankWarning)
            h = parity(c, x, y)
        out.append("y: " + "".join(map(str, y)))
        out += _block("parity-check", h)
        for w in caught:
            out.append(f"warning: {w.message}")
        ok = buildup.parity_generates_dual(d, h)
        out.append(f"parity-check generates the two-sided dual: {'yes' if ok else 'no'}")
    return out


def _cmd_classify(args: argparse.Namespace) -> list[str]:
    if args.paper:
        report = classify.paper_report()
        entries = [(f"l{i}-optimal", e) for i, group in report.items() for e in group]
        counts = ", ".join(f"l{i}: {len(group)}" for i, group in report.items())
    else:
        if args.length is None:
            raise MatrixFormatError("--length is required unless --paper is given")
        ranks = [args.rank] if args.rank is not None else range(1, args.length + 1)
        entries = []
        for k in ranks:
            if args.hull_rank is None:
                found = classify.enumerate_classes(args.length, k)
            else:
                found = classify.optimal_codes(args.length, k, args.hull_rank)
            entries += [(None, e) for e in found]
        counts = f"{len(entries)} classes"
    if args.format == "records":
        lines = []
        for group, e in entries:
            rec = e.to_record()
            if group:
                rec = {"group": group, **rec}
            lines.append(json.dumps(rec, sort_keys=True))
        return lines
    out = []
    for group, e in entries:
        head = f"{group} " if group else ""
        out.append(
            f"{head}[{e.length},{e.k}] hull-rank {e.hull_rank} d_s {e.d_s} "
            f"class size {e.class_size} spectrum {list(e.hull_rank_spectrum)}"
        )
        out.append(format_matrix(e.generator))
    out.append(f"total: {counts}")
    return out


def _cmd_equiv(args: argparse.Namespace) -> list[str]:
    a, b = _load(args.a), _load(args.b)
    if args.symplectic_only:
        if a.length != b.length:
            return ["inequivalent"]
        equivalence._search_guard(a.length)
        hits = [p for p in equivalence.symplectic_permutations(a.n) if equivalence.apply(a, p) == b]
        p = hits[0] if hits else None
    else:
        p = equivalence.are_equivalent(a, b)
    if p is None:
        return ["inequivalent"]
    return ["equivalent", "permutation (1-based images): " + " ".join(map(str, p.one_based()))]


def _cmd_verify(args: argparse.Namespace) -> tuple[list[str], bool]:
    lengths = [args.length] if args.length else [2, 4, 6]
    out, ok = [], True
    for length in lengths:
        if length % 2:
            raise DimensionError("length must be even")
        samples = args.samples if length >= 6 else None
        out.append(f"length {length}:")
        for result in oracle.cross_check(length // 2, samples=samples, seed=args.seed):
            out.append("  " + result.line())
            ok &= result.passed
    return out, ok


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ehull", description="Symplectic hulls of codes over the ring E.")
    sub = parser.add_subparsers(dest="command", required=True)
    sides = ("left", "right", "two")

    p = sub.add_parser("hull", help="hull of a code")
    p.add_argument("matrix")
    p.add_argument("--side", choices=sides, default="two")

    p = sub.add_parser("dual", help="symplectic dual of a code")
    p.add_argument("matrix")
    p.add_argument("--side", choices=sides, default="two")

    p = sub.add_parser("distance", help="minimum symplectic distance")
    p.add_argument("matrix")

    p = sub.add_parser("buildup", help="build-up constructions")
    p.add_argument("matrix")
    p.add_argument("--mode", choices=("i", "ii"), required=True)
    p.add_argument("--x", type=_bits)
    p.add_argument("--y", type=_bits)
    p.add_argument("--parity", action="store_true")

    p = sub.add_parser("classify", help="classify free codes up to equivalence")
    p.add_argument("--length", type=int)
    p.add_argument("--rank", type=int)
    p.add_argument("--hull-rank", type=int)
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.add_argument("--paper", action="store_true", help="optimal classes for lengths 2 and 4")

    p = sub.add_parser("equiv", help="permutation equivalence of two free codes")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--symplectic-only", action="store_true")

    p = sub.add_parser("verify", help="cross-check formulas against brute force")
    p.add_argument("--length", type=int)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    handlers = {
        "hull": _cmd_hull,
        "dual": _cmd_dual,
        "distance": _cmd_distance,
        "buildup": _cmd_buildup,
        "classify": _cmd_classify,
        "equiv": _cmd_equiv,
    }
    status = EXIT_OK
    try:
        if args.command == "verify":
            lines, ok = _cmd_verify(args)
            status = EXIT_OK if ok else EXIT_HYPOTHESIS
        else:
            lines = handlers[args.command](args)
    except HypothesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (MatrixFormatError, DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
