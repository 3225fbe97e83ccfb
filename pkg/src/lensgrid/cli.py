"""Command line front end.

Exit status is 0 on success, 1 for a domain error (invalid diagram,
illegal move, ...) and 2 for malformed input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .berge import quadruple_invariants
from .complex import grid_complex
from .dinvariant import d_invariant
from .errors import LensGridError, ParseError
from .formats import emit_lgrid, parse_lgrid, parse_moves
from .grid import cover_diagram, dualize
from .homology import homology_hat
from .invariants import grid_invariant_gradings
from .legendrian import braid_word, classical_invariants
from .moves import apply_move


def _fr(x) -> str:
    return str(Fraction(x))


def _fr_list(xs) -> str:
    return " ".join(_fr(x) for x in xs)


def _read(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise LensGridError(f"cannot read {path}: {exc.strerror}") from None


def _diagram(path: str):
    return parse_lgrid(_read(path))


def cmd_validate(args, out):
    d = _diagram(args.file)
    out.append(f"valid: L({d.p},{d.q}) index {d.n}, {len(d.components)} component(s)")
    out.append(f"homology classes: {' '.join(map(str, d.homology_classes))}")


def cmd_generators(args, out):
    d = _diagram(args.file)
    C = grid_complex(d)
    out.append(f"count {len(C.generators)}")
    if args.count:
        return
    for x in C.generators:
        g = C.gradings[x]
        flag = "" if g.anchored else " (relative)"
        out.append(f"{' '.join(map(str, x))} | spinc {g.spinc} M {_fr(g.maslov)}{flag} "
                   f"A {_fr_list(g.alexander)}")


def cmd_homology(args, out):
    d = _diagram(args.file)
    if args.spinc is None:
        block = "all"
    elif args.alexander is None:
        raise LensGridError("--spinc needs --alexander")
    elif args.maslov is None:
        block = (args.spinc, args.alexander)
    else:
        block = (args.spinc, args.alexander, args.maslov)
    H = homology_hat(d, block)
    out.append("spinc A M rank")
    for (s, a, m), r in sorted(H.blocks.items()):
        out.append(f"{s} {_fr(a)} {_fr(m)} {r}")
    out.append(f"total {H.rank}")


def cmd_invariants(args, out):
    d = _diagram(args.file)
    b = grid_invariant_gradings(d)
    for name, x, g, hat, u in (("lambda+", b.x_plus, b.lambda_plus, b.hat_nonzero_plus, b.u_tower_plus),
                               ("lambda-", b.x_minus, b.lambda_minus, b.hat_nonzero_minus, b.u_tower_minus)):
        out.append(f"{name}: x = {' '.join(map(str, x))}")
        out.append(f"  M = {_fr(g.maslov)}")
        out.append(f"  A = {_fr_list(g.alexander)}")
        out.append(f"  spinc = {g.spinc}")
        out.append(f"  hat nonzero = {str(hat).lower()}")
        out.append(f"  U-nontorsion = {str(u).lower()}")
    out.append(f"M(theta) = {_fr(b.theta.maslov)}")
    out.append(f"A(theta) = {_fr(b.theta.collapsed)}")


def cmd_classical(args, out):
    d = _diagram(args.file)
    ci = classical_invariants(d)
    out.append(f"tb = {_fr(ci.tb)}")
    out.append(f"rot = {_fr(ci.rot)}")
    out.append(f"sl = {_fr(ci.sl)}")
    out.append(f"tb_i = {_fr_list(ci.tb_i)}")
    out.append(f"rot_i = {_fr_list(ci.rot_i)}")
    out.append(f"sl_i = {_fr_list(ci.sl_i)}")
    b = braid_word(d)
    out.append(f"braid strands = {b.strands}")
    out.append(f"braid writhe = {b.writhe}")
    out.append(f"braid word = {' '.join(map(str, b.word))}")


def cmd_dualize(args, out):
    out.append(emit_lgrid(dualize(_diagram(args.file))).rstrip("\n"))


def cmd_lift(args, out):
    out.append(emit_lgrid(cover_diagram(_diagram(args.file))).rstrip("\n"))


def cmd_move(args, out):
    d = _diagram(args.file)
    for move in parse_moves(_read(args.script)):
        d = apply_move(d, move)
    out.append(emit_lgrid(d).rstrip("\n"))


def cmd_berge(args, out):
    d = _diagram(args.file)
    r = quadruple_invariants(d, args.assume_s3_surgery)
    for key, val in (("hat_plus", r.hat_plus), ("hat_minus", r.hat_minus),
                     ("hat_plus_dual", r.hat_plus_dual), ("hat_minus_dual", r.hat_minus_dual),
                     ("index_one", r.index_one), ("floer_simple", r.floer_simple)):
        out.append(f"{key}: {str(val).lower()}")
    out.append(f"verdict: {r.verdict}")


def cmd_d(args, out):
    out.append(_fr(d_invariant(args.p, args.q, args.i)))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lensgrid", description="Grid homology for links in lens spaces.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def with_file(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help=".lgrid diagram")
        sp.set_defaults(fn=fn)
        return sp

    with_file("validate", cmd_validate, "check a diagram and count components")
    sp = with_file("generators", cmd_generators, "list generators with gradings")
    sp.add_argument("--count", action="store_true", help="only print the count")
    sp = with_file("homology", cmd_homology, "hat homology ranks by (spinc, A, M) block")
    sp.add_argument("--spinc", type=int)
    sp.add_argument("--alexander", type=Fraction)
    sp.add_argument("--maslov", type=Fraction)
    with_file("invariants", cmd_invariants, "GRID invariants and their gradings")
    with_file("classical", cmd_classical, "tb, rot, sl and the braid word")
    with_file("dualize", cmd_dualize, "dual diagram for L(p, p-q)")
    with_file("lift", cmd_lift, "stacked S^3 cover")
    sp = with_file("move", cmd_move, "apply a move script")
    sp.add_argument("script", help="move script")
    sp = with_file("berge", cmd_berge, "the four hat invariants and the index-one verdict")
    sp.add_argument("--assume-s3-surgery", action="store_true")
    sp = sub.add_parser("d", help="d-invariant d(p, q, i)")
    for name in ("p", "q", "i"):
        sp.add_argument(name, type=int)
    sp.set_defaults(fn=cmd_d)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out: list[str] = []
    try:
        args.fn(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except LensGridError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print("\n".join(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
