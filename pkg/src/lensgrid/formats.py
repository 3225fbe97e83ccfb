"""Text formats: ``.lgrid`` diagrams and move scripts.

A diagram file has the lines ``lens p q``, ``index n``, ``z s_0 .. s_{n-1}``
and ``w s_0 .. s_{n-1}`` in this order; blank lines and lines starting with
``#`` are ignored. Emission is canonical: those four lines, single spaces,
slots reduced mod p*n, and a trailing newline.

A move script has one move per line::

    commute-cols 2
    commute-rows 0
    stab W:SE 1
    destab W:SE@1,4
"""

from __future__ import annotations

from .errors import ParseError
from .grid import GridDiagram, validate
from .moves import STAB_TYPES, GridMove

_KEYS = ("lens", "index", "z", "w")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def _fields(raw: str):
    """Split a line into (token, column) pairs."""
    out = []
    col = 0
    for tok in raw.split():
        col = raw.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def _int(tok: str, lineno: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, found {tok!r}", lineno, col) from None


def parse_lgrid(text: str) -> GridDiagram:
    """Parse a diagram. Syntax errors raise ParseError; well formed files
    describing an invalid diagram raise the matching InvalidDiagram."""
    values: dict[str, list[int]] = {}
    last = 0
    for lineno, raw in _content_lines(text):
        last = lineno
        fields = _fields(raw)
        key, kcol = fields[0]
        want = _KEYS[len(values)] if len(values) < len(_KEYS) else None
        if key != want:
            msg = f"expected {want!r}, found {key!r}" if want else f"unexpected line {key!r}"
            raise ParseError(msg, lineno, kcol)
        nums = [_int(t, lineno, c) for t, c in fields[1:]]
        expected = {"lens": 2, "index": 1}.get(key)
        if key in ("z", "w"):
            expected = values["index"][0]
        if len(nums) != expected:
            # point at the first surplus value, or just past the end
            col = fields[expected + 1][1] if len(nums) > expected else len(raw.rstrip()) + 1
            raise ParseError(f"{key!r} takes {expected} values, found {len(nums)}", lineno, col)
        if key == "index" and nums[0] < 1:
            raise ParseError("index must be positive", lineno, fields[1][1])
        values[key] = nums
    if len(values) < len(_KEYS):
        raise ParseError(f"missing {_KEYS[len(values)]!r} line", last + 1, 1)
    p, q = values["lens"]
    if (p, q) == (1, 0):
        return GridDiagram(1, 0, tuple(values["z"]), tuple(values["w"]))
    return validate(p, q, values["z"], values["w"])


def emit_lgrid(d: GridDiagram) -> str:
    return (f"lens {d.p} {d.q}\n"
            f"index {d.n}\n"
            f"z {' '.join(map(str, d.z))}\n"
            f"w {' '.join(map(str, d.w))}\n")


def read_lgrid(path) -> GridDiagram:
    with open(path, encoding="utf-8") as fh:
        return parse_lgrid(fh.read())


# -- move scripts ---------------------------------------------------------------

def _parse_site(tok: str, lineno: int, col: int) -> GridMove:
    try:
        stab_type, rest = tok.split("@")
        row, slot = rest.split(",")
        row_i, slot_i = int(row), int(slot)
    except ValueError:
        raise ParseError(f"expected a site TYPE@row,slot, found {tok!r}", lineno, col) from None
    if stab_type not in STAB_TYPES:
        raise ParseError(f"unknown stabilization type {stab_type!r}", lineno, col)
    return GridMove("destab", row_i, stab_type, slot_i)


def parse_moves(text: str) -> list[GridMove]:
    moves = []
    for lineno, raw in _content_lines(text):
        fields = _fields(raw)
        verb, vcol = fields[0]
        args = fields[1:]
        arity = {"commute-cols": 1, "commute-rows": 1, "stab": 2, "destab": 1}.get(verb)
        if arity is None:
            raise ParseError(f"unknown move {verb!r}", lineno, vcol)
        if len(args) != arity:
            col = args[arity][1] if len(args) > arity else len(raw.rstrip()) + 1
            raise ParseError(f"{verb} takes {arity} argument(s)", lineno, col)
        if verb in ("commute-cols", "commute-rows"):
            moves.append(GridMove(verb, _int(args[0][0], lineno, args[0][1])))
        elif verb == "stab":
            (t, tcol), (r, rcol) = args
            if t not in STAB_TYPES:
                raise ParseError(f"unknown stabilization type {t!r}", lineno, tcol)
            moves.append(GridMove("stab", _int(r, lineno, rcol), t))
        else:
            moves.append(_parse_site(args[0][0], lineno, args[0][1]))
    return moves


def emit_moves(moves) -> str:
    return "".join(f"{m}\n" for m in moves)
