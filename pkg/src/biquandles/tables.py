"""Finite biquandle operation tables and their text format.

A biquandle of order n is presented by a 2n x 2n block matrix

    [ B1 | B2 ]      B1[i][j] = i ^ j     (up)
    [----+----]      B2[i][j] = i sub j   (down)
    [ B3 | B4 ]      B3[i][j] = i ^ jbar  (upbar)
                     B4[i][j] = i sub jbar (downbar)

with elements named by 1-based indices.  A ``BiquandleTable`` stores any
candidate table; satisfying the axioms is decided separately by
``axioms.verify_biquandle``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import MatrixParseError

KINDS = ("up", "down", "upbar", "downbar")

Block = tuple[tuple[int, ...], ...]


def _check_block(n, name, rows):
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"{name} block must be {n}x{n}")
    for row in rows:
        for e in row:
            if not isinstance(e, int) or not 1 <= e <= n:
                raise ValueError(f"{name} entry {e!r} outside 1..{n}")


@dataclass(frozen=True)
class BiquandleTable:
    """Order plus the four operation blocks, entries 1-based."""

    n: int
    up: Block
    down: Block
    upbar: Block
    downbar: Block

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("order must be >= 1")
        for kind in KINDS:
            _check_block(self.n, kind, getattr(self, kind))

    def op(self, kind: str, a: int, b: int) -> int:
        """Table entry for ``a <kind> b`` (all 1-based)."""
        if kind not in KINDS:
            raise ValueError(f"unknown operation kind {kind!r}")
        if not 1 <= a <= self.n or not 1 <= b <= self.n:
            raise ValueError(
                f"element index out of range: ({a}, {b}) for order {self.n}")
        return getattr(self, kind)[a - 1][b - 1]

    def flat(self, kind: str) -> tuple[int, ...]:
        """0-based flattened block, as consumed by the kernels."""
        return tuple(e - 1 for row in getattr(self, kind) for e in row)

    def flats(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.flat(kind) for kind in KINDS)


def from_blocks(up, down, upbar, downbar) -> BiquandleTable:
    """Build a table from four row-iterables, inferring the order."""
    blocks = [tuple(tuple(row) for row in blk)
              for blk in (up, down, upbar, downbar)]
    return BiquandleTable(len(blocks[0]), *blocks)


def op_lookup(table: BiquandleTable, kind: str, a: int, b: int) -> int:
    return table.op(kind, a, b)


def trivial_biquandle(n: int) -> BiquandleTable:
    """All four operations return their first argument."""
    if n < 1:
        raise ValueError("order must be >= 1")
    block = tuple(tuple(i for _ in range(n)) for i in range(1, n + 1))
    return BiquandleTable(n, block, block, block, block)


def serialize_matrix(table: BiquandleTable) -> str:
    """Text form: order line, then 2n rows of the 2n-column block matrix."""
    n = table.n
    lines = [str(n)]
    for left, right in ((table.up, table.down), (table.upbar, table.downbar)):
        for i in range(n):
            lines.append(" ".join(str(e) for e in left[i] + right[i]))
    return "\n".join(lines) + "\n"


def _tokenize(text):
    """Yield (line_number, [(column, token), ...]) skipping comments/blanks."""
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        yield ln, [(i + 1, tok) for i, tok in enumerate(line.split())]


def parse_matrix(text: str) -> BiquandleTable:
    """Parse the block-matrix format written by ``serialize_matrix``.

    Comment lines start with '#'; blank lines and trailing whitespace are
    ignored.  Raises ``MatrixParseError`` with the offending line/column.
    """
    rows = list(_tokenize(text))
    if not rows:
        raise MatrixParseError("missing order line", 1)
    ln, toks = rows[0]
    if len(toks) != 1:
        raise MatrixParseError("order line must hold a single integer", ln,
                               toks[1][0] if len(toks) > 1 else 1)
    try:
        n = int(toks[0][1])
    except ValueError:
        raise MatrixParseError(f"order is not an integer: {toks[0][1]!r}",
                               ln, toks[0][0]) from None
    if n < 1:
        raise MatrixParseError("order must be >= 1", ln, toks[0][0])

    body = rows[1:]
    if len(body) != 2 * n:
        where = body[-1][0] if body else ln
        raise MatrixParseError(
            f"expected {2 * n} matrix rows, found {len(body)}", where)

    grid = []
    for ln, toks in body:
        if len(toks) != 2 * n:
            raise MatrixParseError(
                f"expected {2 * n} entries, found {len(toks)}", ln,
                toks[-1][0] if toks else 1)
        row = []
        for col, tok in toks:
            try:
                e = int(tok)
            except ValueError:
                raise MatrixParseError(f"non-integer entry {tok!r}",
                                       ln, col) from None
            if not 1 <= e <= n:
                raise MatrixParseError(
                    f"entry {e} outside 1..{n}", ln, col)
            row.append(e)
        grid.append(row)

    def block(r0, c0):
        return tuple(tuple(grid[r0 + i][c0 + j] for j in range(n))
                     for i in range(n))

    return BiquandleTable(n, block(0, 0), block(0, n), block(n, 0),
                          block(n, n))


def normalize_map(f, n_src: int, n_dst: int) -> tuple[int, ...]:
    """Coerce a 1-based element map to a length-``n_src`` tuple of images."""
    if isinstance(f, Mapping):
        try:
            images = [f[i] for i in range(1, n_src + 1)]
        except KeyError as exc:
            raise ValueError(f"map is not total: missing {exc}") from None
    else:
        images = list(f)
        if len(images) != n_src:
            raise ValueError(
                f"map must assign all {n_src} elements, got {len(images)}")
    for v in images:
        if not isinstance(v, int) or not 1 <= v <= n_dst:
            raise ValueError(f"map value {v!r} outside 1..{n_dst}")
    return tuple(images)


def is_homomorphism(src: BiquandleTable, dst: BiquandleTable, f) -> bool:
    """True iff f preserves all four operations on every pair.

    ``f`` maps 1-based src elements to 1-based dst elements, given either as
    a sequence of images for 1..n or as a mapping.
    """
    images = normalize_map(f, src.n, dst.n)
    for kind in KINDS:
        ts = getattr(src, kind)
        td = getattr(dst, kind)
        for a in range(src.n):
            fa = images[a]
            for b in range(src.n):
                if images[ts[a][b] - 1] != td[fa - 1][images[b] - 1]:
                    return False
    return True
