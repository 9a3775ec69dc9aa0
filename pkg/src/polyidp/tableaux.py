"""Semistandard Young tableaux: validation, contents, Kostka counts, and
the column-stripping decomposition of a tableau into summand shapes.

A tableau is a tuple of row tuples with entries from 1, 2, 3, ...; rows
weakly increase left to right and columns strictly increase top to bottom.
Counting and witness search are exhaustive backtracking on purpose: they
serve as the brute-force oracle against the dominance-based support tests.
"""

from __future__ import annotations

from .errors import LetterOutOfRange, ShapeMismatch, ShapeSumMismatch, SizeMismatch
from .partitions import LatticePoint, Partition, partition_sum, trim

Rows = tuple[tuple[int, ...], ...]


def shape_of(rows) -> Partition:
    """Row lengths of a filling; raises ShapeMismatch if they increase."""
    lengths = tuple(len(r) for r in rows)
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        raise ShapeMismatch(f"row lengths {lengths} are not weakly decreasing")
    return trim(lengths)


def is_ssyt(rows) -> bool:
    """Check the two tableau conditions on a filling with valid shape."""
    rows = tuple(tuple(r) for r in rows)
    shape_of(rows)
    for r in rows:
        if any(not isinstance(v, int) or v < 1 for v in r):
            return False
        if any(r[i] > r[i + 1] for i in range(len(r) - 1)):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(upper[c] >= lower[c] for c in range(len(lower))):
            return False
    return True


def content(rows, num_letters: int) -> LatticePoint:
    """Occurrence counts of the letters 1..num_letters in a tableau."""
    counts = [0] * num_letters
    for r in rows:
        for v in r:
            if not 1 <= v <= num_letters:
                raise LetterOutOfRange(f"entry {v} outside 1..{num_letters}")
            counts[v - 1] += 1
    return tuple(counts)


def _fillings(shape: Partition, alpha):
    """Yield every SSYT of the given shape and content, in reading order.

    Cells are filled row-major; at each cell candidate letters are tried in
    increasing order, so the first filling yielded is the witness used by
    ssyt_witness and the total number yielded is the Kostka count.
    """
    shape = trim(shape)
    nrows = len(shape)
    letters = len(alpha)
    if nrows > letters:
        return
    remaining = list(alpha)
    grid = [[0] * w for w in shape]
    # suffix_cells[r] = cells in rows r.. ; only letters > r may sit there
    suffix_cells = [0] * (nrows + 1)
    for r in range(nrows - 1, -1, -1):
        suffix_cells[r] = suffix_cells[r + 1] + shape[r]

    def fill(pos: int):
        if pos == suffix_cells[0]:
            yield tuple(tuple(r) for r in grid)
            return
        # locate cell (r, c) in reading order
        acc = 0
        r = 0
        while acc + shape[r] <= pos:
            acc += shape[r]
            r += 1
        c = pos - acc
        lo = r + 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, letters + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[r][c] = v
            # prune: rows below row r can only hold letters above r+1
            ok = True
            for rr in range(nrows - 1, r, -1):
                have = sum(remaining[rr:letters])
                want = suffix_cells[rr]
                if have < want:
                    ok = False
                    break
            if ok:
                yield from fill(pos + 1)
            remaining[v - 1] += 1
            grid[r][c] = 0

    yield from fill(0)


def kostka(shape, alpha) -> int:
    """Number of SSYT of the given shape and content, by exhaustive search."""
    shape = trim(shape)
    if sum(shape) != sum(alpha):
        raise SizeMismatch(f"content size {sum(alpha)} != shape size {sum(shape)}")
    return sum(1 for _ in _fillings(shape, tuple(alpha)))


def ssyt_witness(shape, alpha) -> Rows | None:
    """First SSYT of the given shape and content under the fixed search
    order, or None when no filling exists."""
    shape = trim(shape)
    if sum(shape) != sum(alpha):
        raise SizeMismatch(f"content size {sum(alpha)} != shape size {sum(shape)}")
    for rows in _fillings(shape, tuple(alpha)):
        return rows
    return None


def _columns(rows) -> list[tuple[int, ...]]:
    """Columns of a tableau, leftmost first, top to bottom within a column."""
    rows = [tuple(r) for r in rows]
    width = len(rows[0]) if rows else 0
    return [
        tuple(rows[r][c] for r in range(len(rows)) if len(rows[r]) > c)
        for c in range(width)
    ]


def _rows_from_columns(cols) -> Rows:
    height = max((len(c) for c in cols), default=0)
    return tuple(
        tuple(col[r] for col in cols if len(col) > r) for r in range(height)
    )


def decompose_tableau(rows, shapes: list) -> list[Rows]:
    """Split a tableau into tableaux of the given summand shapes.

    Works stage by stage on the number of rows of the shrinking source
    tableau.  At stage ``level`` each summand claims, in list order, as many
    whole leftmost columns as its current last part; claimed columns are
    appended to that summand left to right, so taller columns end up on the
    left.  The summand's parts then all shrink by the claimed amount and its
    last coordinate is dropped, and the next stage runs one level lower.
    Every output column is literally a column of the input.
    """
    rows = tuple(tuple(r) for r in rows)
    sigma = shape_of(rows)
    if trim(partition_sum(list(shapes))) != sigma:
        raise ShapeSumMismatch(
            f"shapes sum to {partition_sum(list(shapes)) if shapes else ()}, tableau shape is {sigma}"
        )
    nrows = len(sigma)
    current = [list(trim(s)) + [0] * (nrows - len(trim(s))) for s in shapes]
    cols = _columns(rows)
    front = 0
    out_cols: list[list[tuple[int, ...]]] = [[] for _ in shapes]
    for level in range(nrows, 0, -1):
        for j, parts in enumerate(current):
            take = parts[level - 1]
            for _ in range(take):
                col = cols[front]
                front += 1
                if len(col) != level:
                    raise ShapeSumMismatch(
                        "column heights disagree with the summand shapes"
                    )
                out_cols[j].append(col)
            current[j] = [p - take for p in parts[:-1]]
    return [_rows_from_columns(cs) for cs in out_cols]
