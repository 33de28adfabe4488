"""Plain-text rendering of abaci."""

from .partitions import Symbol, beta_set


def render_abacus(symbols, window):
    """Render an l-abacus over a position window (lo, hi), inclusive.

    One line per runner, runner l-1 on top and runner 0 at the bottom, after
    a header labeling the window ends.  'X' is a bead, '.' an empty
    position; positions increase left to right.
    """
    lo, hi = int(window[0]), int(window[1])
    if lo > hi:
        raise ValueError("window must satisfy lo <= hi")
    lines = [_header(lo, hi)]
    for s in reversed([Symbol(*s) for s in symbols]):
        beads = _beads_in(s, lo, hi)
        lines.append("".join("X" if j in beads else "." for j in range(lo, hi + 1)))
    return "\n".join(lines)


def _beads_in(sym, lo, hi):
    p, m = sym.partition, sym.charge
    rows = max(len(p), m - lo, 0)
    if rows == 0:
        # charge at or below the window and no parts: all beads sit below lo
        return frozenset()
    beads = {b for b in beta_set(p, m, rows) if lo <= b <= hi}
    # if the window bottom sits above lo, everything underneath it is full
    beads.update(range(lo, min(m - rows, hi + 1)))
    return beads


def _header(lo, hi):
    width = hi - lo + 1
    left, right = str(lo), str(hi)
    if width == 1:
        return left
    if len(left) + len(right) + 1 <= width:
        return left + " " * (width - len(left) - len(right)) + right
    return f"{lo}..{hi}"
