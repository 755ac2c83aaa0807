"""Pure-Python window kernels. Same contract as the compiled ``_speedups``."""

from array import array

ABSENT = -1


def fill_table(shift, holes, keys, values, width):
    out = array("q", range(shift, width + shift))
    for h in holes:
        if h < width:
            out[h] = ABSENT
    for a, b in zip(keys, values):
        if a < width:
            out[a] = b
    return out


def absent_positions(table):
    return [n for n, v in enumerate(table) if v == ABSENT]


def image_gaps(table, limit):
    hit = bytearray(limit)
    for v in table:
        if 0 <= v < limit:
            hit[v] = 1
    return [m for m in range(limit) if not hit[m]]


def compose_tables(outer, inner):
    size = len(outer)
    out = array("q", bytes(8 * len(inner)))
    for n, v in enumerate(inner):
        if v == ABSENT:
            out[n] = ABSENT
        elif v >= size:
            raise IndexError(f"value {v} falls outside the outer table of width {size}")
        else:
            out[n] = outer[v]
    return out


def shared_value_points(table):
    counts = {}
    for v in table:
        if v != ABSENT:
            counts[v] = counts.get(v, 0) + 1
    return [n for n, v in enumerate(table) if v != ABSENT and counts[v] > 1]


def mismatch_positions(a, b):
    return [n for n, (x, y) in enumerate(zip(a, b)) if x != ABSENT and y != ABSENT and x != y]
