# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled window kernels. Same contract as ``_fallback``."""

from cpython cimport array
import array

cdef long long ABSENT = -1


def fill_table(long long shift, holes, keys, values, Py_ssize_t width):
    cdef array.array out = array.array("q")
    array.resize(out, width)
    cdef long long[:] t = out
    cdef Py_ssize_t n
    for n in range(width):
        t[n] = n + shift
    for h in holes:
        if h < width:
            t[h] = ABSENT
    for a, b in zip(keys, values):
        if a < width:
            t[a] = b
    return out


def absent_positions(const long long[:] table):
    cdef Py_ssize_t n
    out = []
    for n in range(table.shape[0]):
        if table[n] == ABSENT:
            out.append(n)
    return out


def image_gaps(const long long[:] table, Py_ssize_t limit):
    cdef array.array hit = array.array("b")
    array.resize(hit, limit)
    cdef signed char[:] h = hit
    cdef Py_ssize_t n
    cdef long long v
    for n in range(limit):
        h[n] = 0
    for n in range(table.shape[0]):
        v = table[n]
        if 0 <= v < limit:
            h[v] = 1
    out = []
    for n in range(limit):
        if not h[n]:
            out.append(n)
    return out


def compose_tables(const long long[:] outer, const long long[:] inner):
    cdef Py_ssize_t size = outer.shape[0]
    cdef Py_ssize_t width = inner.shape[0]
    cdef array.array out = array.array("q")
    array.resize(out, width)
    cdef long long[:] r = out
    cdef Py_ssize_t n
    cdef long long v
    for n in range(width):
        v = inner[n]
        if v == ABSENT:
            r[n] = ABSENT
        elif v >= size:
            raise IndexError(f"value {v} falls outside the outer table of width {size}")
        else:
            r[n] = outer[v]
    return out


def shared_value_points(const long long[:] table):
    cdef Py_ssize_t width = table.shape[0]
    cdef long long top = 0
    cdef Py_ssize_t n
    for n in range(width):
        if table[n] > top:
            top = table[n]
    cdef array.array counts = array.array("q")
    array.resize(counts, top + 1)
    cdef long long[:] c = counts
    for n in range(top + 1):
        c[n] = 0
    for n in range(width):
        if table[n] != ABSENT:
            c[table[n]] += 1
    out = []
    for n in range(width):
        if table[n] != ABSENT and c[table[n]] > 1:
            out.append(n)
    return out


def mismatch_positions(const long long[:] a, const long long[:] b):
    cdef Py_ssize_t width = min(a.shape[0], b.shape[0])
    cdef Py_ssize_t n
    out = []
    for n in range(width):
        if a[n] != ABSENT and b[n] != ABSENT and a[n] != b[n]:
            out.append(n)
    return out
