# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reduction kernel.  Entries stay Python ints (arbitrary precision);
the gain comes from typed loop control and avoiding per-step allocations."""

from .errors import NoFinerGenerator, NotInGroup


cpdef tuple row_key(list rows):
    cdef dict seen = {}
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(6):
        r = rows[i]
        t = (r[0] & 1, r[1] & 1, r[2] & 1, r[3] & 1, r[4] & 1, r[5] & 1)
        out.append(seen.setdefault(t, i))
    return tuple(out)


def reduce_loop(rows, Py_ssize_t k, gen_ops, dict ffp):
    cdef list cur = [list(r) for r in rows]
    cdef list indices = []
    cdef list new, a, b, nr
    cdef Py_ssize_t i, c, p, j
    cdef int s
    cdef long long ops = 0
    cdef object odd, x
    cdef tuple colops
    while k > 0:
        key = row_key(cur)
        jj = ffp.get(key)
        if jj is None:
            raise NoFinerGenerator(f"no generator for residue key {key}")
        j = jj
        indices.append(j)
        colops = gen_ops[j - 1]
        new = []
        odd = 0
        for i in range(6):
            p, s = colops[i]
            a = cur[i]
            b = cur[p]
            nr = [None] * 6
            if s > 0:
                for c in range(6):
                    x = a[c] + b[c]
                    odd |= x
                    nr[c] = x >> 1
            else:
                for c in range(6):
                    x = a[c] - b[c]
                    odd |= x
                    nr[c] = x >> 1
            new.append(nr)
        if odd & 1:
            raise NotInGroup("reduction step left an odd entry")
        cur = new
        k -= 1
        ops += 108
    return indices, cur, ops


cdef inline tuple _mul4(tuple x, tuple y):
    a0, a1, a2, a3 = x
    b0, b1, b2, b3 = y
    return (
        a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
        a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
        a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
        a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
    )


def apply_column(list mats, vec, Py_ssize_t k):
    cdef long long ops = 0
    cdef list v = list(vec)
    cdef list nv
    cdef tuple x, y, p, row
    cdef Py_ssize_t i, j, n, mk
    cdef bint odd
    for n in range(len(mats) - 1, -1, -1):
        m, mk = mats[n]
        nv = []
        for i in range(4):
            row = m[i]
            s0 = s1 = s2 = s3 = 0
            for j in range(4):
                x = row[j]
                y = v[j]
                if (x[0] or x[1] or x[2] or x[3]) and (y[0] or y[1] or y[2] or y[3]):
                    p = _mul4(x, y)
                    s0 += p[0]
                    s1 += p[1]
                    s2 += p[2]
                    s3 += p[3]
                    ops += 1
            nv.append((s0, s1, s2, s3))
        v = nv
        k += mk
        while k > 0:
            odd = False
            for i in range(4):
                a, b, c, d = v[i]
                if (a + c) & 1 or (b + d) & 1:
                    odd = True
                    break
            if odd:
                break
            nv = []
            for i in range(4):
                a, b, c, d = v[i]
                nv.append(((b - d) >> 1, (a + c) >> 1, (b + d) >> 1, (c - a) >> 1))
            v = nv
            k -= 1
            ops += 4
    return v, k, ops
