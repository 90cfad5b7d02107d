"""Pure-Python reduction kernel; the compiled module mirrors this API."""

from __future__ import annotations

from .errors import NoFinerGenerator, NotInGroup


def row_key(rows) -> tuple:
    seen: dict = {}
    return tuple(seen.setdefault(tuple(x & 1 for x in r), i) for i, r in enumerate(rows))


def reduce_loop(rows, k, gen_ops, ffp):
    """Strip syllables off M/√2^k until k = 0.

    ``gen_ops[j]`` lists, for each column i of the (j+1)-th generator image,
    the partner row p and sign s with column i = e_i + s·e_p (over √2).
    ``ffp`` maps a residue row key to a generator index (1-based).
    Returns (indices, rows, op_count).
    """
    rows = [list(r) for r in rows]
    indices = []
    ops = 0
    while k > 0:
        key = row_key(rows)
        j = ffp.get(key)
        if j is None:
            raise NoFinerGenerator(f"no generator for residue key {key}")
        indices.append(j)
        new = []
        odd = 0
        for i, (p, s) in enumerate(gen_ops[j - 1]):
            a, b = rows[i], rows[p]
            if s > 0:
                sums = [x + y for x, y in zip(a, b)]
            else:
                sums = [x - y for x, y in zip(a, b)]
            for x in sums:
                odd |= x
            new.append([x >> 1 for x in sums])
        if odd & 1:
            raise NotInGroup("reduction step left an odd entry")
        rows = new
        k -= 1
        # 36 parities, 36 additions, 36 shifts per step
        ops += 108
    return indices, rows, ops


def _mul4(x, y):
    a0, a1, a2, a3 = x
    b0, b1, b2, b3 = y
    return (
        a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
        a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
        a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
        a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
    )


def apply_column(mats, vec, k):
    """Apply 4×4 Z[ω] matrices (last first) to a column vector over √2^k.

    ``mats`` holds (entries, mk) pairs with entries[i][j] a coordinate
    4-tuple; the vector is kept in canonical form after every step.
    Returns (vec, k, op_count).
    """
    ops = 0
    v = list(vec)
    for m, mk in reversed(mats):
        nv = []
        for i in range(4):
            row = m[i]
            s0 = s1 = s2 = s3 = 0
            for j in range(4):
                x, y = row[j], v[j]
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
            if any((a + c) & 1 or (b + d) & 1 for a, b, c, d in v):
                break
            v = [((b - d) >> 1, (a + c) >> 1, (b + d) >> 1, (c - a) >> 1) for a, b, c, d in v]
            k -= 1
            ops += 4
    return v, k, ops
