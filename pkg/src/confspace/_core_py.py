"""Sparse exact integer elimination: Smith normal form and modular rank.

Pure-Python reference implementation of the hot kernels.  A compiled twin
(`confspace._core`, built from ``_core.pyx``) implements the same two
functions with the same pivoting order, so results are identical; import
goes through :mod:`confspace.kernels`.

The Smith normal form runs in two phases.  Phase 1 eliminates unit pivots
(+-1 entries), always pulling from the currently shortest column and
breaking ties toward the shortest row; boundary matrices of simplicial
complexes are almost entirely consumed here with little fill-in.  Phase 2
runs textbook gcd reduction on whatever remains, which is tiny in practice.
Entries are arbitrary-precision integers throughout, so overflow cannot
occur.
"""

from heapq import heapify, heappush, heappop
from math import gcd


def _build(entries):
    rows = {}
    cols = {}
    for i, j, v in entries:
        if v == 0:
            continue
        r = rows.setdefault(i, {})
        w = r.get(j, 0) + v
        if w == 0:
            del r[j]
            cols[j].discard(i)
        else:
            r[j] = w
            cols.setdefault(j, set()).add(i)
    for i in [i for i, r in rows.items() if not r]:
        del rows[i]
    for j in [j for j, c in cols.items() if not c]:
        del cols[j]
    return rows, cols


def _eliminate(rows, cols, pi, pj, heap=None):
    """Clear column pj with row pi (pivot value +-1), then drop both."""
    prow = rows.pop(pi)
    pv = prow.pop(pj)
    targets = cols.pop(pj)
    targets.discard(pi)
    for jj in prow:
        cols[jj].discard(pi)
    touched = set()
    for r in targets:
        rrow = rows[r]
        m = rrow.pop(pj) * pv  # multiplier; pv is its own inverse
        for jj, vv in prow.items():
            w = rrow.get(jj, 0) - m * vv
            if w == 0:
                if jj in rrow:
                    del rrow[jj]
                    cols[jj].discard(r)
                    touched.add(jj)
            else:
                if jj not in rrow:
                    cols[jj].add(r)
                    touched.add(jj)
                rrow[jj] = w
        if not rrow:
            del rows[r]
    for jj in list(touched):
        if jj in cols and not cols[jj]:
            del cols[jj]
            touched.discard(jj)
    if heap is not None:
        for jj in touched:
            heappush(heap, (len(cols[jj]), jj))


def _unit_phase(rows, cols):
    """Eliminate +-1 pivots, shortest column first.  Returns pivot count."""
    heap = [(len(c), j) for j, c in cols.items()]
    heapify(heap)
    units = 0
    while heap:
        cl, j = heappop(heap)
        c = cols.get(j)
        if c is None:
            continue
        if len(c) != cl:
            heappush(heap, (len(c), j))
            continue
        best = None
        for i in c:
            if abs(rows[i][j]) == 1:
                key = (len(rows[i]), i)
                if best is None or key < best:
                    best = key
        if best is None:
            continue  # revisited if the column is later modified
        _eliminate(rows, cols, best[1], j, heap)
        units += 1
    return units


def _min_entry(rows):
    best = None
    for i, r in rows.items():
        for j, v in r.items():
            key = (abs(v), i, j)
            if best is None or key < best:
                best = key
    return best


def _row_axpy(rows, cols, dst, src, c):
    """rows[dst] += c * rows[src]"""
    drow = rows.get(dst, None)
    if drow is None:
        drow = rows[dst] = {}
    for j, v in rows[src].items():
        w = drow.get(j, 0) + c * v
        if w == 0:
            if j in drow:
                del drow[j]
                cols[j].discard(dst)
                if not cols[j]:
                    del cols[j]
        else:
            if j not in drow:
                cols.setdefault(j, set()).add(dst)
            drow[j] = w
    if not drow:
        del rows[dst]


def _row_combine(rows, cols, i1, i2, a, b, c, d):
    """(row i1, row i2) <- (a*row1 + b*row2, c*row1 + d*row2)"""
    r1 = dict(rows.get(i1, {}))
    r2 = dict(rows.get(i2, {}))
    for i in (i1, i2):
        if i in rows:
            for j in rows[i]:
                cols[j].discard(i)
            del rows[i]
    new1, new2 = {}, {}
    for j in set(r1) | set(r2):
        v1 = r1.get(j, 0)
        v2 = r2.get(j, 0)
        w1 = a * v1 + b * v2
        w2 = c * v1 + d * v2
        if w1:
            new1[j] = w1
            cols.setdefault(j, set()).add(i1)
        if w2:
            new2[j] = w2
            cols.setdefault(j, set()).add(i2)
        if not w1 and not w2 and j in cols and not cols[j]:
            del cols[j]
    if new1:
        rows[i1] = new1
    if new2:
        rows[i2] = new2


def _col_combine(rows, cols, j1, j2, a, b, c, d):
    """(col j1, col j2) <- (a*col1 + b*col2, c*col1 + d*col2)"""
    affected = cols.get(j1, set()) | cols.get(j2, set())
    for i in affected:
        r = rows[i]
        v1 = r.get(j1, 0)
        v2 = r.get(j2, 0)
        w1 = a * v1 + b * v2
        w2 = c * v1 + d * v2
        for j, w in ((j1, w1), (j2, w2)):
            if w:
                if j not in r:
                    cols.setdefault(j, set()).add(i)
                r[j] = w
            elif j in r:
                del r[j]
                cols[j].discard(i)
        if not r:
            del rows[i]
    for j in (j1, j2):
        if j in cols and not cols[j]:
            del cols[j]


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _general_phase(rows, cols):
    """Textbook gcd-based diagonalization of the leftover block."""
    diag = []
    while rows:
        _, pi, pj = _min_entry(rows)
        while True:
            # clear column pj with row operations
            again = True
            while again:
                again = False
                for r in [r for r in cols.get(pj, ()) if r != pi]:
                    p = rows[pi][pj]
                    v = rows[r][pj]
                    if v % p == 0:
                        _row_axpy(rows, cols, r, pi, -(v // p))
                    else:
                        g, x, y = _xgcd(p, v)
                        _row_combine(rows, cols, pi, r,
                                     x, y, -(v // g), p // g)
                        again = True
            # clear row pi with column operations
            clean = True
            for j in [j for j in rows.get(pi, {}) if j != pj]:
                p = rows[pi][pj]
                v = rows[pi][j]
                if v % p == 0:
                    _col_combine(rows, cols, j, pj, 1, -(v // p), 0, 1)
                else:
                    g, x, y = _xgcd(p, v)
                    _col_combine(rows, cols, pj, j,
                                 x, y, -(v // g), p // g)
                    clean = False
            if clean and len(cols.get(pj, ())) == 1:
                break
        diag.append(abs(rows[pi][pj]))
        _eliminate_lone(rows, cols, pi, pj)
    return diag


def _eliminate_lone(rows, cols, pi, pj):
    prow = rows.pop(pi)
    for j in prow:
        cols[j].discard(pi)
        if not cols[j]:
            del cols[j]


def _divisibility_fixup(diag):
    ones = sum(1 for d in diag if d == 1)
    rest = sorted(d for d in diag if d != 1)
    changed = True
    while changed:
        changed = False
        for a in range(len(rest)):
            for b in range(a + 1, len(rest)):
                if rest[b] % rest[a]:
                    g = gcd(rest[a], rest[b])
                    rest[a], rest[b] = g, rest[a] // g * rest[b]
                    changed = True
        rest.sort()
    return [1] * ones + rest


def snf_invariant_factors(n_rows, n_cols, entries):
    """Invariant factors d1 | d2 | ... of an integer matrix.

    ``entries`` is an iterable of (row, col, value) triplets; duplicates
    are summed.  The rank is the length of the returned list.
    """
    rows, cols = _build(entries)
    units = _unit_phase(rows, cols)
    diag = [1] * units + _general_phase(rows, cols)
    return _divisibility_fixup(diag)


def rank_mod_p(n_rows, n_cols, entries, p=2147483647):
    """Rank of the matrix over GF(p); p must be prime."""
    rows = {}
    cols = {}
    for i, j, v in entries:
        v %= p
        if v == 0:
            continue
        r = rows.setdefault(i, {})
        w = (r.get(j, 0) + v) % p
        if w == 0:
            del r[j]
            cols[j].discard(i)
        else:
            r[j] = w
            cols.setdefault(j, set()).add(i)
    for i in [i for i, r in rows.items() if not r]:
        del rows[i]
    for j in [j for j, c in cols.items() if not c]:
        del cols[j]

    heap = [(len(c), j) for j, c in cols.items()]
    heapify(heap)
    rank = 0
    while cols:
        if heap:
            cl, j = heappop(heap)
            c = cols.get(j)
            if c is None:
                continue
            if len(c) != cl:
                heappush(heap, (len(c), j))
                continue
        else:
            j = next(iter(cols))
            c = cols[j]
        pi = min(c, key=lambda i: (len(rows[i]), i))
        pinv = pow(rows[pi][j], p - 2, p)
        prow = rows.pop(pi)
        pv = prow.pop(j)
        targets = cols.pop(j)
        targets.discard(pi)
        for jj in prow:
            cols[jj].discard(pi)
        touched = set()
        for r in targets:
            rrow = rows[r]
            m = rrow.pop(j) * pinv % p
            for jj, vv in prow.items():
                w = (rrow.get(jj, 0) - m * vv) % p
                if w == 0:
                    if jj in rrow:
                        del rrow[jj]
                        cols[jj].discard(r)
                        touched.add(jj)
                else:
                    if jj not in rrow:
                        cols[jj].add(r)
                        touched.add(jj)
                    rrow[jj] = w
            if not rrow:
                del rows[r]
        for jj in touched:
            if jj in cols:
                if cols[jj]:
                    heappush(heap, (len(cols[jj]), jj))
                else:
                    del cols[jj]
        rank += 1
    return rank
