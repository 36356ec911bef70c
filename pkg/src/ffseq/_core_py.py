"""Pure-Python kernel implementations (fallback for the compiled core)."""

from __future__ import annotations

import numpy as np


def rank(mat, tables):
    addl, mull, negl, invl = tables.lists()
    rows = [list(map(int, row)) for row in np.asarray(mat)]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        pinv = invl[prow[c]]
        if pinv != 1:
            scale = mull[pinv]
            prow = rows[r] = [scale[x] for x in prow]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[c]
            if f:
                mrow = mull[negl[f]]
                rows[i] = [addl[a][mrow[b]] for a, b in zip(row, prow)]
        r += 1
    return r


def matmul(a, b, tables):
    a = np.asarray(a, dtype=np.uint16)
    b = np.asarray(b, dtype=np.uint16)
    add, mul = tables.add, tables.mul
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint16)
    for t in range(a.shape[1]):
        out = add[out, mul[a[:, t][:, None], b[t, :][None, :]]]
    return out


def poly_mul(a, b, tables):
    addl, mull = tables.lists()[:2]
    a = [int(x) for x in np.asarray(a)]
    b = [int(x) for x in np.asarray(b)]
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            mrow = mull[ai]
            for j, bj in enumerate(b):
                if bj:
                    k = i + j
                    out[k] = addl[out[k]][mrow[bj]]
    return np.array(out, dtype=np.uint16)


def padic_expand(f, p, K, tables):
    addl, mull, negl, _ = tables.lists()
    p = [int(x) for x in np.asarray(p)]
    dp = len(p) - 1
    work = [int(x) for x in np.asarray(f)]
    out = np.zeros((K, dp), dtype=np.uint16)
    for k in range(K):
        if not work:
            break
        # synthetic division by the monic modulus: afterwards the low dp
        # entries hold the residue and the rest the quotient
        for i in range(len(work) - 1, dp - 1, -1):
            c = work[i]
            if c:
                mrow = mull[negl[c]]
                base = i - dp
                for j in range(dp):
                    pj = p[j]
                    if pj:
                        work[base + j] = addl[work[base + j]][mrow[pj]]
        for j, v in enumerate(work[:dp]):
            out[k, j] = v
        work = work[dp:]
    return out
