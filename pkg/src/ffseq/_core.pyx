# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for table-driven F_q arithmetic on index matrices."""

import numpy as np


def rank(unsigned short[:, :] mat,
         const unsigned short[:, :] addt, const unsigned short[:, :] mult,
         const unsigned short[:] negt, const unsigned short[:] invt):
    cdef Py_ssize_t nrows = mat.shape[0]
    cdef Py_ssize_t ncols = mat.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef unsigned short f, pinv, tmp
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if mat[i, c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = mat[r, j]
                mat[r, j] = mat[piv, j]
                mat[piv, j] = tmp
        pinv = invt[mat[r, c]]
        if pinv != 1:
            for j in range(c, ncols):
                mat[r, j] = mult[pinv, mat[r, j]]
        for i in range(r + 1, nrows):
            f = mat[i, c]
            if f:
                f = negt[f]
                for j in range(c, ncols):
                    mat[i, j] = addt[mat[i, j], mult[f, mat[r, j]]]
        r += 1
    return r


def matmul(const unsigned short[:, :] a, const unsigned short[:, :] b,
           const unsigned short[:, :] addt, const unsigned short[:, :] mult):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t kk = a.shape[1]
    cdef Py_ssize_t m = b.shape[1]
    out_arr = np.zeros((n, m), dtype=np.uint16)
    cdef unsigned short[:, :] out = out_arr
    cdef Py_ssize_t i, t, j
    cdef unsigned short av
    for i in range(n):
        for t in range(kk):
            av = a[i, t]
            if av:
                for j in range(m):
                    if b[t, j]:
                        out[i, j] = addt[out[i, j], mult[av, b[t, j]]]
    return out_arr


def poly_mul(const unsigned short[:] a, const unsigned short[:] b,
             const unsigned short[:, :] addt, const unsigned short[:, :] mult):
    cdef Py_ssize_t na = a.shape[0]
    cdef Py_ssize_t nb = b.shape[0]
    out_arr = np.zeros(na + nb - 1, dtype=np.uint16)
    cdef unsigned short[:] out = out_arr
    cdef Py_ssize_t i, j
    cdef unsigned short ai
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                if b[j]:
                    out[i + j] = addt[out[i + j], mult[ai, b[j]]]
    return out_arr


def padic_expand(const unsigned short[:] f, const unsigned short[:] p, Py_ssize_t K,
                 const unsigned short[:, :] addt, const unsigned short[:, :] mult,
                 const unsigned short[:] negt):
    cdef Py_ssize_t dp = p.shape[0] - 1
    cdef Py_ssize_t nf = f.shape[0]
    out_arr = np.zeros((K, dp), dtype=np.uint16)
    cdef unsigned short[:, :] out = out_arr
    work_arr = np.ascontiguousarray(f, dtype=np.uint16).copy()
    cdef unsigned short[:] work = work_arr
    cdef Py_ssize_t lo = 0          # start of the live window in work
    cdef Py_ssize_t hi = nf         # end of the live window
    cdef Py_ssize_t k, i, j, base
    cdef unsigned short c
    for k in range(K):
        if lo >= hi:
            break
        for i in range(hi - 1, lo + dp - 1, -1):
            c = work[i]
            if c:
                c = negt[c]
                base = i - dp
                for j in range(dp):
                    if p[j]:
                        work[base + j] = addt[work[base + j], mult[c, p[j]]]
        for j in range(dp):
            if lo + j < hi:
                out[k, j] = work[lo + j]
        lo += dp
    return out_arr
