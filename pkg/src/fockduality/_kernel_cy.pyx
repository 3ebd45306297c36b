# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled CSC kernels over Gaussian-integer data (the hot inner loop)."""

import numpy as np
cimport numpy as cnp
cimport cython


def csc_matmul(Py_ssize_t n,
               cnp.int64_t[::1] ai, cnp.int64_t[::1] aj,
               cnp.int64_t[::1] are, cnp.int64_t[::1] aim,
               cnp.int64_t[::1] bi, cnp.int64_t[::1] bj,
               cnp.int64_t[::1] bre, cnp.int64_t[::1] bim):
    """C = A @ B for n x n CSC matrices with Gaussian-integer data."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] acc_re_a = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] acc_im_a = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] mark_a = np.full(n, -1, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] touched_a = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] acc_re = acc_re_a
    cdef cnp.int64_t[::1] acc_im = acc_im_a
    cdef cnp.int64_t[::1] mark = mark_a
    cdef cnp.int64_t[::1] touched = touched_a

    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_i = np.zeros(n + 1, dtype=np.int64)
    cdef Py_ssize_t cap = max(16, bj.shape[0] + aj.shape[0])
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_j = np.zeros(cap, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_re = np.zeros(cap, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_im = np.zeros(cap, dtype=np.int64)

    cdef Py_ssize_t col, t, s, r, row, nt, i, j, nnz = 0
    cdef cnp.int64_t vre, vim, wre, wim, key_j, key_re, key_im

    for col in range(n):
        nt = 0
        for t in range(bi[col], bi[col + 1]):
            r = bj[t]
            vre = bre[t]
            vim = bim[t]
            for s in range(ai[r], ai[r + 1]):
                row = aj[s]
                wre = are[s]
                wim = aim[s]
                if mark[row] != col:
                    mark[row] = col
                    acc_re[row] = 0
                    acc_im[row] = 0
                    touched[nt] = row
                    nt += 1
                acc_re[row] += wre * vre - wim * vim
                acc_im[row] += wre * vim + wim * vre
        # insertion sort of the touched rows (small per-column fill)
        for i in range(1, nt):
            key_j = touched[i]
            j = i - 1
            while j >= 0 and touched[j] > key_j:
                touched[j + 1] = touched[j]
                j -= 1
            touched[j + 1] = key_j
        if nnz + nt > cap:
            cap = max(cap * 2, nnz + nt)
            out_j = np.resize(out_j, cap)
            out_re = np.resize(out_re, cap)
            out_im = np.resize(out_im, cap)
        for i in range(nt):
            row = touched[i]
            if acc_re[row] != 0 or acc_im[row] != 0:
                out_j[nnz] = row
                out_re[nnz] = acc_re[row]
                out_im[nnz] = acc_im[row]
                nnz += 1
        out_i[col + 1] = nnz
    return out_i, out_j[:nnz].copy(), out_re[:nnz].copy(), out_im[:nnz].copy()


def csc_lincomb(Py_ssize_t n, cnp.int64_t ca_re, cnp.int64_t ca_im,
                cnp.int64_t[::1] ai, cnp.int64_t[::1] aj,
                cnp.int64_t[::1] are, cnp.int64_t[::1] aim,
                cnp.int64_t cb_re, cnp.int64_t cb_im,
                cnp.int64_t[::1] bi, cnp.int64_t[::1] bj,
                cnp.int64_t[::1] bre, cnp.int64_t[::1] bim):
    """C = (ca)*A + (cb)*B with Gaussian-integer scalars."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_i = np.zeros(n + 1, dtype=np.int64)
    cdef Py_ssize_t cap = max(16, aj.shape[0] + bj.shape[0])
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_j = np.zeros(cap, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_re = np.zeros(cap, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out_im = np.zeros(cap, dtype=np.int64)

    cdef Py_ssize_t col, ta, tb, ea, eb, nnz = 0
    cdef cnp.int64_t ra, rb, re, im, vre, vim

    for col in range(n):
        ta = ai[col]
        ea = ai[col + 1]
        tb = bi[col]
        eb = bi[col + 1]
        while ta < ea or tb < eb:
            ra = aj[ta] if ta < ea else n
            rb = bj[tb] if tb < eb else n
            re = 0
            im = 0
            if ra <= rb:
                vre = are[ta]
                vim = aim[ta]
                re += ca_re * vre - ca_im * vim
                im += ca_re * vim + ca_im * vre
                ta += 1
            if rb <= ra:
                vre = bre[tb]
                vim = bim[tb]
                re += cb_re * vre - cb_im * vim
                im += cb_re * vim + cb_im * vre
                tb += 1
            if re != 0 or im != 0:
                out_j[nnz] = ra if ra <= rb else rb
                out_re[nnz] = re
                out_im[nnz] = im
                nnz += 1
        out_i[col + 1] = nnz
    return out_i, out_j[:nnz].copy(), out_re[:nnz].copy(), out_im[:nnz].copy()
