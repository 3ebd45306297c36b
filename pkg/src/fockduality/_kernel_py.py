"""Pure-Python fallback for the Gaussian-integer CSC kernels.

Mirrors the compiled _kernel_cy module; selected by kernels.py when the
extension is unavailable or FOCKDUALITY_PURE is set.
"""

from __future__ import annotations

import numpy as np


def csc_matmul(n, ai, aj, are, aim, bi, bj, bre, bim):
    """C = A @ B for n x n CSC matrices with Gaussian-integer data."""
    acc_re = [0] * n
    acc_im = [0] * n
    mark = [-1] * n
    out_i = np.zeros(n + 1, dtype=np.int64)
    out_j = []
    out_re = []
    out_im = []
    for col in range(n):
        touched = []
        for t in range(bi[col], bi[col + 1]):
            r = bj[t]
            vre = int(bre[t])
            vim = int(bim[t])
            for s in range(ai[r], ai[r + 1]):
                row = aj[s]
                wre = int(are[s])
                wim = int(aim[s])
                if mark[row] != col:
                    mark[row] = col
                    acc_re[row] = 0
                    acc_im[row] = 0
                    touched.append(row)
                acc_re[row] += wre * vre - wim * vim
                acc_im[row] += wre * vim + wim * vre
        touched.sort()
        for row in touched:
            if acc_re[row] != 0 or acc_im[row] != 0:
                out_j.append(row)
                out_re.append(acc_re[row])
                out_im.append(acc_im[row])
        out_i[col + 1] = len(out_j)
    return (out_i, np.array(out_j, dtype=np.int64),
            np.array(out_re, dtype=np.int64), np.array(out_im, dtype=np.int64))


def csc_lincomb(n, ca_re, ca_im, ai, aj, are, aim, cb_re, cb_im, bi, bj, bre, bim):
    """C = (ca)*A + (cb)*B with Gaussian-integer scalars ca, cb."""
    out_i = np.zeros(n + 1, dtype=np.int64)
    out_j = []
    out_re = []
    out_im = []
    for col in range(n):
        sa, ea = ai[col], ai[col + 1]
        sb, eb = bi[col], bi[col + 1]
        merged = {}
        for t in range(sa, ea):
            re = int(are[t])
            im = int(aim[t])
            merged[int(aj[t])] = (ca_re * re - ca_im * im, ca_re * im + ca_im * re)
        for t in range(sb, eb):
            re = int(bre[t])
            im = int(bim[t])
            pre, pim = merged.get(int(bj[t]), (0, 0))
            merged[int(bj[t])] = (pre + cb_re * re - cb_im * im,
                                  pim + cb_re * im + cb_im * re)
        for row in sorted(merged):
            re, im = merged[row]
            if re != 0 or im != 0:
                out_j.append(row)
                out_re.append(re)
                out_im.append(im)
        out_i[col + 1] = len(out_j)
    return (out_i, np.array(out_j, dtype=np.int64),
            np.array(out_re, dtype=np.int64), np.array(out_im, dtype=np.int64))
