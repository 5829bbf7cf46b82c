"""numba-compiled kernels; same contracts as ``numpy_impl``."""

import numpy as np
from numba import njit


@njit(cache=True)
def count111(chi, sub, a, b, ws):
    # rows of sub are contiguous: read w - x and correct by chi(-1)
    q = chi.shape[0]
    sign = chi[sub[0, 1]]
    base = np.empty(q, dtype=np.bool_)
    for x in range(q):
        base[x] = chi[sub[x, a]] == 1 and chi[sub[x, b]] == 1
    out = np.zeros(ws.shape[0], dtype=np.int64)
    for j in range(ws.shape[0]):
        row = sub[ws[j]]
        n = 0
        for x in range(q):
            if base[x] and sign * chi[row[x]] == 1:
                n += 1
        out[j] = n
    return out


@njit(cache=True)
def curve_stats(chi, sqcount, sub, exp, log, a, b, ws):
    q = chi.shape[0]
    n = exp.shape[0] // 2
    # log(x - a) + log(x - b) + log(-1), reduced mod n; -1 marks a root
    lab = np.empty(q, dtype=np.int64)
    for x in range(q):
        la = log[sub[x, a]]
        lb = log[sub[x, b]]
        lab[x] = -1 if la < 0 or lb < 0 else (la + lb + n // 2) % n
    S = np.zeros(ws.shape[0], dtype=np.int64)
    m = np.zeros(ws.shape[0], dtype=np.int64)
    N = np.ones(ws.shape[0], dtype=np.int64)
    for j in range(ws.shape[0]):
        row = sub[ws[j]]
        s = 0
        mm = 0
        nn = 0
        for x in range(q):
            lw = log[row[x]]
            if lab[x] < 0 or lw < 0:
                f = 0
            else:
                f = exp[lab[x] + lw]
            c = chi[f]
            s += c
            mm += c == 1
            nn += sqcount[f]
        S[j] = s
        m[j] = mm
        N[j] += nn
    return S, m, N


@njit(cache=True)
def find_c_table(chi, sub, neg, squares):
    q = chi.shape[0]
    out = np.full((q, q), -1, dtype=np.int32)
    for a in range(1, q):
        for b in range(1, q):
            nb = neg[b]
            for i in range(squares.shape[0]):
                c = squares[i]
                if chi[sub[a, c]] == 1 and chi[sub[c, nb]] == 1:
                    out[a, b] = c
                    break
    return out
