"""Pure-numpy kernels. Reference path and fallback when numba is unavailable."""

import numpy as np

# Columns processed per block; bounds temporaries to q * CHUNK entries.
CHUNK = 256


def _blocks(ws):
    for i in range(0, len(ws), CHUNK):
        yield i, ws[i:i + CHUNK]


def count111(chi, sub, a, b, ws):
    """For each w in ws: number of x adjacent to a, b and w."""
    ws = np.asarray(ws, dtype=np.int64)
    base = (chi[sub[:, a]] == 1) & (chi[sub[:, b]] == 1)
    out = np.empty(len(ws), dtype=np.int64)
    for i, blk in _blocks(ws):
        adj = chi[sub[:, blk]] == 1
        out[i:i + len(blk)] = np.count_nonzero(adj & base[:, None], axis=0)
    return out


def curve_stats(chi, sqcount, sub, exp, log, a, b, ws):
    """Character sum S, square-value count m and point count N of
    y^2 = (x-a)(x-b)(x-w) for each w in ws."""
    ws = np.asarray(ws, dtype=np.int64)
    n = len(exp) // 2
    la, lb = log[sub[:, a]], log[sub[:, b]]
    S = np.empty(len(ws), dtype=np.int64)
    m = np.empty(len(ws), dtype=np.int64)
    N = np.empty(len(ws), dtype=np.int64)
    for i, blk in _blocks(ws):
        lw = log[sub[:, blk]]
        zero = (la[:, None] < 0) | (lb[:, None] < 0) | (lw < 0)
        f = exp[(la[:, None] + lb[:, None] + lw) % n]
        f[zero] = 0
        j = slice(i, i + len(blk))
        S[j] = chi[f].sum(axis=0, dtype=np.int64)
        m[j] = np.count_nonzero(chi[f] == 1, axis=0)
        N[j] = 1 + sqcount[f].sum(axis=0)
    return S, m, N


def find_c_table(chi, sub, neg, squares):
    """out[a, b] = smallest square c with a - c and b + c nonzero squares, else -1.

    Rows or columns with a == 0 or b == 0 are left at -1.
    """
    q = len(chi)
    out = np.full((q, q), -1, dtype=np.int32)
    negb = neg[1:]
    for a in range(1, q):
        cands = squares[chi[sub[a, squares]] == 1]
        todo = np.arange(q - 1)
        for start in range(0, len(cands), 32):
            if not len(todo):
                break
            blk = cands[start:start + 32]
            ok = chi[sub[blk[None, :], negb[todo][:, None]]] == 1
            hit = ok.any(axis=1)
            out[a, 1 + todo[hit]] = blk[ok[hit].argmax(axis=1)]
            todo = todo[~hit]
    return out
