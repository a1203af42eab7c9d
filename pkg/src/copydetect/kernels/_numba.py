"""Numba-compiled implementations of the hot kernels."""

import numpy as np
from numba import njit


@njit(cache=True)
def combine_children(pair, child0, child1):
    n = child0.shape[0]
    out = np.empty(n * n)
    for r in range(n):
        r0 = child0[r]
        r1 = child1[r]
        w0 = pair[0, 0] * r0 + pair[0, 1] * r1
        w1 = pair[1, 0] * r0 + pair[1, 1] * r1
        for left in range(n):
            out[r * n + left] = w0 * child0[left] + w1 * child1[left]
    return out


@njit(cache=True)
def sample_patterns(input_bit, depth, eps, fail_cdf, leaf_plus, uniforms):
    n = uniforms.shape[0]
    n_leaves = 1 << depth
    out = np.empty(n, dtype=np.uint64)
    cur = np.empty(n_leaves, dtype=np.int64)
    nxt = np.empty(n_leaves, dtype=np.int64)
    for t in range(n):
        cur[0] = input_bit
        col = 0
        for level in range(depth):
            width = 1 << level
            for k in range(width):
                if uniforms[t, col] < eps:
                    nxt[2 * k] = cur[k]
                    nxt[2 * k + 1] = cur[k]
                else:
                    u = uniforms[t, col + 1]
                    j = 0
                    while j < 3 and u >= fail_cdf[j]:
                        j += 1
                    nxt[2 * k] = j >> 1
                    nxt[2 * k + 1] = j & 1
                col += 2
            for k in range(2 * width):
                cur[k] = nxt[k]
        idx = np.uint64(0)
        for k in range(n_leaves):
            if uniforms[t, col + k] < leaf_plus[cur[k]]:
                idx |= np.uint64(1) << np.uint64(k)
        out[t] = idx
    return out
