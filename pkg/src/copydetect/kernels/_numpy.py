"""Pure-numpy implementations of the hot kernels."""

import numpy as np


def combine_children(pair, child0, child1):
    """Mix two child pattern distributions through a copier's pair distribution.

    ``pair[b1, b2]`` is the probability that the left copy is ``b1`` and the
    right copy ``b2``; ``child0``/``child1`` are the subtree distributions for
    input 0/1.  The left child fills the low-order index bits, so
    ``out[r * L + l] = sum pair[b1, b2] * child_b1[l] * child_b2[r]``.
    """
    children = np.stack((child0, child1))
    return np.einsum("ab,al,br->rl", pair, children, children).ravel()


def sample_patterns(input_bit, depth, eps, fail_cdf, leaf_plus, uniforms):
    """Sample one outcome-pattern index per row of ``uniforms``.

    Row layout: for each copier in breadth-first order a success draw and a
    failure-pair draw, then one draw per leaf detector.
    """
    n = uniforms.shape[0]
    bits = np.full((n, 1), input_bit, dtype=np.int64)
    col = 0
    for level in range(depth):
        width = 1 << level
        u_ok = uniforms[:, col : col + 2 * width : 2]
        u_fail = uniforms[:, col + 1 : col + 2 * width : 2]
        col += 2 * width
        pair_idx = np.searchsorted(fail_cdf[:3], u_fail.ravel(), side="right").reshape(n, width)
        ok = u_ok < eps
        left = np.where(ok, bits, pair_idx >> 1)
        right = np.where(ok, bits, pair_idx & 1)
        nxt = np.empty((n, 2 * width), dtype=np.int64)
        nxt[:, 0::2] = left
        nxt[:, 1::2] = right
        bits = nxt
    n_leaves = 1 << depth
    clicks = uniforms[:, col : col + n_leaves] < leaf_plus[bits]
    weights = np.left_shift(np.uint64(1), np.arange(n_leaves, dtype=np.uint64))
    return (clicks.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
