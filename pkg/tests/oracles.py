"""Independent reference computations used only by the tests.

Nothing here imports the package under test.
"""

import itertools
import math


def failure_pair(mu):
    """Failure-state probabilities keyed by (copy1, copy2)."""
    base = (1.0 - abs(mu)) / 4.0
    q = {(a, b): base for a in (0, 1) for b in (0, 1)}
    if mu > 0:
        q[(1, 1)] += mu
    else:
        q[(0, 0)] += -mu
    return q


def brute_force_distribution(input_bit, depth, eps, mu, eta, xi):
    """Enumerate every copier outcome and every leaf result of the tree.

    Each of the ``2**depth - 1`` copiers (breadth-first order, children of
    node ``k`` are ``2k+1`` and ``2k+2``) either succeeds or fails into one
    of four pairs.  Leaf ``k`` (left to right) sets bit ``k`` of the pattern.
    """
    n_copiers = 2**depth - 1
    n_leaves = 2**depth
    q = failure_pair(mu)
    choices = ["ok"] + list(q)
    dist = [0.0] * (2**n_leaves)
    for config in itertools.product(choices, repeat=n_copiers):
        weight = 1.0
        value = {0: input_bit}
        for k, choice in enumerate(config):
            if choice == "ok":
                weight *= eps
                value[2 * k + 1] = value[2 * k + 2] = value[k]
            else:
                weight *= (1.0 - eps) * q[choice]
                value[2 * k + 1], value[2 * k + 2] = choice
        if weight == 0.0:
            continue
        leaves = [value[n_copiers + j] for j in range(n_leaves)]
        for outcome in itertools.product((0, 1), repeat=n_leaves):
            w = weight
            for bit, click in zip(leaves, outcome):
                p_click = eta if bit else eta * xi
                w *= p_click if click else 1.0 - p_click
            index = sum(click << j for j, click in enumerate(outcome))
            dist[index] += w
    return dist


def mutual_information_loops(priors, rows):
    """Plain-loop Shannon mutual information in bits."""
    n_out = len(rows[0])
    marg = [sum(priors[i] * rows[i][j] for i in range(len(priors))) for j in range(n_out)]
    total = 0.0
    for i, pi in enumerate(priors):
        for j in range(n_out):
            pji = rows[i][j]
            if pi > 0 and pji > 0:
                total += pi * pji * math.log2(pji / marg[j])
    return total
