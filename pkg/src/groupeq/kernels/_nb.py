"""Numba kernel implementations (default backend).

Scalar inner loops with early exits; compiled on first use and cached.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def evolve_state(table, rhs, codes, values):
    out = values.copy()
    for idx in range(codes.shape[0]):
        row = rhs[codes[idx]]
        for t in range(out.shape[0]):
            out[t] = table[out[t], row[t]]
    return out


@njit(cache=True)
def batch_membership(table, rhs, identity, init_values, codes_mat):
    num_words = codes_mat.shape[0]
    length = codes_mat.shape[1]
    total = init_values.shape[0]
    result = np.zeros(num_words, dtype=np.bool_)
    vals = np.empty(total, dtype=np.int64)
    for w in range(num_words):
        vals[:] = init_values
        for i in range(length):
            row = rhs[codes_mat[w, i]]
            for t in range(total):
                vals[t] = table[vals[t], row[t]]
        for t in range(total):
            if vals[t] == identity:
                result[w] = True
                break
    return result


@njit(cache=True)
def batch_first_witness(
    table, inverses, gen_elems, order, arity, strides, identity, codes_mat
):
    num_words = codes_mat.shape[0]
    length = codes_mat.shape[1]
    num_gens = gen_elems.shape[0]
    total = 1
    for _ in range(arity):
        total *= order
    result = np.full(num_words, -1, dtype=np.int64)
    for w in range(num_words):
        for tup in range(total):
            val = identity
            # right to left, multiplying on the left: independent of the
            # state-vector fold used by the membership kernels
            for i in range(length - 1, -1, -1):
                c = codes_mat[w, i]
                if c < num_gens:
                    elem = gen_elems[c]
                else:
                    v = c - num_gens
                    g = (tup // strides[v // 2]) % order
                    if v % 2 == 1:
                        g = inverses[g]
                    elem = g
                val = table[elem, val]
            if val == identity:
                result[w] = tup
                break
    return result
