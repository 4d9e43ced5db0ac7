"""Pure-numpy kernel implementations (fallback backend).

Same call signatures as the numba backend.  Everything is vectorized over
tuples and, where possible, over whole batches of words; the brute kernel
chunks its tuples-by-words matrix to bound memory.
"""

from __future__ import annotations

import numpy as np

_CHUNK_CELLS = 1 << 21


def evolve_state(table, rhs, codes, values):
    """Fold one word over a state vector: values[t] <- table[values[t], rhs[c][t]]."""
    out = np.array(values, dtype=np.int64, copy=True)
    for c in codes:
        out = table[out, rhs[c]]
    return out


def batch_membership(table, rhs, identity, init_values, codes_mat):
    """For each word (row of token codes), does the folded state hit the
    identity anywhere?"""
    num_words, length = codes_mat.shape
    vals = np.broadcast_to(init_values, (num_words, init_values.shape[0])).copy()
    for i in range(length):
        rows = rhs[codes_mat[:, i]]
        vals = table[vals, rows]
    return np.any(vals == identity, axis=1)


def batch_first_witness(
    table, inverses, gen_elems, order, arity, strides, identity, codes_mat
):
    """First solving tuple index per word (mixed-radix order), or -1.

    Evaluates each word right to left with left multiplication, decoding
    tuple components from the index; this is a separate route from the
    state-vector fold above.
    """
    num_words, length = codes_mat.shape
    total = int(order) ** int(arity)
    result = np.full(num_words, -1, dtype=np.int64)
    num_gens = len(gen_elems)
    chunk = max(1, _CHUNK_CELLS // max(num_words, 1))
    for start in range(0, total, chunk):
        tuples = np.arange(start, min(start + chunk, total), dtype=np.int64)
        width = tuples.shape[0]
        # element denoted by each token code at each tuple in the chunk
        lut = np.empty((num_gens + 2 * arity, width), dtype=np.int64)
        lut[:num_gens] = np.asarray(gen_elems, dtype=np.int64)[:, None]
        for j in range(arity):
            comp = (tuples // strides[j]) % order
            lut[num_gens + 2 * j] = comp
            lut[num_gens + 2 * j + 1] = inverses[comp]
        vals = np.full((num_words, width), identity, dtype=np.int64)
        for i in range(length - 1, -1, -1):
            vals = table[lut[codes_mat[:, i]], vals]
        hits = vals == identity
        any_hit = hits.any(axis=1)
        first = np.argmax(hits, axis=1)
        update = any_hit & (result < 0)
        result[update] = tuples[0] + first[update]
        if np.all(result >= 0):
            break
    return result
