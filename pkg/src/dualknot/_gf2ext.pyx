# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Packed-word GF(2) rank kernel.

Rows are stored as ``nwords`` little-endian uint64 words each, concatenated
into one flat buffer.
"""

from libc.stdint cimport uint64_t


def rank_packed(uint64_t[::1] buf, Py_ssize_t nrows, Py_ssize_t nwords):
    """Rank of the packed matrix.  ``buf`` is modified in place."""
    cdef Py_ssize_t col_word, r, piv, w, rank = 0
    cdef uint64_t bit, tmp
    cdef int b
    if nrows == 0 or nwords == 0:
        return 0
    with nogil:
        for col_word in range(nwords):
            for b in range(64):
                if rank == nrows:
                    break
                bit = (<uint64_t>1) << b
                piv = -1
                for r in range(rank, nrows):
                    if buf[r * nwords + col_word] & bit:
                        piv = r
                        break
                if piv < 0:
                    continue
                if piv != rank:
                    for w in range(col_word, nwords):
                        tmp = buf[piv * nwords + w]
                        buf[piv * nwords + w] = buf[rank * nwords + w]
                        buf[rank * nwords + w] = tmp
                for r in range(rank + 1, nrows):
                    if buf[r * nwords + col_word] & bit:
                        for w in range(col_word, nwords):
                            buf[r * nwords + w] ^= buf[rank * nwords + w]
                rank += 1
    return rank
