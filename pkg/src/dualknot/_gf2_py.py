"""Pure-Python GF(2) elimination on int bitsets.

Row ``r`` of a matrix is an int whose bit ``c`` is the entry in column ``c``.
"""

from __future__ import annotations


def rank(rows: list[int], ncols: int) -> int:
    """Rank over GF(2).  Pivots are taken by increasing column index."""
    pivots: dict[int, int] = {}
    r = 0
    for row in rows:
        while row:
            low = (row & -row).bit_length() - 1
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = row
                r += 1
                break
            row ^= piv
    return r


def echelon(rows: list[int]) -> dict[int, int]:
    """Reduced pivot table ``{lowest set column: row}`` spanning ``rows``."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            low = (row & -row).bit_length() - 1
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = row
                break
            row ^= piv
    return pivots


def reduce(vec: int, pivots: dict[int, int]) -> int:
    while vec:
        low = (vec & -vec).bit_length() - 1
        piv = pivots.get(low)
        if piv is None:
            return vec
        vec ^= piv
    return 0


def nullspace(rows: list[int], ncols: int) -> list[int]:
    """Basis of ``{v : sum_r v_r * rows[r] = 0}``, vectors as bitsets over row indices.

    With ``rows[g]`` the boundary of generator ``g`` this is a cycle basis.
    """
    mask = (1 << ncols) - 1
    pivots: dict[int, int] = {}
    kernel = []
    for r, row in enumerate(rows):
        vec = row | (1 << (ncols + r))
        while vec & mask:
            low = (vec & -vec).bit_length() - 1
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = vec
                break
            vec ^= piv
        else:
            kernel.append(vec >> ncols)
    return kernel
