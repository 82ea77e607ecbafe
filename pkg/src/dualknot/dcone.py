"""Tuple algebra of the surgery cones.

``DGen`` is ``[x, i, j, k, l] (x) zeta^t``: ``(i, j)`` move together with the
U-power drop of an arrow, ``(k, l)`` with the Alexander drop, and ``t`` is a
``zeta``-exponent in ``[0, q)``.  ``BGen`` is ``[x, i, j] (x) T^tbar`` in the
twisted complex; its differential drops ``i`` and ``j`` by the U-power drop
and keeps ``tbar``.

Spin^c classes of the dual knot are integers::

    spinc_d = q * (A(x) + j - k) + p * (i - j) + t
    spinc_b = tbar + p * (i - j)

The flip ``iota`` acts on twisted generators as ``[x, i, j] -> [iota x, i, j]``
and on 4-tuples through the identification ``psi`` (see :func:`tau_d`).
"""

from __future__ import annotations

from typing import NamedTuple

from .cfk import KnotComplex


class DGen(NamedTuple):
    x: str
    i: int
    j: int
    k: int
    l: int
    t: int = 0

    @property
    def delta(self) -> int:
        return self.i - self.j + self.k - self.l


class BGen(NamedTuple):
    x: str
    i: int
    j: int
    tbar: int


def d_differential(g: DGen, K: KnotComplex) -> list[DGen]:
    x, i, j, k, l, t = g
    return [DGen(y, i - a, j - a, k - b, l - b, t) for y, (a, b) in K.out(x)]


def b_differential(g: BGen, K: KnotComplex) -> list[BGen]:
    x, i, j, tbar = g
    return [BGen(y, i - a, j - a, tbar) for y, (a, _b) in K.out(x)]


def gi_up(g: DGen) -> tuple[int, int]:
    return (max(g.i, g.l), max(g.j, g.k))


def gi_down(g: DGen) -> tuple[int, int]:
    return (g.i, g.j)


def gi_down_b(g: BGen) -> tuple[int, int]:
    return (g.i, g.j)


def summand_index(g: DGen, K: KnotComplex) -> int:
    """``A(x) + j - k``: the ``s`` of the summand ``D_1^s`` containing ``g``."""
    return K.A(g.x) + g.j - g.k


def spinc_d(g: DGen, K: KnotComplex, p: int, q: int) -> int:
    return q * summand_index(g, K) + p * (g.i - g.j) + g.t


def spinc_b(g: BGen, p: int) -> int:
    return g.tbar + p * (g.i - g.j)


def h_map(g: DGen, K: KnotComplex, p: int, q: int) -> BGen:
    return BGen(g.x, g.i, g.j, q * summand_index(g, K) + g.t)


def v_map(g: DGen, K: KnotComplex, p: int, q: int) -> BGen:
    return BGen(K.iota(g.x), g.l, g.k, q * summand_index(g, K) + g.t + p)


def psi(g: DGen, K: KnotComplex) -> BGen:
    """Identification of ``D_1`` with the twisted complex: ``[x,i,j] T^(-A(x)+k-j)``."""
    return BGen(g.x, g.i, g.j, -K.A(g.x) + g.k - g.j)


def psi_inverse(b: BGen, K: KnotComplex) -> DGen:
    k = b.tbar + K.A(b.x) + b.j
    return DGen(b.x, b.i, b.j, k, b.i - b.j + k - 1)


def tau_d(g: DGen, K: KnotComplex) -> DGen:
    """Flip on 4-tuples, ``psi^-1 . iota . psi``; keeps ``i, j, t`` and shifts ``k, l`` by ``-2A(x)``."""
    s = 2 * K.A(g.x)
    return DGen(K.iota(g.x), g.i, g.j, g.k - s, g.l - s, g.t)


def v_n(g: DGen, K: KnotComplex, n: int) -> DGen:
    """Integer-surgery map ``tau[x, l, k, 2k - j - n, 2l - i - n]``."""
    return tau_d(DGen(g.x, g.l, g.k, 2 * g.k - g.j - n, 2 * g.l - g.i - n, g.t), K)


def g_pq_intro(g: DGen, K: KnotComplex, p: int, q: int) -> DGen:
    """Rational map ``tau[x, l, k, 2k - j - c, 2l - i - c] (x) zeta^(t + p)`` with ``c = floor((t + p) / q)``."""
    c, t = divmod(g.t + p, q)
    return tau_d(DGen(g.x, g.l, g.k, 2 * g.k - g.j - c, 2 * g.l - g.i - c, t), K)


def psi_q(g: DGen, K: KnotComplex, q: int) -> BGen:
    """Identification of ``D_1 (x) Z[zeta]/(zeta^q - 1)`` with the twisted complex; equals ``h``."""
    return BGen(g.x, g.i, g.j, q * summand_index(g, K) + g.t)
