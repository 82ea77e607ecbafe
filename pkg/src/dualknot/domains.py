"""Positive test domains in Z+Z.

A domain ``P`` is *positive* when every point escapes it after a large enough
diagonal step down-left, and it is order-convex: if ``p <= r <= p'``
componentwise with ``p, p'`` in ``P`` then ``r`` is in ``P``.  Order-convexity
is what makes the generators with filtration in ``P`` a subquotient.

Every generator family in a surgery cone moves diagonally with one free
integer ``j`` (filtration ``(j + alpha, j + beta)``), so the only query the
cone builder needs is :meth:`TestDomain.diagonal`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable


class UnboundedDomainError(ValueError):
    """A generator family meets the domain in infinitely many points."""


KINDS = ("singleton", "halfplane_i", "halfplane_j", "max_union", "box", "line_i", "finite")


@dataclass(frozen=True)
class TestDomain:
    kind: str
    params: tuple = ()

    __test__ = False  # keep pytest from collecting this class

    # -- constructors
    @classmethod
    def singleton(cls, i: int = 0, j: int = 0) -> "TestDomain":
        return cls("singleton", (i, j))

    @classmethod
    def halfplane_i(cls, a: int = 0) -> "TestDomain":
        return cls("halfplane_i", (a,))

    @classmethod
    def halfplane_j(cls, b: int = 0) -> "TestDomain":
        return cls("halfplane_j", (b,))

    @classmethod
    def max_union(cls, a: int = 0, b: int = 0) -> "TestDomain":
        return cls("max_union", (a, b))

    @classmethod
    def box(cls, i0: int, i1: int, j0: int, j1: int) -> "TestDomain":
        return cls("box", (i0, i1, j0, j1))

    @classmethod
    def line_i(cls, a: int = 0) -> "TestDomain":
        return cls("line_i", (a,))

    @classmethod
    def finite(cls, points: Iterable[tuple[int, int]]) -> "TestDomain":
        return cls("finite", tuple(sorted(set(map(tuple, points)))))

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown domain kind {self.kind!r}")

    def __contains__(self, point) -> bool:
        i, j = point
        k, p = self.kind, self.params
        if k == "singleton":
            return (i, j) == p
        if k == "halfplane_i":
            return i >= p[0]
        if k == "halfplane_j":
            return j >= p[0]
        if k == "max_union":
            return max(i - p[0], j - p[1]) >= 0
        if k == "box":
            return p[0] <= i <= p[1] and p[2] <= j <= p[3]
        if k == "line_i":
            return i == p[0]
        return (i, j) in p

    def diagonal(self, alpha: int, beta: int) -> range | list[int]:
        """All ``j`` with ``(j + alpha, j + beta)`` in the domain."""
        k, p = self.kind, self.params
        if k == "singleton":
            j = p[0] - alpha
            return [j] if j + beta == p[1] else []
        if k == "line_i":
            return [p[0] - alpha]
        if k == "box":
            return range(max(p[0] - alpha, p[2] - beta), min(p[1] - alpha, p[3] - beta) + 1)
        if k == "finite":
            return [i - alpha for i, j in p if i - alpha == j - beta]
        raise UnboundedDomainError(f"unbounded enumeration: {self} meets a diagonal in infinitely many points")

    @property
    def bounded_diagonals(self) -> bool:
        return self.kind in ("singleton", "line_i", "box", "finite")

    def __str__(self) -> str:
        return f"{self.kind}{self.params}"


def domain_validate(P: TestDomain, window: int = 6) -> bool:
    """Check both positive-test-domain axioms.

    Finite domains are checked exactly.  Canonical infinite kinds satisfy the
    axioms by construction; they are spot-checked on ``[-window, window]^2``.
    """
    if P.kind == "finite":
        pts = set(P.params)
        for (i, j), (i2, j2) in product(pts, pts):
            if i <= i2 and j <= j2:
                for r in product(range(i, i2 + 1), range(j, j2 + 1)):
                    if r not in pts:
                        return False
        return True
    pts = [(i, j) for i, j in product(range(-window, window + 1), repeat=2) if (i, j) in P]
    for (i, j), (i2, j2) in product(pts, pts):
        if i <= i2 and j <= j2:
            if any(r not in P for r in product(range(i, i2 + 1), range(j, j2 + 1))):
                return False
    far = 4 * window + 1
    return all((i - far, j - far) not in P for i, j in pts)


def parse_domain(text: str) -> TestDomain:
    """``hat`` | ``line_i[:a]`` | ``singleton:i,j`` | ``box:i0,i1,j0,j1`` | ``halfplane_i:a`` | ..."""
    name, _, args = text.partition(":")
    vals = tuple(int(v) for v in args.split(",") if v.strip()) if args else ()
    if name in ("hat", "00"):
        return TestDomain.singleton(0, 0)
    if name == "finite":
        if len(vals) % 2:
            raise ValueError("finite domain needs an even number of coordinates")
        return TestDomain.finite(zip(vals[::2], vals[1::2]))
    ctor = getattr(TestDomain, name, None)
    if name not in KINDS or ctor is None:
        raise ValueError(f"unknown domain {text!r}")
    return ctor(*vals)
