"""Finite surgery cones per relative Spin^c class and test domain.

For a class ``sbar`` every cone generator belongs to a *block* indexed by
``delta = i - j`` and a symbol ``x``; inside a block the generators form one
diagonal family, cut out by the test domain.  The map ``h`` keeps ``delta``
and ``v`` lowers it by one.

Truncation keeps the D-side blocks ``-B <= delta <= B`` and the target blocks
``-B <= delta <= B - 1``.  The discarded part is the union of two subcomplexes

* ``delta > B`` on the D side together with ``delta >= B`` on the target
  side, where ``v`` is a filtered isomorphism, and
* ``delta < -B`` on both sides, where ``h`` is a filtered isomorphism,

so the truncated cone is a quotient of the full one by an acyclic subcomplex
once ``B`` is past both thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import dcone
from .cfk import KnotComplex, genus
from .dcone import BGen, DGen
from .domains import TestDomain
from .fcomplex import GenericComplex, homology_ranks, mapping_cone

VIEWS = ("rational", "intro", "remain")


class ConeSpecError(ValueError):
    pass


@dataclass(frozen=True)
class TruncationParams:
    bound: int | None = None
    stabilization_step: int = 3


def default_bound(K: KnotComplex, p: int, q: int, sbar: int = 0) -> int:
    g = genus(K)
    # past this point h (below) and v (above) match generators one-to-one at any domain
    needed = (abs(sbar) + q * g) // p + 2
    return max(q * g + p + q + 4, needed)


@dataclass(frozen=True)
class ConeSpec:
    K: KnotComplex
    p: int
    q: int
    sbar: int
    domain: TestDomain = field(default_factory=TestDomain.singleton)
    trunc: TruncationParams = field(default_factory=TruncationParams)

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ConeSpecError(f"surgery coefficient {self.p}/{self.q} must be positive")
        if gcd(self.p, self.q) != 1:
            raise ConeSpecError(f"p={self.p} and q={self.q} are not coprime")

    @property
    def bound(self) -> int:
        if self.trunc.bound is not None:
            return self.trunc.bound
        return default_bound(self.K, self.p, self.q, self.sbar)

    def with_bound(self, bound: int) -> "ConeSpec":
        return ConeSpec(self.K, self.p, self.q, self.sbar, self.domain,
                        TruncationParams(bound, self.trunc.stabilization_step))


# ------------------------------------------------------------ enumeration


def up_block(K, p, q, sbar, delta, x, domain) -> list[DGen]:
    """Generators ``[x, i, j, k, l] (x) zeta^t`` of D^up with ``i - j = delta`` in class ``sbar``."""
    s, t = divmod(sbar - p * delta, q)
    c = K.A(x) - s
    out = []
    for j in domain.diagonal(delta + max(0, c - 1), max(0, c)):
        k = j + c
        out.append(DGen(x, j + delta, j, k, k - 1 + delta, t))
    return out


def down_block(K, p, q, sbar, delta, x, domain) -> list[DGen]:
    """Same as :func:`up_block` but filtered by ``(i, j)`` (the D^down copy)."""
    s, t = divmod(sbar - p * delta, q)
    c = K.A(x) - s
    return [DGen(x, j + delta, j, j + c, j + c - 1 + delta, t) for j in domain.diagonal(delta, 0)]


def b_block(K, p, sbar, delta, x, domain) -> list[BGen]:
    tbar = sbar - p * delta
    return [BGen(x, j + delta, j, tbar) for j in domain.diagonal(delta, 0)]


def _complex(gens, tag, differential, label, filtered=True) -> GenericComplex:
    ids = {g: (tag, g) for g in gens}
    arrows = set()
    for g in gens:
        for t in differential(g):
            if t in ids:
                arrows.add((ids[g], ids[t]))
    labels = {ids[g]: label(g) for g in gens}
    return GenericComplex(tuple(ids.values()), labels, frozenset(arrows), filtered)


def _map(src_gens, tag_src, tag_dst, dst_set, *maps) -> dict:
    f: dict = {}
    for g in src_gens:
        acc: dict = {}
        for m in maps:
            t = m(g)
            if t in dst_set:
                key = (tag_dst, t)
                if key in acc:
                    del acc[key]
                else:
                    acc[key] = True
        if acc:
            f[(tag_src, g)] = tuple(sorted(acc))
    return f


def build_cone(spec: ConeSpec, view: str = "rational", check: bool = True) -> GenericComplex:
    """The truncated cone of class ``spec.sbar`` at ``spec.domain``.

    ``view`` selects the formula presentation: ``"rational"`` is ``h + v`` into
    the twisted complex, ``"intro"`` is ``Id + g_{p/q}`` between two copies of
    ``D_1 (x) Z[zeta]/(zeta^q - 1)``, and ``"remain"`` (``q = 1`` only) is
    ``Id + v_n``.
    """
    if view not in VIEWS:
        raise ValueError(f"unknown view {view!r}")
    K, p, q, sbar, P = spec.K, spec.p, spec.q, spec.sbar, spec.domain
    if view == "remain" and q != 1:
        raise ConeSpecError("the integer-surgery view needs q = 1")
    B = spec.bound
    syms = K.symbols
    up = [g for d in range(-B, B + 1) for x in syms for g in up_block(K, p, q, sbar, d, x, P)]

    def up_label(g):
        return (dcone.spinc_d(g, K, p, q), dcone.gi_up(g))

    src = _complex(up, "A", lambda g: dcone.d_differential(g, K), up_label)
    if view == "rational":
        tgt_gens = [g for d in range(-B, B) for x in syms for g in b_block(K, p, sbar, d, x, P)]
        tgt = _complex(tgt_gens, "B", lambda g: dcone.b_differential(g, K),
                       lambda g: (dcone.spinc_b(g, p), dcone.gi_down_b(g)))
        f = _map(up, "A", "B", set(tgt_gens),
                 lambda g: dcone.h_map(g, K, p, q), lambda g: dcone.v_map(g, K, p, q))
    else:
        tgt_gens = [g for d in range(-B, B) for x in syms for g in down_block(K, p, q, sbar, d, x, P)]
        tgt = _complex(tgt_gens, "B", lambda g: dcone.d_differential(g, K),
                       lambda g: (dcone.spinc_d(g, K, p, q), dcone.gi_down(g)))
        if view == "intro":
            other = lambda g: dcone.g_pq_intro(g, K, p, q)  # noqa: E731
        else:
            other = lambda g: dcone.v_n(g, K, p)  # noqa: E731
        f = _map(up, "A", "B", set(tgt_gens), lambda g: g, other)
    meta = {"p": p, "q": q, "sbar": sbar, "domain": str(P), "bound": B, "view": view}
    return mapping_cone(src, tgt, f, check=check, meta=meta)


def cone_rank(spec: ConeSpec, view: str = "rational") -> int:
    c = build_cone(spec, view)
    return sum(homology_ranks(c, split_by=None).values())


def large_n_threshold(K: KnotComplex) -> int:
    return 2 * genus(K) + 1


def centered_residue(sbar: int, n: int) -> int:
    """Representative ``s`` of ``sbar mod n`` with ``-n/2 <= s < n/2``."""
    h = n // 2
    return (sbar + h) % n - h


def large_n_model(K: KnotComplex, n: int, sbar: int, domain: TestDomain | None = None) -> GenericComplex:
    """Direct model of the dual knot complex for a large integer surgery ``n``.

    Generated by ``[x, i, j, k, l]`` with ``i - j + k - l = 1``, summand index
    ``A(x) + j - k = s`` (the centered residue of ``sbar``), class
    ``s + n (i - j) = sbar``, filtered by ``(max(i, l), max(j, k))``.
    """
    domain = domain or TestDomain.singleton()
    s = centered_residue(sbar, n)
    delta = (sbar - s) // n
    gens = [g for x in K.symbols for g in up_block(K, n, 1, sbar, delta, x, domain)]
    for g in gens:
        assert dcone.summand_index(g, K) == s
    c = _complex(gens, "D", lambda g: dcone.d_differential(g, K),
                 lambda g: (dcone.spinc_d(g, K, n, 1), dcone.gi_up(g)))
    object.__setattr__(c, "meta", {"n": n, "sbar": sbar, "s": s, "domain": str(domain)})
    return c


def stabilization_check(spec: ConeSpec) -> bool:
    """True iff the homology rank is the same at bound ``B`` and ``B + step``."""
    B = spec.bound
    step = spec.trunc.stabilization_step
    return cone_rank(spec.with_bound(B)) == cone_rank(spec.with_bound(B + step))
