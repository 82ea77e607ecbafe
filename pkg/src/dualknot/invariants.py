"""Headline computations on top of the surgery cones.

* :func:`hfk_hat_dual` -- hat knot Floer homology of the dual knot, per class.
* :func:`hfk_window` / :func:`predicted_window` -- support of the above.
* :func:`ahat_split_check` -- the hat complex split by ``delta = i - j``.
* :func:`hf_hat_ambient` -- hat Floer homology of the surgered manifold.
* :func:`zeta_cone_plus` -- truncated plus-flavour integer surgery cone.
* :func:`s3_pattern_check` -- windows of ``1/q`` surgeries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import dcone
from .cfk import KnotComplex, genus
from .domains import TestDomain
from .fcomplex import (
    GenericComplex,
    homology_rank,
    induced_map_rank,
    induced_subquotient,
    mapping_cone,
)
from .surgery import ConeSpec, TruncationParams, build_cone, cone_rank, stabilization_check


class StabilizationError(RuntimeError):
    pass


@dataclass
class HomologyReport:
    knot: str
    p: int
    q: int
    ranks: dict[int, int]
    stable: bool
    provenance: str
    bound: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.ranks.values())

    @property
    def support(self) -> list[int]:
        return [s for s, r in self.ranks.items() if r]


def scan_window(g: int, p: int, q: int) -> range:
    return range(-q * g - p - q, q * g + 2 * p + q + 1)


def predicted_window(g: int, p: int, q: int) -> tuple[int, int]:
    return (-q * g, q * g + p - 1)


def hfk_hat_dual(
    K: KnotComplex,
    p: int,
    q: int,
    classes=None,
    view: str = "rational",
    trunc: TruncationParams | None = None,
) -> HomologyReport:
    """Rank of the hat knot homology of the dual knot of ``p/q`` surgery, per relative class.

    Classes outside the scan window carry rank zero.
    """
    g = genus(K)
    classes = list(scan_window(g, p, q) if classes is None else classes)
    trunc = trunc or TruncationParams()
    P = TestDomain.singleton(0, 0)
    ranks = {}
    stable = True
    bounds = set()
    for s in classes:
        spec = ConeSpec(K, p, q, s, P, trunc)
        bounds.add(spec.bound)
        ranks[s] = cone_rank(spec, view)
        stable = stable and stabilization_check(spec)
    return HomologyReport(K.name, p, q, ranks, stable, f"cone:{view}@singleton(0,0)", max(bounds, default=None))


def hfk_window(K: KnotComplex, p: int, q: int, report: HomologyReport | None = None) -> tuple[int, int] | None:
    """Smallest and largest class with nonzero hat knot homology."""
    report = report or hfk_hat_dual(K, p, q)
    sup = report.support
    return (min(sup), max(sup)) if sup else None


@dataclass
class SplitReport:
    sbar: int
    delta_ok: bool
    counts: tuple[int, int, int]
    expected_counts: tuple[int, int, int]
    bhat_rank: int
    h_vanishes_on_a1: bool
    v_vanishes_on_a0: bool
    split_rank: int
    cone_rank: int
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def ahat_split_check(K: KnotComplex, p: int, q: int, sbar: int) -> SplitReport:
    """Check the ``delta in {0, 1}`` splitting of the hat cone and recompute its rank from the split."""
    spec = ConeSpec(K, p, q, sbar)
    cone = build_cone(spec)
    d_side = [g for g in cone.basis if g[0] == "A"]
    b_side = [g for g in cone.basis if g[0] == "B"]
    deltas = {g[1].i - g[1].j for g in d_side}
    a0 = [g for g in d_side if g[1].i - g[1].j == 0]
    a1 = [g for g in d_side if g[1].i - g[1].j == 1]
    s0 = sbar // q
    s1 = (sbar - p) // q
    expected = (
        sum(1 for x in K.symbols if K.A(x) <= s0),
        sum(1 for x in K.symbols if K.A(x) >= s1 + 1),
        len(K.symbols),
    )
    b_set = {g[1] for g in b_side}
    h_a1 = not any(dcone.h_map(g[1], K, p, q) in b_set for g in a1)
    v_a0 = not any(dcone.v_map(g[1], K, p, q) in b_set for g in a0)

    ahat = induced_subquotient(cone, lambda g: g[0] == "A")
    bhat = induced_subquotient(cone, lambda g: g[0] == "B")
    f = {}
    for src, tgt in cone.arrows:
        if src[0] == "A" and tgt[0] == "B":
            f.setdefault(src, []).append(tgt)
    rank_f = induced_map_rank(ahat, bhat, f)
    h_a, h_b = homology_rank(ahat), homology_rank(bhat)
    split = h_a + h_b - 2 * rank_f
    direct = homology_rank(cone)

    problems = []
    if not deltas <= {0, 1}:
        problems.append(f"delta values {sorted(deltas)} outside {{0, 1}}")
    counts = (len(a0), len(a1), len(b_side))
    if counts != expected:
        problems.append(f"generator counts {counts} != expected {expected}")
    if h_b != 1:
        problems.append(f"B-hat homology rank {h_b} != 1")
    if not h_a1:
        problems.append("h does not vanish on A-hat_1")
    if not v_a0:
        problems.append("v does not vanish on A-hat_0")
    if split != direct:
        problems.append(f"split route rank {split} != cone rank {direct}")
    return SplitReport(sbar, deltas <= {0, 1}, counts, expected, h_b, h_a1, v_a0, split, direct, problems)


def hf_hat_ambient(
    K: KnotComplex, p: int, q: int, trunc: TruncationParams | None = None, strict: bool = True
) -> HomologyReport:
    """Hat Floer homology of the ``p/q`` surgery, one entry per Spin^c class ``sbar mod p``.

    Computed as the cone at the test domain ``{i = 0}`` for the representatives
    ``0 <= sbar < p``.
    """
    trunc = trunc or TruncationParams()
    P = TestDomain.line_i(0)
    ranks = {}
    stable = True
    bound = None
    for s in range(p):
        spec = ConeSpec(K, p, q, s, P, trunc)
        bound = max(bound or 0, spec.bound)
        ranks[s] = cone_rank(spec)
        stable = stable and stabilization_check(spec)
    if strict and not stable:
        raise StabilizationError(f"ranks for {K.name} {p}/{q} change between B and B+{trunc.stabilization_step}")
    return HomologyReport(K.name, p, q, ranks, stable, "cone:rational@line_i(0)", bound)


def zeta_complex(K: KnotComplex, n: int, s: int, N: int, reach: int | None = None) -> GenericComplex:
    """Cone of ``h' + v'`` from the sum of ``A_t^+`` to the sum of ``CF^+`` copies, ``t = s mod n``.

    Everything is cut at level ``N`` (``max(i, k) <= N`` on the source,
    ``i <= N`` on the target), and ``t`` runs over ``[-reach, reach]`` on the
    source and ``[n - reach, reach]`` on the target.
    """
    if n < 1:
        raise ValueError("zeta cone needs n >= 1")
    g = genus(K)
    reach = reach if reach is not None else g + 2 * n + 1
    ts_a = [t for t in range(-reach, reach + 1) if (t - s) % n == 0]
    ts_b = {t for t in range(n - reach, reach + 1) if (t - s) % n == 0}
    syms = K.symbols

    a_gens = []
    for t in ts_a:
        for x in syms:
            shift = max(0, K.A(x) - t)
            for i in range(-shift, N - shift + 1):
                a_gens.append(("A", t, x, i, K.A(x) + i - t))
    a_set = set(a_gens)
    a_arrows = set()
    for gen in a_gens:
        _, t, x, i, k = gen
        for y, (a, b) in K.out(x):
            tgt = ("A", t, y, i - a, k - b)
            if tgt in a_set:
                a_arrows.add((gen, tgt))
    label = (s, (0, 0))
    A = GenericComplex(tuple(a_gens), {g_: label for g_ in a_gens}, frozenset(a_arrows))

    b_gens = [("B", t, x, i) for t in sorted(ts_b) for x in syms for i in range(N + 1)]
    b_set = set(b_gens)
    b_arrows = {
        (gen, ("B", gen[1], y, gen[3] - a))
        for gen in b_gens
        for y, (a, _b) in K.out(gen[2])
        if gen[3] - a >= 0
    }
    Bc = GenericComplex(tuple(b_gens), {g_: label for g_ in b_gens}, frozenset(b_arrows))

    f = {}
    for gen in a_gens:
        _, t, x, i, k = gen
        tg = []
        h = ("B", t, x, i)
        v = ("B", t + n, K.iota(x), k)
        if h in b_set:
            tg.append(h)
        if v in b_set:
            tg.append(v)
        if tg:
            f[gen] = tuple(tg)
    return mapping_cone(A, Bc, f, meta={"n": n, "s": s, "N": N, "reach": reach})


def zeta_cone_plus(K: KnotComplex, n: int, s: int, N: int) -> int:
    """Homology rank of the zeta-cone truncated at level ``N``."""
    if not -n / 2 <= s < n / 2:
        raise ValueError(f"class s={s} must satisfy -n/2 <= s < n/2")
    if N < 0:
        raise ValueError("truncation level must be >= 0")
    return homology_rank(zeta_complex(K, n, s, N))


def zeta_profile(K: KnotComplex, n: int, s: int, n_max: int) -> list[int]:
    return [zeta_cone_plus(K, n, s, N) for N in range(n_max + 1)]


@dataclass
class S3Report:
    knot: str
    genus: int
    windows: dict[int, tuple[int, int] | None]
    predicted: dict[int, tuple[int, int]]
    verdict: str

    @property
    def consistent_with_s3(self) -> bool:
        return self.verdict == "consistent with S3 result"


def s3_pattern_check(K: KnotComplex, q_list) -> S3Report:
    """Windows of the ``1/q`` surgeries; only a genus-zero knot gives the degenerate window every time."""
    g = genus(K)
    windows, predicted = {}, {}
    for q in q_list:
        windows[q] = hfk_window(K, 1, q)
        predicted[q] = predicted_window(g, 1, q)
    degenerate = all(w == (0, 0) for w in windows.values())
    verdict = "consistent with S3 result" if degenerate else "not S3"
    return S3Report(K.name, g, windows, predicted, verdict)
