"""Finite chain complexes over GF(2) with Spin^c labels and Z+Z filtration labels.

A complex is a basis of hashable, mutually comparable generator ids, a label
``(spinc, (gi_1, gi_2))`` per generator, and a set of arrows ``(source, target)``
each carrying coefficient 1.  Generators are ordered by id; that order fixes
the column order (and therefore the pivot order) of every elimination.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Mapping

from . import gf2

Gen = Hashable
Label = tuple[int, tuple[int, int]]


class ChainComplexError(ValueError):
    """A differential does not square to zero, or a map is not a chain map."""


@dataclass(frozen=True)
class DSquaredReport:
    ok: bool
    violations: tuple[tuple[Gen, Gen], ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _xor_add(acc: dict, key, count: int = 1) -> None:
    if count % 2:
        if key in acc:
            del acc[key]
        else:
            acc[key] = True


@dataclass(frozen=True)
class GenericComplex:
    basis: tuple
    labels: Mapping[Gen, Label]
    arrows: frozenset
    filtered: bool = False
    meta: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        basis = tuple(sorted(set(self.basis)))
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "arrows", frozenset(self.arrows))
        members = set(basis)
        out: dict[Gen, list] = defaultdict(list)
        for src, tgt in self.arrows:
            if src not in members or tgt not in members:
                raise ChainComplexError(f"arrow {src!r} -> {tgt!r} leaves the basis")
            out[src].append(tgt)
        for gen in basis:
            if gen not in self.labels:
                raise ChainComplexError(f"generator {gen!r} has no label")
        if self.filtered:
            for src, tgt in self.arrows:
                a, b = self.labels[src][1], self.labels[tgt][1]
                if b[0] > a[0] or b[1] > a[1]:
                    raise ChainComplexError(f"arrow {src!r} -> {tgt!r} raises the filtration")
        object.__setattr__(self, "_out", {g: tuple(sorted(t)) for g, t in out.items()})

    def targets(self, gen: Gen) -> tuple:
        return self._out.get(gen, ())

    def spinc(self, gen: Gen) -> int:
        return self.labels[gen][0]

    def gi(self, gen: Gen) -> tuple[int, int]:
        return self.labels[gen][1]

    def __len__(self) -> int:
        return len(self.basis)

    def classes(self) -> list[int]:
        return sorted({self.labels[g][0] for g in self.basis})


def d_squared_check(c: GenericComplex) -> DSquaredReport:
    """Check that every pair of generators is joined by an even number of two-step paths."""
    bad = []
    for src in c.basis:
        counts: dict = {}
        for mid in c.targets(src):
            for tgt in c.targets(mid):
                _xor_add(counts, tgt)
        bad.extend((src, tgt) for tgt in sorted(counts))
    return DSquaredReport(not bad, tuple(bad))


def _boundary_rows(c: GenericComplex, gens: list) -> tuple[list[int], int]:
    index = {g: n for n, g in enumerate(gens)}
    rows = []
    for g in gens:
        row = 0
        for t in c.targets(g):
            row ^= 1 << index[t]
        rows.append(row)
    return rows, len(gens)


def homology_rank(c: GenericComplex, gens: Iterable[Gen] | None = None) -> int:
    """Rank of homology of ``c`` (or of a union of its connected summands ``gens``)."""
    gens = list(c.basis) if gens is None else sorted(gens)
    rows, n = _boundary_rows(c, gens)
    return n - 2 * gf2.rank(rows, n)


def homology_ranks(c: GenericComplex, split_by: str | None = "spinc") -> dict:
    """Homology rank per Spin^c class (``split_by="spinc"``) or in total (``None``).

    Fails fast with :class:`ChainComplexError` if the differential does not
    square to zero or an arrow changes the Spin^c label.
    """
    report = d_squared_check(c)
    if not report:
        raise ChainComplexError(f"d^2 != 0, first violation {report.violations[0]!r}")
    if split_by is None:
        return {None: homology_rank(c)}
    if split_by != "spinc":
        raise ValueError(f"unknown split {split_by!r}")
    groups: dict[int, list] = defaultdict(list)
    for g in c.basis:
        groups[c.spinc(g)].append(g)
    for src, tgt in c.arrows:
        if c.spinc(src) != c.spinc(tgt):
            raise ChainComplexError(f"arrow {src!r} -> {tgt!r} changes the Spin^c class")
    return {s: homology_rank(c, groups[s]) for s in sorted(groups)}


def _apply(arrows_of: Callable[[Gen], Iterable[Gen]], vec: Mapping) -> dict:
    out: dict = {}
    for g in vec:
        for t in arrows_of(g):
            _xor_add(out, t)
    return out


def check_chain_map(a: GenericComplex, b: GenericComplex, f: Mapping[Gen, Iterable[Gen]]):
    """First generator ``x`` of ``a`` with ``f(dx) != d(fx)``, or ``None``."""
    def fmap(g):
        return f.get(g, ())

    for g in a.basis:
        lhs = _apply(fmap, dict.fromkeys(a.targets(g), True))
        rhs = _apply(b.targets, _apply(fmap, {g: True}))
        if lhs != rhs:
            return g
    return None


def map_from_arrows(arrows: Iterable[tuple[Gen, Gen]]) -> dict:
    """Collapse an arrow list (with multiplicity) into a GF(2) map ``{source: targets}``."""
    acc: dict = defaultdict(dict)
    for src, tgt in arrows:
        _xor_add(acc[src], tgt)
    return {s: tuple(sorted(t)) for s, t in acc.items() if t}


def mapping_cone(
    a: GenericComplex,
    b: GenericComplex,
    f: Mapping[Gen, Iterable[Gen]] | Iterable[tuple[Gen, Gen]],
    check: bool = True,
    meta: Mapping[str, Any] | None = None,
) -> GenericComplex:
    """Cone of ``f: a -> b`` with differential ``(x, y) -> (dx, f(x) + dy)``.

    Generator ids of ``a`` and ``b`` must be disjoint.
    """
    if not isinstance(f, Mapping):
        f = map_from_arrows(f)
    if set(a.basis) & set(b.basis):
        raise ChainComplexError("mapping cone needs disjoint generator ids")
    for src, tgts in f.items():
        if src not in a.labels:
            raise ChainComplexError(f"map source {src!r} is not a generator of the domain")
        for t in tgts:
            if t not in b.labels:
                raise ChainComplexError(f"map target {t!r} is not a generator of the codomain")
    if check:
        bad = check_chain_map(a, b, f)
        if bad is not None:
            raise ChainComplexError(f"not a chain map at {bad!r}")
    arrows = set(a.arrows) | set(b.arrows)
    arrows.update((s, t) for s, tgts in f.items() for t in tgts)
    labels = dict(a.labels)
    labels.update(b.labels)
    return GenericComplex(
        a.basis + b.basis, labels, frozenset(arrows), a.filtered and b.filtered, dict(meta or {})
    )


def induced_subquotient(c: GenericComplex, keep: Callable[[Gen], bool], check: bool = True) -> GenericComplex:
    """Complex on the kept generators with the projected differential.

    Raises :class:`ChainComplexError` if the projection fails ``d^2 = 0``,
    which happens when the keep-set is not convex along the differential.
    """
    kept = [g for g in c.basis if keep(g)]
    ks = set(kept)
    arrows = frozenset((s, t) for s, t in c.arrows if s in ks and t in ks)
    out = GenericComplex(tuple(kept), {g: c.labels[g] for g in kept}, arrows, c.filtered, dict(c.meta))
    if check:
        report = d_squared_check(out)
        if not report:
            raise ChainComplexError(
                f"keep-set is not admissible: projected d^2 != 0 at {report.violations[0]!r}"
            )
    return out


def induced_map_rank(
    a: GenericComplex, b: GenericComplex, f: Mapping[Gen, Iterable[Gen]]
) -> int:
    """Rank of the map induced by the chain map ``f`` on homology."""
    a_gens = list(a.basis)
    b_gens = list(b.basis)
    b_index = {g: n for n, g in enumerate(b_gens)}
    da_rows, na = _boundary_rows(a, a_gens)
    cycles = gf2.nullspace(da_rows, na)
    db_rows, _ = _boundary_rows(b, b_gens)
    boundaries = gf2.echelon(db_rows)
    images = []
    for z in cycles:
        acc = 0
        bits = z
        while bits:
            low = (bits & -bits).bit_length() - 1
            for t in f.get(a_gens[low], ()):
                acc ^= 1 << b_index[t]
            bits &= bits - 1
        images.append(gf2.reduce(acc, boundaries))
    return gf2.rank(images, len(b_gens))
