"""Finite GF(2) models of CFK^infinity for knots in homology spheres.

A model lists symbols ``x`` with Alexander gradings ``A(x)``, arrows
``x -> y`` labelled by a drop ``(a, b)`` and a flip involution ``iota``.
The arrow stands for the terms ``[y, i - a, k - b]`` of ``d[x, i, k]``:
``a`` is the drop of the U-power coordinate, ``b`` the drop of the
Alexander-filtration coordinate, so ``A(x) - A(y) = b - a``.

Relative Spin^c structures of the knot are identified with the integers
(the ambient manifold is a homology sphere), and ``A(x)`` is the class of
``x``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Arrow = tuple[str, str, tuple[int, int]]


class CFKSyntaxError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CFKValidationError(ValueError):
    def __init__(self, report: "ValidationReport"):
        super().__init__("invalid knot complex: " + "; ".join(report.problems))
        self.report = report


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok


def _reduce_mod2(arrows: Iterable[Arrow]) -> tuple[Arrow, ...]:
    counts = Counter((x, y, (int(a), int(b))) for x, y, (a, b) in arrows)
    return tuple(sorted(k for k, n in counts.items() if n % 2))


@dataclass(frozen=True)
class KnotComplex:
    name: str
    alexander: Mapping[str, int]
    arrows: tuple[Arrow, ...]
    flip: Mapping[str, str]
    _out: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "alexander", dict(self.alexander))
        object.__setattr__(self, "flip", dict(self.flip))
        object.__setattr__(self, "arrows", _reduce_mod2(self.arrows))
        out = defaultdict(list)
        for x, y, drop in self.arrows:
            out[x].append((y, drop))
        object.__setattr__(self, "_out", dict(out))

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(sorted(self.alexander, key=lambda s: (-self.alexander[s], s)))

    def A(self, x: str) -> int:
        return self.alexander[x]

    def iota(self, x: str) -> str:
        return self.flip[x]

    def out(self, x: str) -> list[tuple[str, tuple[int, int]]]:
        """Arrows leaving ``x`` as ``(target, (a, b))``."""
        return self._out.get(x, [])

    def graded_ranks(self) -> dict[int, int]:
        """Symbol count per Alexander grading (= rank of the hat knot homology for reduced models)."""
        return dict(sorted(Counter(self.alexander.values()).items(), reverse=True))

    def renamed(self, mapping: Mapping[str, str], name: str | None = None) -> "KnotComplex":
        return KnotComplex(
            name or self.name,
            {mapping[x]: a for x, a in self.alexander.items()},
            [(mapping[x], mapping[y], d) for x, y, d in self.arrows],
            {mapping[x]: mapping[y] for x, y in self.flip.items()},
        )

    def mirror_image(self) -> "KnotComplex":
        """Apply the flip to the whole complex: relabel by iota and swap every drop."""
        return KnotComplex(
            self.name,
            {self.flip[x]: -a for x, a in self.alexander.items()},
            [(self.flip[x], self.flip[y], (b, a)) for x, y, (a, b) in self.arrows],
            {self.flip[x]: self.flip[y] for x, y in self.flip.items()},
        )


def validate(k: KnotComplex) -> ValidationReport:
    problems = []
    syms = set(k.alexander)
    for x, y, (a, b) in k.arrows:
        if x not in syms or y not in syms:
            problems.append(f"arrow {x}->{y} uses an undeclared symbol")
            continue
        if a < 0 or b < 0:
            problems.append(f"arrow {x}->{y} has a negative drop ({a},{b})")
        if (a, b) == (0, 0):
            problems.append(f"arrow {x}->{y} has drop (0,0); the model must be reduced")
        if k.A(x) - k.A(y) != b - a:
            problems.append(
                f"grading rule violated on {x}->{y} ({a},{b}): "
                f"A({x})-A({y}) = {k.A(x) - k.A(y)} but b-a = {b - a}"
            )
    # d^2 = 0 on the lift: two-step paths with equal endpoints and total drop cancel in pairs
    paths: Counter = Counter()
    for x, y, (a, b) in k.arrows:
        for z, (c, d) in k.out(y):
            paths[(x, z, a + c, b + d)] += 1
    for (x, z, a, b), n in sorted(paths.items()):
        if n % 2:
            problems.append(f"d^2 != 0: {n} two-step paths {x}->{z} with total drop ({a},{b})")
    if set(k.flip) != syms or not set(k.flip.values()) <= syms:
        problems.append("flip not an involution on all symbols")
    else:
        for x in sorted(syms):
            if k.flip[k.flip[x]] != x:
                problems.append("flip not an involution on all symbols")
                break
        for x in sorted(syms):
            if k.A(k.flip[x]) != -k.A(x):
                problems.append(f"flip does not negate the Alexander grading at {x}")
        declared = {arr for arr in k.arrows if arr[0] in syms and arr[1] in syms}
        mirrored = {(k.flip[x], k.flip[y], (b, a)) for x, y, (a, b) in declared}
        if mirrored != declared:
            problems.append("arrows are not mirrored by the flip (x->y (a,b) needs iota x -> iota y (b,a))")
    return ValidationReport(tuple(problems))


def checked(k: KnotComplex) -> KnotComplex:
    report = validate(k)
    if not report:
        raise CFKValidationError(report)
    return k


def genus(k: KnotComplex) -> int:
    """Largest Alexander grading carrying homology of the associated graded complex.

    Models are reduced, so every symbol survives and this is ``max A``.
    """
    return max(k.alexander.values())


# ---------------------------------------------------------------- .cfk text


def parse_cfk(text: str, name: str = "cfk", check: bool = True) -> KnotComplex:
    """Parse the line-oriented ``.cfk`` format.

    ``gen <name> A=<int>``, ``arr <src> <dst> <a> <b>``, ``flip <x> <y>``;
    ``#`` starts a comment; repeated arrows cancel in pairs.
    """
    alexander: dict[str, int] = {}
    arrows: list[Arrow] = []
    flip: dict[str, str] = {}
    seen_any = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        seen_any = True
        parts = line.split()
        kw = parts[0]
        if kw == "gen":
            if len(parts) != 3 or not parts[2].startswith("A="):
                raise CFKSyntaxError(lineno, "expected 'gen <name> A=<int>'")
            try:
                a = int(parts[2][2:])
            except ValueError:
                raise CFKSyntaxError(lineno, f"bad Alexander grading {parts[2]!r}") from None
            if parts[1] in alexander:
                raise CFKSyntaxError(lineno, f"symbol {parts[1]!r} declared twice")
            alexander[parts[1]] = a
        elif kw == "arr":
            if len(parts) != 5:
                raise CFKSyntaxError(lineno, "expected 'arr <src> <dst> <a> <b>'")
            try:
                a, b = int(parts[3]), int(parts[4])
            except ValueError:
                raise CFKSyntaxError(lineno, "arrow drops must be integers") from None
            if a < 0 or b < 0:
                raise CFKSyntaxError(lineno, "arrow drops must be >= 0")
            arrows.append((parts[1], parts[2], (a, b)))
        elif kw == "flip":
            if len(parts) != 3:
                raise CFKSyntaxError(lineno, "expected 'flip <x> <y>'")
            x, y = parts[1], parts[2]
            for u, v in ((x, y), (y, x)):
                if flip.get(u, v) != v:
                    raise CFKSyntaxError(lineno, f"conflicting flip for {u!r}")
                flip[u] = v
        else:
            raise CFKSyntaxError(lineno, f"unknown keyword {kw!r}")
    if not seen_any:
        raise CFKSyntaxError(0, "empty file")
    if not alexander:
        raise CFKSyntaxError(0, "no 'gen' lines")
    k = KnotComplex(name, alexander, arrows, flip)
    return checked(k) if check else k


def serialize(k: KnotComplex) -> str:
    """Canonical ``.cfk`` text: symbols by descending grading, sorted arrows, one flip per orbit."""
    lines = [f"# {k.name}"]
    lines += [f"gen {x} A={k.A(x)}" for x in k.symbols]
    lines += [f"arr {x} {y} {a} {b}" for x, y, (a, b) in k.arrows]
    done = set()
    for x in k.symbols:
        if x in done:
            continue
        y = k.flip[x]
        done.update((x, y))
        lines.append(f"flip {x} {y}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------- constructors


def _names(n: int) -> list[str]:
    if n <= 26:
        return [chr(ord("a") + m) for m in range(n)]
    return [f"x{m}" for m in range(n)]


def staircase(delta_coeffs: Sequence[int], name: str | None = None) -> KnotComplex:
    """Staircase model of an L-space knot from its symmetrized Alexander polynomial.

    ``delta_coeffs`` lists coefficients from the top exponent down (the list is
    symmetric, so the direction does not matter).  Nonzero coefficients must be
    +1/-1, alternate in sign and start with +1.
    """
    coeffs = list(delta_coeffs)
    if not coeffs or len(coeffs) % 2 == 0 or coeffs != coeffs[::-1]:
        raise ValueError("Alexander coefficients must form a symmetric list of odd length")
    nonzero = [(len(coeffs) // 2 - m, c) for m, c in enumerate(coeffs) if c]
    if any(c not in (1, -1) for _, c in nonzero) or any(
        c != (1 if n % 2 == 0 else -1) for n, (_, c) in enumerate(nonzero)
    ):
        raise ValueError(
            "not a staircase: coefficients must be +-1, alternating, leading +1; "
            "use builtin('figure8') as a thin-knot template or write a .cfk file by hand"
        )
    names = _names(len(nonzero))
    alexander = {names[m]: e for m, (e, _) in enumerate(nonzero)}
    arrows = []
    for m in range(1, len(nonzero), 2):
        up, me, down = names[m - 1], names[m], names[m + 1]
        arrows.append((me, up, (alexander[up] - alexander[me], 0)))
        arrows.append((me, down, (0, alexander[me] - alexander[down])))
    flip = {names[m]: names[-1 - m] for m in range(len(names))}
    label = name or "staircase(" + ",".join(str(c) for c in coeffs) + ")"
    return checked(KnotComplex(label, alexander, arrows, flip))


def _figure8() -> KnotComplex:
    return KnotComplex(
        "figure8",
        {"u": 0, "a": 0, "b": 1, "c": -1, "d": 0},
        [("a", "b", (1, 0)), ("a", "c", (0, 1)), ("b", "d", (0, 1)), ("c", "d", (1, 0))],
        {"u": "u", "a": "a", "d": "d", "b": "c", "c": "b"},
    )


def _trefoil_lh() -> KnotComplex:
    # dual of the right-handed staircase: arrows reversed, gradings negated
    return KnotComplex(
        "trefoil-lh",
        {"a": 1, "b": 0, "c": -1},
        [("a", "b", (0, 1)), ("c", "b", (1, 0))],
        {"a": "c", "b": "b", "c": "a"},
    )


BUILTINS = ("unknot", "trefoil-rh", "trefoil-lh", "figure8", "t25")


def builtin(name: str) -> KnotComplex:
    if name == "unknot":
        k = KnotComplex("unknot", {"a": 0}, [], {"a": "a"})
    elif name in ("trefoil-rh", "trefoil"):
        k = staircase([1, -1, 1], name="trefoil-rh")
    elif name == "trefoil-lh":
        k = _trefoil_lh()
    elif name in ("figure8", "figure-8"):
        k = _figure8()
    elif name == "t25":
        k = staircase([1, -1, 1, -1, 1], name="t25")
    else:
        raise KeyError(f"unknown builtin knot {name!r}; choose from {', '.join(BUILTINS)}")
    return checked(k)
