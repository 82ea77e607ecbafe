"""Acceptance gate: nine exact criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

from itertools import product

import pytest

from dualknot.cfk import BUILTINS, builtin, genus
from dualknot.dcone import DGen, b_differential, d_differential, psi, psi_inverse
from dualknot.domains import TestDomain
from dualknot.fcomplex import d_squared_check, homology_rank
from dualknot.invariants import (
    ahat_split_check,
    hf_hat_ambient,
    hfk_hat_dual,
    s3_pattern_check,
    scan_window,
    zeta_profile,
)
from dualknot.surgery import ConeSpec, build_cone, cone_rank, large_n_model

PQ = [(1, 1), (1, 2), (2, 1), (3, 2), (5, 3)]
RESULTS: dict[int, tuple[bool, str]] = {}


def _top_rank(K):
    g = genus(K)
    return sum(1 for a in K.alexander.values() if a == g)


def criterion_1():
    bad, n = [], 0
    for name, (p, q) in product(BUILTINS, PQ):
        K = builtin(name)
        for s in scan_window(genus(K), p, q):
            for P in (TestDomain.singleton(0, 0), TestDomain.line_i(0)):
                n += 1
                if not d_squared_check(build_cone(ConeSpec(K, p, q, s, P))).ok:
                    bad.append((name, p, q, s, str(P)))
    return not bad, f"{n} cones, {len(bad)} with d^2 != 0"


def criterion_2():
    bad = []
    for name, (p, q) in product(["trefoil-rh", "figure8"], PQ):
        K = builtin(name)
        g = genus(K)
        top = _top_rank(K)
        ranks = hfk_hat_dual(K, p, q).ranks
        if list(ranks) != list(range(-q * g - p - q, q * g + 2 * p + q + 1)):
            bad.append((name, p, q, "scan range"))
        if ranks[-q * g] != top or ranks[q * g + p - 1] != top:
            bad.append((name, p, q, "endpoint"))
        if any(r for s, r in ranks.items() if s < -q * g or s >= q * g + p):
            bad.append((name, p, q, "outside window"))
    return not bad, f"failures: {bad}" if bad else "endpoints and vanishing exact"


def criterion_3():
    bad = []
    for p, q in [(1, 1), (3, 2), (5, 3), (2, 3)]:
        ranks = hfk_hat_dual(builtin("unknot"), p, q).ranks
        support = {s: r for s, r in ranks.items() if r}
        if support != {s: 1 for s in range(p)}:
            bad.append((p, q, support))
    return not bad, f"failures: {bad}" if bad else "rank p on classes 0..p-1"


def criterion_4():
    bad = []
    for name in BUILTINS:
        K = builtin(name)
        for n in range(1, 6):
            for s in scan_window(genus(K), n, 1):
                spec = ConeSpec(K, n, 1, s)
                if cone_rank(spec, "intro") != cone_rank(spec, "remain"):
                    bad.append((name, n, s))
        for x in K.symbols:
            for i, j, k in product(range(-6, 7), repeat=3):
                g = DGen(x, i, j, k, i - j + k - 1)
                b = psi(g, K)
                if psi_inverse(b, K) != g or sorted(psi(z, K) for z in d_differential(g, K)) != sorted(b_differential(b, K)):
                    bad.append((name, "psi", g))
    return not bad, f"failures: {bad[:3]}" if bad else "views agree, psi is a chain isomorphism on the box"


def criterion_5():
    bad = []
    n = 7
    for name in ["trefoil-rh", "figure8"]:
        K = builtin(name)
        for s in scan_window(genus(K), n, 1):
            if homology_rank(large_n_model(K, n, s)) != cone_rank(ConeSpec(K, n, 1, s)):
                bad.append((name, s))
    return not bad, f"failures: {bad}" if bad else "large-n model equals cone on every class"


def criterion_6():
    cases = [("unknot", n, 1, n) for n in range(1, 6)] + [("trefoil-rh", 5, 1, 5), ("unknot", 1, 1, 1)]
    bad = []
    for name, p, q, total in cases:
        rep = hf_hat_ambient(builtin(name), p, q, strict=False)
        if rep.total != total or not rep.stable:
            bad.append((name, p, q, rep.total, rep.stable))
    return not bad, f"failures: {bad}" if bad else "totals exact, stable at B and B+3"


def criterion_7():
    bad, n = [], 0
    for name, (p, q) in product(BUILTINS, PQ):
        K = builtin(name)
        for s in scan_window(genus(K), p, q):
            n += 1
            rep = ahat_split_check(K, p, q, s)
            if not rep.ok:
                bad.append((name, p, q, s, rep.problems))
    return not bad, f"failures: {bad[:3]}" if bad else f"{n} classes checked"


def criterion_8():
    tre = s3_pattern_check(builtin("trefoil-rh"), [1, 2, 3])
    unk = s3_pattern_check(builtin("unknot"), [1, 2, 3])
    ok = (
        tre.windows == {q: (-q, q) for q in (1, 2, 3)}
        and tre.verdict == "not S3"
        and unk.windows == {q: (0, 0) for q in (1, 2, 3)}
        and unk.consistent_with_s3
    )
    return ok, f"trefoil {tre.windows} {tre.verdict!r}; unknot {unk.windows} {unk.verdict!r}"


def criterion_9():
    detail, ok = [], True
    for n in (1, 5):
        prof = zeta_profile(builtin("unknot"), n, 0, 6)
        steps = [prof[N] - prof[N - 1] for N in range(2, 7)]
        ok = ok and steps == [1] * 5
        detail.append(f"n={n} steps {steps}")
    return ok, "; ".join(detail)


CRITERIA = {
    1: ("d^2 = 0 on every constructed cone", criterion_1),
    2: ("genus window endpoints and vanishing", criterion_2),
    3: ("unknot lens-space pattern", criterion_3),
    4: ("formula cross-consistency", criterion_4),
    5: ("large-n oracle", criterion_5),
    6: ("ambient sanity", criterion_6),
    7: ("split structure", criterion_7),
    8: ("S^3 pattern shadow", criterion_8),
    9: ("zeta tower slope", criterion_9),
}


def _line(n):
    title, _ = CRITERIA[n]
    ok, detail = RESULTS[n]
    return f"criterion {n} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    RESULTS[n] = CRITERIA[n][1]()
    print(_line(n))
    assert RESULTS[n][0], _line(n)


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        RESULTS[n] = CRITERIA[n][1]()
        print(_line(n))
