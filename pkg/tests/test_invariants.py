import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualknot.cfk import BUILTINS, builtin, genus
from dualknot.invariants import (
    StabilizationError,
    ahat_split_check,
    hf_hat_ambient,
    hfk_hat_dual,
    hfk_window,
    predicted_window,
    s3_pattern_check,
    scan_window,
    zeta_cone_plus,
    zeta_complex,
    zeta_profile,
)
from dualknot.fcomplex import d_squared_check
from dualknot.surgery import TruncationParams
from oracle import hfk_hat_rank_top

PQ = [(1, 1), (1, 2), (2, 1), (3, 2), (5, 3)]
KNOTS = {n: builtin(n) for n in BUILTINS}


def test_unknot_three_two():
    rep = hfk_hat_dual(KNOTS["unknot"], 3, 2)
    assert {s: r for s, r in rep.ranks.items() if r} == {0: 1, 1: 1, 2: 1}
    assert rep.stable and rep.total == 3


def test_trefoil_one_two():
    rep = hfk_hat_dual(KNOTS["trefoil-rh"], 1, 2)
    assert rep.ranks[-2] == rep.ranks[2] == 1
    assert all(r == 0 for s, r in rep.ranks.items() if s < -2 or s >= 3)
    assert list(rep.ranks) == list(scan_window(1, 1, 2))


@pytest.mark.parametrize("name,p,q,window", [
    ("trefoil-rh", 1, 2, (-2, 2)),
    ("figure8", 5, 3, (-3, 7)),
    ("unknot", 1, 1, (0, 0)),
    ("t25", 3, 2, (-4, 6)),
])
def test_windows(name, p, q, window):
    K = KNOTS[name]
    assert predicted_window(genus(K), p, q) == window
    assert hfk_window(K, p, q) == window


@pytest.mark.parametrize("name", BUILTINS)
@pytest.mark.parametrize("p,q", PQ)
def test_support_bound_and_endpoints(name, p, q):
    K = KNOTS[name]
    g = genus(K)
    rep = hfk_hat_dual(K, p, q)
    lo, hi = predicted_window(g, p, q)
    assert all(r == 0 for s, r in rep.ranks.items() if s < lo or s > hi)
    top = hfk_hat_rank_top(K)
    assert rep.ranks[lo] == rep.ranks[hi] == top
    # conjugation symmetry of the dual knot: sbar <-> p - 1 - sbar
    for s in range(lo, hi + 1):
        assert rep.ranks[s] == rep.ranks[p - 1 - s]


def test_report_provenance_and_views_agree():
    K = KNOTS["figure8"]
    a = hfk_hat_dual(K, 3, 2)
    b = hfk_hat_dual(K, 3, 2, view="intro")
    assert a.ranks == b.ranks
    assert "rational" in a.provenance and "intro" in b.provenance


# ---------------------------------------------------------------- split


def test_split_unknot():
    rep = ahat_split_check(KNOTS["unknot"], 3, 2, 0)
    assert rep.ok and rep.counts == (1, 1, 1) and rep.cone_rank == 1


def test_split_trefoil_lower_endpoint():
    rep = ahat_split_check(KNOTS["trefoil-rh"], 1, 2, -2)
    assert rep.ok
    assert rep.counts[0] == 1


@pytest.mark.parametrize("name", BUILTINS)
@pytest.mark.parametrize("p,q", PQ)
def test_split_structure_everywhere(name, p, q):
    K = KNOTS[name]
    for s in scan_window(genus(K), p, q):
        rep = ahat_split_check(K, p, q, s)
        assert rep.ok, rep.problems
        assert rep.split_rank == rep.cone_rank


# ---------------------------------------------------------------- ambient


@pytest.mark.parametrize("name,p,q,total", [
    ("unknot", 1, 1, 1),
    ("unknot", 5, 1, 5),
    ("unknot", 3, 2, 3),
    ("trefoil-rh", 5, 1, 5),
    ("trefoil-rh", 1, 1, 1),
    ("trefoil-rh", 1, 2, 3),
    ("trefoil-lh", 1, 1, 3),
    ("figure8", 1, 1, 3),
    ("t25", 2, 1, 4),
    ("t25", 5, 1, 5),
])
def test_ambient_totals(name, p, q, total):
    rep = hf_hat_ambient(KNOTS[name], p, q)
    assert rep.total == total
    assert rep.stable
    assert sorted(rep.ranks) == list(range(p))


def test_ambient_raises_on_forced_instability():
    with pytest.raises(StabilizationError):
        hf_hat_ambient(KNOTS["trefoil-rh"], 1, 2, TruncationParams(0, 3))


# ---------------------------------------------------------------- zeta


@pytest.mark.parametrize("name,n", [("unknot", 1), ("unknot", 5), ("trefoil-rh", 1), ("trefoil-rh", 3), ("figure8", 3)])
def test_zeta_profile_slope_one(name, n):
    prof = zeta_profile(KNOTS[name], n, 0, 6)
    steps = [b - a for a, b in zip(prof, prof[1:])]
    assert steps[1:] == [1] * 5


def test_zeta_cone_is_a_complex():
    c = zeta_complex(KNOTS["figure8"], 3, 1, 3)
    assert d_squared_check(c).ok


def test_zeta_preconditions():
    with pytest.raises(ValueError):
        zeta_cone_plus(KNOTS["unknot"], 5, 3, 2)
    with pytest.raises(ValueError):
        zeta_cone_plus(KNOTS["unknot"], 5, 0, -1)


@given(st.sampled_from(["unknot", "trefoil-rh"]), st.integers(1, 4), st.integers(1, 5))
@settings(max_examples=15, deadline=None)
def test_zeta_monotone_in_level(name, n, N):
    s = 0
    assert zeta_cone_plus(KNOTS[name], n, s, N) == zeta_cone_plus(KNOTS[name], n, s, N - 1) + 1


# ---------------------------------------------------------------- S^3 pattern


def test_s3_pattern_unknot():
    rep = s3_pattern_check(KNOTS["unknot"], [1, 2, 3])
    assert rep.windows == {1: (0, 0), 2: (0, 0), 3: (0, 0)}
    assert rep.consistent_with_s3


def test_s3_pattern_trefoil():
    rep = s3_pattern_check(KNOTS["trefoil-rh"], [1, 2, 3])
    assert rep.windows == {q: (-q, q) for q in (1, 2, 3)}
    assert rep.verdict == "not S3"


def test_s3_pattern_figure8():
    rep = s3_pattern_check(KNOTS["figure8"], [2])
    assert rep.windows == {2: (-2, 2)} and not rep.consistent_with_s3
