"""Brute-force verification layer: ranks, interval counts, discrepancy."""

from fractions import Fraction

import numpy as np
import pytest

from ffseq import (
    RATIONAL,
    VerifyReport,
    block_digit_arrays,
    build_matrices,
    classical_rank_check,
    ff_create,
    field_create,
    find_volume_reading_anomaly,
    generate_block,
    geometric_net_check,
    make_spec,
    minimal_t,
    net_rank_check,
    place_enumerate,
    row_length_audit,
    seq_rank_check,
    sequence_block_check,
    star_discrepancy_exact,
    t_from_ue,
)
from ffseq.construct import GenMatrix
from ffseq.verify import _dvectors

from oracles import corner_star_discrepancy

RNG = np.random.default_rng(20240817)


def eye_mats(m, k=1):
    return [np.eye(m, dtype=np.uint16)] * k


# ---------------------------------------------------------------------------
# d-vector enumeration and rank checks


def test_dvector_enumeration():
    assert list(_dvectors((2, 3), 5)) == [(0, 3), (2, 0), (2, 3), (4, 0)]
    assert list(_dvectors((2, 3), 5, exact=True)) == [(2, 3)]
    assert list(_dvectors((1,), 2)) == [(1,), (2,)]
    assert list(_dvectors((1, 1), 0)) == []


def test_net_rank_identity_and_zero():
    ctx = field_create(2)
    good = net_rank_check(eye_mats(4), 0, (1,), ctx=ctx)
    assert good.passed and good.m == 4 and str(good) == "PASS"
    bad = net_rank_check([np.zeros((4, 4), dtype=np.uint16)], 0, (1,), ctx=ctx)
    assert not bad.passed and bad.d == (1,)
    assert str(bad) == "FAIL m=4 d=(1)"


def test_net_rank_validation():
    ctx = field_create(2)
    with pytest.raises(ValueError):
        net_rank_check(eye_mats(4), 5, (1,), ctx=ctx)
    with pytest.raises(ValueError):
        net_rank_check(eye_mats(4), 0, (1, 1), ctx=ctx)
    with pytest.raises(ValueError):
        net_rank_check(eye_mats(4), 0, (0,), ctx=ctx)
    with pytest.raises(ValueError):
        net_rank_check(eye_mats(4), 0, (1,), m=5, ctx=ctx)
    with pytest.raises(ValueError):
        net_rank_check(eye_mats(4), 0, (1,))  # raw arrays need a ctx


def test_seq_rank_duplicate_coordinates_fail():
    ctx = field_create(2)
    rep = seq_rank_check(eye_mats(6, 2), 0, (1, 1), 6, ctx=ctx)
    assert not rep.passed
    assert (rep.m, rep.d) == (2, (1, 1))
    assert str(rep) == "FAIL m=2 d=(1,1)"


def test_seq_rank_identity_passes():
    ctx = field_create(3)
    rep = seq_rank_check(eye_mats(8), 0, (1,), 8, ctx=ctx)
    assert rep.passed and rep.m == 8


def test_seq_rank_validation():
    ctx = field_create(2)
    with pytest.raises(ValueError):
        seq_rank_check(eye_mats(4), 2, (1,), 2, ctx=ctx)
    with pytest.raises(ValueError):
        seq_rank_check(eye_mats(4), 0, (1,), 5, ctx=ctx)


def test_classical_and_minimal_t():
    ctx = field_create(2)
    assert classical_rank_check(eye_mats(6), 0, 6, ctx=ctx).passed
    t, rep = minimal_t(eye_mats(6), 6, ctx=ctx)
    assert t == 0 and rep.passed and "t=0" in rep.detail
    tz, _ = minimal_t([np.zeros((5, 5), dtype=np.uint16)], 5, ctx=ctx)
    assert tz == 5  # nothing to check at t = M, so the scan stops there
    dup = np.eye(5, dtype=np.uint16)
    dup[4] = dup[3]  # last two rows coincide, so only d = (5,) can fail
    ts, _ = minimal_t([dup], 5, ctx=ctx)
    assert ts == 1


def test_t_from_ue():
    assert t_from_ue(0, (1, 1, 1)) == 0
    assert t_from_ue(1, (2, 3)) == 4
    assert t_from_ue(1, (2, 3), m=3) == 3
    assert t_from_ue(2, (1,), m=10) == 2
    with pytest.raises(ValueError):
        t_from_ue(-1, (1,))
    with pytest.raises(ValueError):
        t_from_ue(0, (1, 0))
    with pytest.raises(ValueError):
        t_from_ue(4, (1,), m=3)


def test_constructed_matrices_meet_their_parameters():
    # built matrices satisfy the sequence criterion at u = genus, and the
    # classical criterion at t = u + sum(e_i - 1)
    for q in (2, 3):
        field = ff_create(RATIONAL, field_create(q))
        p = place_enumerate(field, 3)
        for places in ([p[0]], [p[0], p[2]]):
            for mode in ("plain", "finite_row"):
                spec = make_spec(field, places=places, mode=mode)
                mats = build_matrices(spec, 8)
                assert seq_rank_check(mats, spec.u, spec.e, 8).passed
                t = t_from_ue(spec.u, spec.e)
                assert classical_rank_check(mats, t, 8).passed
                observed, _ = minimal_t(mats, 8)
                assert observed <= t


# ---------------------------------------------------------------------------
# geometric interval counting


def test_geometric_uniform_and_defective_sets():
    # digit vectors of 0, 1/4, 1/2, 1/2 in base 2: the last interval
    # check sees [1/2, 3/4) twice and [1/4, 1/2) never
    arr = np.array([[0, 0, 1, 1], [0, 1, 0, 0]])
    rep = geometric_net_check([arr], 0, 2, (1,), q=2)
    assert not rep.passed
    assert rep.d == (2,)
    assert rep.interval == "[2/4,3/4)"
    assert "count=2 expected=1" in rep.detail
    good = np.array([[0, 1, 0, 1], [0, 0, 1, 1]])
    assert geometric_net_check([good], 0, 2, (1,), q=2).passed


def test_geometric_accepts_digit_points():
    field = ff_create(RATIONAL, field_create(2))
    mats = build_matrices(make_spec(field, s=1), 6)
    pts = generate_block(0, 3, mats)
    rep = geometric_net_check(pts, 0, 3, (1,))
    assert rep.passed and rep.m == 3


def test_geometric_trivial_at_u_equals_m():
    arr = np.zeros((2, 4), dtype=np.int64)
    assert geometric_net_check([arr], 2, 2, (1,), q=2).passed


def test_geometric_validation():
    arr = np.zeros((2, 4), dtype=np.int64)
    with pytest.raises(ValueError):
        geometric_net_check([arr], 0, 2, (1,))  # q unknown
    with pytest.raises(ValueError):
        geometric_net_check([arr], 0, 2, (1,), q=2, volume_reading="both")
    with pytest.raises(ValueError):
        geometric_net_check([arr], 3, 2, (1,), q=2)
    with pytest.raises(ValueError):
        geometric_net_check([arr], 0, 3, (1,), q=2)  # needs 8 points
    with pytest.raises(ValueError):
        geometric_net_check([arr[:1]], 0, 2, (1,), q=2)  # too few digits


def test_geometric_passing_u_values_form_an_upper_set():
    # relaxing the strength parameter can only remove required intervals
    for trial in range(20):
        q = int(RNG.choice([2, 3]))
        m = int(RNG.integers(2, 5))
        s = int(RNG.integers(1, 3))
        ctx = field_create(q)
        mats = [RNG.integers(0, q, size=(m, m)).astype(np.uint16) for _ in range(s)]
        digits = block_digit_arrays(0, m, mats, ctx)
        results = [geometric_net_check(digits, u, m, (1,) * s, q=q).passed
                   for u in range(m + 1)]
        first_pass = results.index(True)
        assert all(results[first_pass:])


def test_rank_and_counting_agree_on_random_matrices():
    # algebraic and geometric net checks are independent routes to the
    # same property on the k = 0 block
    for trial in range(40):
        q = int(RNG.choice([2, 3]))
        s = int(RNG.integers(1, 3))
        m = int(RNG.integers(2, 6))
        ctx = field_create(q)
        e = tuple(int(x) for x in RNG.integers(1, 4, size=s))
        u = int(RNG.integers(0, m + 1))
        mats = [RNG.integers(0, q, size=(m, m)).astype(np.uint16) for _ in range(s)]
        alg = net_rank_check(mats, u, e, ctx=ctx)
        digits = block_digit_arrays(0, m, mats, ctx)
        geo = geometric_net_check(digits, u, m, e, q=q)
        assert alg.passed == geo.passed, (q, s, m, e, u)


def test_sequence_block_check():
    ctx = field_create(2)
    good = sequence_block_check(eye_mats(8), 0, (1,), 4, Kmax=2, ctx=ctx)
    assert good.passed
    bad = sequence_block_check(eye_mats(8, 2), 0, (1, 1), 4, Kmax=1, ctx=ctx)
    assert not bad.passed
    assert (bad.m, bad.d, bad.block) == (2, (1, 1), 0)
    assert "k=0" in str(bad)


# ---------------------------------------------------------------------------
# row lengths


def test_row_length_audit_constructed():
    field = ff_create(RATIONAL, field_create(2))
    p = place_enumerate(field, 3)
    spec = make_spec(field, places=[p[0], p[2]], mode="finite_row")
    mats = build_matrices(spec, 10, 40)
    assert row_length_audit(mats, spec.u, spec.v).passed


def test_row_length_audit_identity_is_tight():
    field = ff_create(RATIONAL, field_create(2))
    (mat,) = build_matrices(make_spec(field, s=1), 8)
    assert mat.row_lengths == tuple(range(1, 9))  # equality with the cap
    assert row_length_audit([mat], 0, 1).passed


def test_row_length_audit_failure_and_validation():
    ctx = field_create(2)
    mat = GenMatrix(ctx, 1, np.ones((2, 6), dtype=np.uint16))
    rep = row_length_audit([mat], 0, 1)
    assert not rep.passed
    assert rep.d == (1,)
    assert "matrix 1 row 1 length 6 > 1" in rep.detail
    with pytest.raises(ValueError):
        row_length_audit([np.eye(2, dtype=np.uint16)], 0, 1)


# ---------------------------------------------------------------------------
# exact star discrepancy


def test_star_discrepancy_small_sets():
    assert star_discrepancy_exact([(Fraction(0),)]) == 1
    assert star_discrepancy_exact([(Fraction(0),), (Fraction(1, 2),)]) == Fraction(1, 2)
    quarters = [(Fraction(k, 4),) for k in range(4)]
    assert star_discrepancy_exact(quarters) == Fraction(1, 4)
    # one point at 1/3: sup is approached from both sides of the point
    assert star_discrepancy_exact([(Fraction(1, 3),)]) == Fraction(2, 3)


def test_star_discrepancy_digit_points():
    field = ff_create(RATIONAL, field_create(2))
    mats = build_matrices(make_spec(field, s=1), 4)
    assert star_discrepancy_exact(generate_block(0, 2, mats)) == Fraction(1, 4)
    pts16 = generate_block(0, 4, build_matrices(make_spec(field, s=1), 16))
    assert star_discrepancy_exact(pts16) == Fraction(1, 16)


def test_star_discrepancy_matches_corner_oracle():
    for trial in range(60):
        s = int(RNG.integers(1, 3))
        N = int(RNG.integers(1, 33))
        den = int(RNG.choice([8, 16, 27, 64]))
        pts = [
            tuple(Fraction(int(RNG.integers(0, den)), den) for _ in range(s))
            for _ in range(N)
        ]
        assert star_discrepancy_exact(pts) == corner_star_discrepancy(pts)


def test_star_discrepancy_three_dimensional():
    pts = [
        tuple(Fraction(int(RNG.integers(0, 16)), 16) for _ in range(3))
        for _ in range(12)
    ]
    assert star_discrepancy_exact(pts) == corner_star_discrepancy(pts)


def test_star_discrepancy_fraction_fallback():
    # denominators of 2^20 force the arbitrary-precision corner loop
    big = 2**20
    pts = [
        (Fraction(1, big), Fraction(1, 2)),
        (Fraction(3, 4), Fraction(big - 1, big)),
        (Fraction(1, 3), Fraction(2, 3)),
    ]
    assert star_discrepancy_exact(pts) == corner_star_discrepancy(pts)


def test_star_discrepancy_validation():
    with pytest.raises(ValueError):
        star_discrepancy_exact([])
    with pytest.raises(ValueError):
        star_discrepancy_exact([(Fraction(0),) * 4])
    with pytest.raises(ValueError):
        star_discrepancy_exact([(Fraction(1),)])  # 1 is outside [0, 1)
    with pytest.raises(ValueError):
        star_discrepancy_exact([(Fraction(0), Fraction(0)), (Fraction(0),)])
    too_many = [(Fraction(k, 600), Fraction(0)) for k in range(513)]
    with pytest.raises(ValueError):
        star_discrepancy_exact(too_many)


# ---------------------------------------------------------------------------
# the two readings of the interval-volume rule


def test_volume_reading_witness():
    w = find_volume_reading_anomaly()
    assert (w.q, w.m, w.e) == (2, 4, (2, 3))
    assert w.equality_report.passed
    assert not w.required_report.passed
    # reproduce both verdicts from the stored matrices
    ctx = field_create(2)
    digits = block_digit_arrays(0, w.m, list(w.matrices), ctx)
    again_eq = geometric_net_check(digits, w.m - 3, w.m, w.e, q=2,
                                   volume_reading="exact")
    again_req = geometric_net_check(digits, w.m - 2, w.m, w.e, q=2)
    assert again_eq.passed and not again_req.passed
    assert again_req.d == w.required_report.d
    assert again_req.interval == w.required_report.interval


def test_volume_reading_witness_details():
    w = find_volume_reading_anomaly()
    rep = w.required_report
    assert rep.d == (2, 0)
    assert rep.interval == "[0/4,1/4)x[0/1,1/1)"
    assert "count=16 expected=4" in rep.detail


def test_report_formatting():
    rep = VerifyReport("x", False, m=3, d=(1, 2), interval="[0/2,1/2)",
                       block=1, detail="count=4 expected=2")
    assert str(rep) == "FAIL m=3 d=(1,2) interval=[0/2,1/2) k=1 [count=4 expected=2]"
    assert not rep
    assert bool(VerifyReport("x", True))
