"""Point generation from matrices: digits, values, and block structure."""

from fractions import Fraction

import numpy as np
import pytest

from ffseq import (
    RATIONAL,
    block_digit_arrays,
    build_matrices,
    ff_create,
    field_create,
    generate_block,
    generate_point,
    make_spec,
    place_enumerate,
)


@pytest.fixture(scope="module")
def ident2():
    field = ff_create(RATIONAL, field_create(2))
    return build_matrices(make_spec(field, s=1), 8)


@pytest.fixture(scope="module")
def pascal2():
    field = ff_create(RATIONAL, field_create(2))
    p = place_enumerate(field, 2)
    return build_matrices(make_spec(field, places=[p[1]]), 8)


def test_identity_radical_inverse(ident2):
    pt = generate_point(3, ident2, 4)
    assert pt.digits == ((1, 1, 0, 0),)
    assert pt.fractions() == (Fraction(3, 4),)
    assert pt.values() == (0.75,)
    assert pt.digit_strings() == ("1100",)


def test_index_zero_is_origin(ident2, pascal2):
    for mats in (ident2, pascal2):
        pt = generate_point(0, mats, 5)
        assert pt.digits == ((0,) * 5,)
        assert pt.fractions() == (Fraction(0),)


def test_pascal_point(pascal2):
    # n = 2 picks out column 1, whose top three entries are 1, 1, 0
    pt = generate_point(2, pascal2, 3)
    assert pt.digits == ((1, 1, 0),)
    assert pt.values() == (0.75,)


def test_block_values_identity(ident2):
    vals = [pt.values()[0] for pt in generate_block(0, 1, ident2)]
    assert vals == [0.0, 0.5]
    vals = [pt.values()[0] for pt in generate_block(0, 2, ident2)]
    assert vals == [0.0, 0.5, 0.25, 0.75]
    later = sorted(pt.values()[0] for pt in generate_block(1, 2, ident2))
    assert later == sorted(vals)


def test_block_matches_pointwise(ident2, pascal2):
    mats = [ident2[0], pascal2[0]]
    m = 3
    block = generate_block(1, m, mats)
    assert len(block) == 8
    for t, pt in enumerate(block):
        single = generate_point(8 + t, mats, m)
        assert pt == single


def test_values_are_multiples_of_q_power(ident2, pascal2):
    for mats, q in ((ident2, 2), (pascal2, 2)):
        for m in (1, 3):
            for pt in generate_block(0, m, mats):
                (f,) = pt.fractions()
                assert 0 <= f < 1
                assert (f * q**m).denominator == 1


def test_block_digit_affine_shift():
    # digits of block k differ from block 0 by a per-slot constant shift
    for q in (2, 3):
        field = ff_create(RATIONAL, field_create(q))
        p = place_enumerate(field, 2)
        mats = build_matrices(make_spec(field, places=p), 6, 12)
        for m in (1, 2, 4):
            base = block_digit_arrays(0, m, mats)
            for k in (1, 2, 5):
                shifted = block_digit_arrays(k, m, mats)
                for b, sh in zip(base, shifted):
                    delta = (sh.astype(np.int64) - b.astype(np.int64)) % q
                    assert (delta == delta[:, :1]).all()


def test_gf4_digit_round_trip():
    # base-4 digits pass through the digit/element bijection of GF(4)
    field = ff_create(RATIONAL, field_create(2, 2))
    mats = build_matrices(make_spec(field, s=1), 5)
    assert np.array_equal(mats[0].array, np.eye(5, dtype=np.uint16))
    for n in range(16):
        pt = generate_point(n, mats, 5)
        digits = pt.digits[0]
        back = 0
        for j, d in enumerate(digits):
            back += d * 4**j
        assert back == n
    block = block_digit_arrays(0, 2, mats)[0]
    assert sorted(map(tuple, block.T)) == [(a, b) for a in range(4) for b in range(4)]


def test_raw_arrays_need_ctx(ident2):
    arr = np.asarray(ident2[0].array)
    with pytest.raises(ValueError):
        generate_point(1, [arr], 2)
    ctx = field_create(2)
    pt = generate_point(3, [arr], 4, ctx=ctx)
    assert pt.digits == ((1, 1, 0, 0),)


def test_determinism(ident2):
    a = generate_block(2, 3, ident2)
    b = generate_block(2, 3, ident2)
    assert a == b


def test_errors(ident2):
    with pytest.raises(ValueError):
        generate_point(256, ident2, 4)  # 2^8 needs a 9th column
    with pytest.raises(ValueError):
        generate_point(-1, ident2, 4)
    with pytest.raises(ValueError):
        generate_point(1, ident2, 9)  # more digits than rows
    with pytest.raises(ValueError):
        generate_point(1, ident2, 0)
    with pytest.raises(ValueError):
        generate_block(-1, 2, ident2)
    with pytest.raises(ValueError):
        generate_block(64, 2, ident2)  # block end exceeds 2^8
    ragged = [np.eye(4, dtype=np.uint16), np.eye(5, dtype=np.uint16)]
    with pytest.raises(ValueError):
        generate_point(0, ragged, 2, ctx=field_create(2))
