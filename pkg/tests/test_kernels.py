"""Backend-equivalence and correctness tests for the table-driven kernels."""

import numpy as np
import pytest

from ffseq import field_create
from ffseq import kernels
from ffseq.polyring import Polynomial, padic_expansion

from oracles import element_rank

RNG = np.random.default_rng(20240817)

FIELDS = [field_create(2), field_create(3), field_create(2, 2), field_create(5), field_create(3, 2)]

BACKENDS = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])


def random_matrix(ctx, rows, cols):
    return RNG.integers(0, ctx.q, size=(rows, cols)).astype(np.uint16)


@pytest.mark.parametrize("ctx", FIELDS, ids=lambda c: f"GF{c.q}")
def test_rank_matches_element_oracle(ctx):
    tables = ctx.tables()
    for _ in range(25):
        rows = int(RNG.integers(1, 7))
        cols = int(RNG.integers(1, 7))
        mat = random_matrix(ctx, rows, cols)
        expect = element_rank(mat.tolist(), ctx)
        for backend in BACKENDS:
            assert kernels.rank(mat, tables, backend=backend) == expect


@pytest.mark.parametrize("ctx", FIELDS, ids=lambda c: f"GF{c.q}")
def test_matmul_matches_element_arithmetic(ctx):
    tables = ctx.tables()
    a = random_matrix(ctx, 4, 5)
    b = random_matrix(ctx, 5, 3)
    results = [kernels.matmul(a, b, tables, backend=bk) for bk in BACKENDS]
    for r in results[1:]:
        assert np.array_equal(results[0], r)
    for i in range(4):
        for j in range(3):
            acc = ctx.element(0)
            for t in range(5):
                acc = acc + ctx.element(int(a[i, t])) * ctx.element(int(b[t, j]))
            assert acc.index == int(results[0][i, j])


@pytest.mark.parametrize("ctx", FIELDS, ids=lambda c: f"GF{c.q}")
def test_poly_mul_matches_polynomial_class(ctx):
    tables = ctx.tables()
    for _ in range(10):
        fa = RNG.integers(0, ctx.q, size=int(RNG.integers(1, 8))).astype(np.uint16)
        fb = RNG.integers(0, ctx.q, size=int(RNG.integers(1, 8))).astype(np.uint16)
        pa = Polynomial(ctx, tuple(int(x) for x in fa))
        pb = Polynomial(ctx, tuple(int(x) for x in fb))
        want = (pa * pb).coeffs
        for backend in BACKENDS:
            got = kernels.poly_mul(fa, fb, tables, backend=backend)
            trimmed = tuple(int(x) for x in got)
            while trimmed and trimmed[-1] == 0:
                trimmed = trimmed[:-1]
            assert trimmed == want


@pytest.mark.parametrize("ctx", FIELDS, ids=lambda c: f"GF{c.q}")
def test_padic_expand_matches_polyring(ctx):
    tables = ctx.tables()
    from ffseq.polyring import irreducible_enumerate

    for p in irreducible_enumerate(ctx, 4):
        parr = np.array(p.coeffs, dtype=np.uint16)
        for _ in range(5):
            fa = RNG.integers(0, ctx.q, size=int(RNG.integers(1, 12))).astype(np.uint16)
            f = Polynomial(ctx, tuple(int(x) for x in fa))
            K = int(RNG.integers(1, 5))
            want = padic_expansion(f, p, K)
            for backend in BACKENDS:
                got = kernels.padic_expand(fa, parr, K, tables, backend=backend)
                assert got.shape == (K, p.degree)
                for k in range(K):
                    row = Polynomial(ctx, tuple(int(x) for x in got[k]))
                    assert row == want[k]


def test_padic_expand_reads_readonly_input():
    ctx = field_create(2)
    tables = ctx.tables()
    f = np.array([0, 0, 0, 1], dtype=np.uint16)
    f.flags.writeable = False
    p = np.array([1, 1, 1], dtype=np.uint16)
    out = kernels.padic_expand(f, p, 2, tables)
    assert out.tolist() == [[1, 0], [1, 1]]
    assert f.tolist() == [0, 0, 0, 1]


def test_rank_does_not_mutate_input():
    ctx = field_create(3)
    tables = ctx.tables()
    mat = np.array([[1, 2], [2, 1]], dtype=np.uint16)
    kernels.rank(mat, tables)
    assert mat.tolist() == [[1, 2], [2, 1]]


def test_rank_empty_dimensions():
    ctx = field_create(2)
    tables = ctx.tables()
    assert kernels.rank(np.zeros((0, 4), dtype=np.uint16), tables) == 0
    assert kernels.rank(np.zeros((3, 0), dtype=np.uint16), tables) == 0


def test_explicit_backend_validation():
    ctx = field_create(2)
    tables = ctx.tables()
    mat = np.eye(2, dtype=np.uint16)
    with pytest.raises(ValueError):
        kernels.rank(mat, tables, backend="fortran")


def test_padic_expand_rejects_nonmonic():
    ctx = field_create(3)
    tables = ctx.tables()
    with pytest.raises(ValueError):
        kernels.padic_expand(
            np.array([1, 1], dtype=np.uint16), np.array([1, 2], dtype=np.uint16), 2, tables
        )
