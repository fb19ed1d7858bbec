import random
from fractions import Fraction

import pytest

from sra.scalar import Cyclotomic
from sra.linalg import (
    DecompositionIncompleteError,
    DegenerateRestrictionError,
    Matrix,
    Subspace,
    darboux_basis,
    det,
    eigen_decompose,
    form_value,
    inverse,
    kernel_basis,
    rank,
)


def rat(q, m=1):
    return Cyclotomic.from_rational(Fraction(q), m)


def mat(rows, m=1):
    return Matrix.from_rows([[rat(x, m) if not isinstance(x, Cyclotomic) else x
                              for x in row] for row in rows])


def std_omega(n_half, m=1):
    n = 2 * n_half
    rows = [[0] * n for _ in range(n)]
    for i in range(n_half):
        rows[i][n_half + i] = 1
        rows[n_half + i][i] = -1
    return mat(rows, m)


def test_kernel_examples():
    m = 4
    zero2 = Matrix.zero(2, 2, m)
    assert kernel_basis(zero2).dim == 2
    minus2 = mat([[-2, 0], [0, -2]], m)
    assert kernel_basis(minus2).dim == 0
    z = Cyclotomic.root_of_unity(4)
    g = mat([[z, rat(0, 4)], [rat(0, 4), z ** 3]], 4)
    assert kernel_basis(g - Matrix.identity(2, 4)).dim == 0


def test_kernel_vectors_annihilate():
    rng = random.Random(7)
    m = 4
    for _ in range(25):
        rows = [[rat(Fraction(rng.randint(-3, 3), rng.randint(1, 3)), m)
                 for _ in range(4)] for _ in range(3)]
        M = Matrix.from_rows(rows)
        ker = kernel_basis(M)
        assert rank(M) + ker.dim == M.cols
        for v in ker.basis:
            assert all(x.is_zero() for x in M.matvec(v))


def test_det_and_inverse():
    m = 12
    z = Cyclotomic.root_of_unity(m)
    M = mat([[z, rat(1, m)], [rat(2, m), z ** 5]], m)
    d = det(M)
    assert d == z * (z ** 5) - rat(2, m)
    Mi = inverse(M)
    assert M * Mi == Matrix.identity(2, m)
    with pytest.raises(ZeroDivisionError):
        inverse(mat([[1, 1], [1, 1]], m))
    assert det(mat([[1, 1], [1, 1]], m)).is_zero()


def test_det_bigger():
    rng = random.Random(3)
    m = 6
    for _ in range(10):
        rows = [[rat(rng.randint(-4, 4), m) * Cyclotomic.root_of_unity(m, rng.randint(0, 5))
                 for _ in range(4)] for _ in range(4)]
        M = Matrix.from_rows(rows)
        MT = M.transpose()
        assert det(M) == det(MT)


def test_subspace_rejects_dependent():
    m = 1
    with pytest.raises(ValueError):
        Subspace(2, [(rat(1), rat(2)), (rat(2), rat(4))])


def test_eigen_identity():
    m = 4
    decomp = eigen_decompose(Matrix.identity(4, m), m)
    assert len(decomp) == 1
    lam, space = decomp[0]
    assert lam == Cyclotomic.one(m) and space.dim == 4


def test_eigen_diagonal():
    m = 4
    z = Cyclotomic.root_of_unity(m)
    g = mat([[z, rat(0, m)], [rat(0, m), z ** 3]], m)
    decomp = eigen_decompose(g, m)
    assert [(lam, s.dim) for lam, s in decomp] == [(z, 1), (z ** 3, 1)]
    for lam, space in decomp:
        for v in space.basis:
            assert g.matvec(v) == tuple(x * lam for x in v)


def test_eigen_incomplete():
    m = 2
    jordan = mat([[1, 1], [0, 1]], m)
    with pytest.raises(DecompositionIncompleteError):
        eigen_decompose(jordan, m)


def test_darboux_standard_plane():
    m = 1
    omega = std_omega(1, m)
    W = Subspace(2, [(rat(1), rat(0)), (rat(0), rat(1))])
    c = darboux_basis(W, omega)
    assert len(c) == 2
    assert form_value(omega, c[0], c[1]) == rat(1)


def test_darboux_empty():
    omega = std_omega(1)
    assert darboux_basis(Subspace(2, []), omega) == []


def test_darboux_scaled_and_mixed():
    rng = random.Random(11)
    m = 4
    omega = std_omega(2, m)
    for _ in range(15):
        # random invertible change of the full 4-dim space
        while True:
            vecs = [tuple(rat(rng.randint(-2, 2), m) for _ in range(4)) for _ in range(4)]
            M = Matrix.from_rows([list(v) for v in zip(*vecs)])
            if rank(M) == 4:
                break
        c = darboux_basis(Subspace(4, vecs, check=False), omega)
        k = len(c) // 2
        for i in range(2 * k):
            for j in range(2 * k):
                val = form_value(omega, c[i], c[j])
                if i // 2 == j // 2 and i != j:
                    expect = rat(1, m) if i < j else rat(-1, m)
                    assert val == expect
                elif i != j:
                    assert val.is_zero()
                else:
                    assert val.is_zero()


def test_darboux_degenerate_raises():
    m = 1
    omega = std_omega(2, m)
    # span{e1, e2}: omega vanishes identically on it
    W = Subspace(4, [(rat(1), rat(0), rat(0), rat(0)),
                     (rat(0), rat(1), rat(0), rat(0))])
    with pytest.raises(DegenerateRestrictionError):
        darboux_basis(W, omega)
