import random
from fractions import Fraction

import pytest

from sra.scalar import Cyclotomic, EtaPolynomial
from sra.group import cyclic_sp2, doubled_coxeter
from sra.algebra import (
    Algebra,
    GroupMismatchError,
    IndefiniteParityError,
    from_eigenbasis,
    kappa_commutator,
    to_eigenbasis,
)


@pytest.fixture(scope="module")
def z2():
    return Algebra(cyclic_sp2(2))


@pytest.fixture(scope="module")
def z3():
    return Algebra(cyclic_sp2(3))


@pytest.fixture(scope="module")
def a2():
    return Algebra(doubled_coxeter("A", 3))


def sigma_key(alg):
    return next(k for k in alg.group.elements if k != alg.group.identity_key())


def test_weyl_relation_z2(z2):
    a1, a2 = z2.generator(0), z2.generator(1)
    sigma = z2.group_element(sigma_key(z2))
    eta = z2.eta_scalar(0)
    assert a2 * a1 == a1 * a2 - 1 - eta * sigma
    assert sigma * a1 == -(a1 * sigma)
    f = a1 * a2 + sigma.scaled(Fraction(3, 2))
    assert z2.one() * f == f
    assert f * z2.one() == f


def test_commutators_z2(z2):
    a1, a2 = z2.generator(0), z2.generator(1)
    sigma = z2.group_element(sigma_key(z2))
    eta = z2.eta_scalar(0)
    assert kappa_commutator(a1, a2, +1) == z2.one() + eta * sigma
    assert kappa_commutator(a1, a2, -1) == (a1 * a2).scaled(2) - 1 - eta * sigma
    f = a1 * a2
    assert kappa_commutator(f, f, +1).is_zero()
    with pytest.raises(IndefiniteParityError):
        kappa_commutator(a1 + sigma, a2, -1)


def test_group_mismatch(z2, z3):
    with pytest.raises(GroupMismatchError):
        _ = z2.generator(0) * z3.generator(0)


def test_parity(z2):
    a1, a2 = z2.generator(0), z2.generator(1)
    sigma = z2.group_element(sigma_key(z2))
    assert (a1 * sigma).parity() == 1
    assert (a1 * a2 + sigma).parity() == 0
    assert (a1 + sigma).parity() is None
    assert z2.zero().parity() == 0


def _random_element(alg, rng, max_degree, n_terms=2):
    n = alg.group.dim
    keys = sorted(alg.group.elements)
    out = alg.zero()
    for _ in range(n_terms):
        deg = rng.randint(0, max_degree)
        word = [rng.randrange(n) for _ in range(deg)]
        term = alg.group_element(rng.choice(keys))
        for i in word:
            term = alg.generator(i) * term
        c = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        if rng.random() < 0.3 and alg.nvars:
            term = term * alg.eta_poly(rng.randrange(alg.nvars))
        out = out + term.scaled(c)
    return out


def _random_homogeneous(alg, rng, max_degree):
    n = alg.group.dim
    keys = sorted(alg.group.elements)
    par = rng.randint(0, 1)
    out = alg.zero()
    for _ in range(2):
        deg = rng.choice([d for d in range(max_degree + 1) if d % 2 == par])
        term = alg.group_element(rng.choice(keys))
        for _ in range(deg):
            term = alg.generator(rng.randrange(n)) * term
        out = out + term.scaled(rng.randint(-2, 2))
    return out if out.parity() is not None else alg.group_element(keys[0])


@pytest.mark.parametrize("alg_name", ["z2", "z3", "a2"])
def test_associativity(alg_name, request):
    alg = request.getfixturevalue(alg_name)
    rng = random.Random(hash(alg_name) % 10**6)
    reps = 6 if alg_name == "a2" else 12
    for _ in range(reps):
        f = _random_element(alg, rng, 3)
        g = _random_element(alg, rng, 3)
        h = _random_element(alg, rng, 2)
        assert (f * g) * h == f * (g * h)


def test_parity_homomorphism(z3):
    rng = random.Random(9)
    for _ in range(15):
        f = _random_homogeneous(z3, rng, 3)
        h = _random_homogeneous(z3, rng, 3)
        fh = f * h
        if f.is_zero() or h.is_zero() or fh.is_zero():
            continue
        assert fh.parity() == (f.parity() + h.parity()) % 2


def test_degree_filtration(z2):
    rng = random.Random(21)
    for _ in range(15):
        f = _random_element(z2, rng, 3)
        h = _random_element(z2, rng, 3)
        if f.is_zero() or h.is_zero():
            continue
        assert (f * h).degree() <= f.degree() + h.degree()


def test_leading_part_is_commutative_product(z2):
    # top-degree part of a product of pure monomials is the commutative
    # product with the group twist applied to the right factor's letters
    a1, a2 = z2.generator(0), z2.generator(1)
    sigma = z2.group_element(sigma_key(z2))
    f = a2 * a2 * sigma
    h = a1 * a1
    prod = f * h
    # sigma twists a_1 -> -a_1, so leading term is (+1) a1^2 a2^2 sigma
    lead = {e: c for e, c in prod.terms[sigma_key(z2)].items() if sum(e) == 4}
    assert set(lead) == {(2, 2)}
    const = lead[(2, 2)]
    assert const == EtaPolynomial.constant(1, z2.nvars, z2.m)


def test_skew_product_at_eta_zero(z2):
    # with eta = 0 the algebra is the plain skew product: products of pure
    # Weyl elements acquire no reflection terms
    rng = random.Random(4)
    e = z2.group.identity_key()
    zero_pt = [Fraction(0)] * z2.nvars
    for _ in range(10):
        def pure_weyl():
            out = z2.one()
            for _ in range(rng.randint(1, 3)):
                out = out * z2.generator(rng.randrange(2))
            return out

        prod = (pure_weyl() + pure_weyl()) * pure_weyl()
        for gk, poly in prod.terms.items():
            if gk == e:
                continue
            for c in poly.values():
                assert c.evaluate(zero_pt).is_zero()


def test_pow(z2):
    a1 = z2.generator(0)
    assert a1 ** 0 == z2.one()
    assert a1 ** 3 == a1 * a1 * a1
    with pytest.raises(ValueError):
        a1 ** -1


def test_to_eigenbasis_identity_chart(z2):
    e = z2.group.identity_key()
    f = z2.generator(0) * z2.generator(1)
    data = to_eigenbasis(f, e)
    back = from_eigenbasis(data, e, z2)
    assert back == f


def test_to_eigenbasis_diagonal(z3):
    # g = diag(zeta_3, zeta_3^2): a_1, a_2 are already eigenvectors
    g_key = sorted(k for k in z3.group.elements if k != z3.group.identity_key())[0]
    chart = z3.chart(g_key)
    for v in chart.vectors:
        nz = [i for i, c in enumerate(v) if not c.is_zero()]
        assert len(nz) == 1
    f = z3.generator(0) * z3.generator(1) * z3.group_element(g_key)
    data = to_eigenbasis(f, g_key)
    back = from_eigenbasis(data, g_key, z3)
    assert back == f


@pytest.mark.parametrize("alg_name", ["z2", "a2"])
def test_eigenbasis_round_trip_random(alg_name, request):
    alg = request.getfixturevalue(alg_name)
    rng = random.Random(17)
    keys = sorted(alg.group.elements)
    for _ in range(5):
        g_key = rng.choice(keys)
        f = _random_element(alg, rng, 3, n_terms=1)
        # restrict to a single group term over g_key
        f = alg.from_terms({g_key: f.terms[next(iter(f.terms))]}) if f.terms else alg.zero()
        data = to_eigenbasis(f, g_key)
        assert from_eigenbasis(data, g_key, alg) == f


def test_chart_diagonalizes(a2):
    for g_key in sorted(a2.group.elements)[:4]:
        chart = a2.chart(g_key)
        gmat = a2.group.elements[g_key].matrix
        for lam, vec in zip(chart.lams, chart.vectors):
            assert gmat.matvec(vec) == tuple(x * lam for x in vec)
        # kappa blocks form Darboux pairs
        for kappa in (+1, -1):
            for (i, j) in chart.kappa_pairs[kappa]:
                assert chart.gram[i][j] == Cyclotomic.one(a2.m)
