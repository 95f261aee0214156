import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbkz.errors import ChainRelationViolated, ParamsNotDistinct, PreconditionFailed, ZeroModulus
from hilbkz.linalg import Matrix, minimal_polynomial
from hilbkz.qschur import (
    ChainModule,
    PresentationModel,
    QSchurModule,
    QSchurParams,
    block_decomposition,
    build_qschur,
    chain_to_module,
    component_minpoly_check,
    expected_dim,
    gcd_hom,
    generated_subalgebra_dim,
    graded_submodules,
    hom_dimension_by_kernel,
    is_simple,
    l2_coordinates,
    l2_equal_parameter_product,
    l2_from_coordinates,
    params_from_cbar,
    presentation_failures,
    random_chain,
    s_polynomial,
    spectrum_shift,
    standard_module,
    verify_presentation,
)
from hilbkz.scalars import Poly, RationalFunction

F = Fraction
q = RationalFunction.q()
ONE = RationalFunction.const(1)


def P(*cs):
    return Poly([F(c) for c in cs])


def rational_params(l, base=2):
    return QSchurParams(l, tuple(F(base) ** k for k in range(l)))


def test_gcd_hom_examples():
    t = P(0, 1)
    assert gcd_hom(t, t * t)[1] == 1
    assert gcd_hom(t, P(-1, 1))[1] == 0
    g1 = t * t * P(-1, 1)
    g2 = t * P(-1, 1) * P(-1, 1)
    assert gcd_hom(g1, g2)[1] == 2
    with pytest.raises(ZeroModulus):
        gcd_hom(Poly(), t)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=1, max_size=4), st.lists(st.integers(-2, 2), min_size=1, max_size=4))
def test_gcd_hom_matches_kernel(r1, r2):
    g1, g2 = Poly.from_roots([F(x) for x in r1]), Poly.from_roots([F(x) for x in r2])
    gen, dim = gcd_hom(g1, g2)
    assert dim == hom_dimension_by_kernel(g1, g2)
    # the generator is killed by g1 modulo g2
    assert ((g1 * gen) % g2).is_zero()


@pytest.mark.parametrize("l", range(1, 7))
def test_dimensions(l):
    A = build_qschur(rational_params(l))
    assert A.dim == expected_dim(l) == l * (l + 1) * (2 * l + 1) // 6
    assert PresentationModel(A.params).dim == A.dim
    assert A.dim == sum(min(i, j) for i in range(1, l + 1) for j in range(1, l + 1))


def test_small_dimensions():
    assert build_qschur(QSchurParams(1, (F(3),))).dim == 1
    assert build_qschur(QSchurParams(2, (F(1), F(2)))).dim == 5
    assert build_qschur(QSchurParams(3, (F(1), F(2), F(5)))).dim == 14


@pytest.mark.parametrize(
    "params",
    [
        QSchurParams(1, (F(3),)),
        QSchurParams(2, (F(1), F(2))),
        QSchurParams(2, (F(3), F(3))),
        QSchurParams.formal([0, 2]),
        QSchurParams.formal([0, 1, 3]),
        QSchurParams(3, (F(1), F(1), F(2))),
        QSchurParams(4, (F(1), F(-1), F(1, 2), F(3))),
    ],
)
def test_presentation_holds(params):
    A = build_qschur(params)
    assert presentation_failures(A) == []
    assert verify_presentation(A)
    assert A.check_associativity()
    assert generated_subalgebra_dim(A) == A.dim


def test_presentation_detects_wrong_generator():
    A = build_qschur(rational_params(2))
    broken = A.iota
    A.iota = lambda i: A.scale(broken(i), F(2))
    fails = presentation_failures(A)
    assert any(f.startswith("(5)") for f in fails) and any(f.startswith("(6)") for f in fails)


def test_unit_and_faithful_rep():
    A = build_qschur(QSchurParams.formal([0, 1, 2]))
    one = A.one()
    for b in A.basis:
        x = A.element(b)
        assert A.equal(A.mul(one, x), x) and A.equal(A.mul(x, one), x)
    mats = {b: A.rep_matrix(A.element(b)) for b in A.basis}
    for b in A.basis:
        for c in A.basis:
            assert mats[b] @ mats[c] == A.rep_matrix(A.mul(A.element(b), A.element(c)))


def test_l2_equal_parameter_table():
    A = build_qschur(QSchurParams(2, (F(3), F(3))))
    rng = random.Random(2)
    for _ in range(30):
        x = tuple(F(rng.randint(-4, 4)) for _ in range(5))
        y = tuple(F(rng.randint(-4, 4)) for _ in range(5))
        X, Y = l2_from_coordinates(A, *x), l2_from_coordinates(A, *y)
        assert l2_coordinates(A, X) == x
        assert l2_coordinates(A, A.mul(X, Y)) == l2_equal_parameter_product(x, y)


def test_l2_ideal_and_quotient():
    A = build_qschur(QSchurParams.formal([1, 1]))
    ideal = [l2_from_coordinates(A, 0, 0, 1, 0, 0), l2_from_coordinates(A, 0, 0, 0, 0, 1)]
    basis = [A.element(b) for b in A.basis]
    for u in ideal:
        for y in basis:
            for prod in (A.mul(u, y), A.mul(y, u)):
                a1, a2, a3, b1, b2 = l2_coordinates(A, prod)
                assert a1 == a2 == b1 == 0
    # quotient coordinates (a1, a2, b1) multiply as upper-triangular 2x2 matrices
    rng = random.Random(4)
    for _ in range(20):
        x = [rng.randint(-3, 3) for _ in range(5)]
        y = [rng.randint(-3, 3) for _ in range(5)]
        a1, a2, _, b1, _ = l2_coordinates(A, A.mul(l2_from_coordinates(A, *x), l2_from_coordinates(A, *y)))
        M = Matrix([[x[0], x[1]], [0, x[3]]]) @ Matrix([[y[0], y[1]], [0, y[3]]])
        assert (a1, a2, b1) == (M[0, 0], M[0, 1], M[1, 1])


def test_l2_distinct_parameters_differ_from_equal_table():
    A = build_qschur(QSchurParams(2, (F(1), F(2))))
    x = (F(0), F(1), F(0), F(0), F(0))
    y = (F(0), F(0), F(1), F(0), F(0))
    # pi * iota = (T - q_2) rho_1 = q_1 - q_2 on R_1, nonzero here
    prod = l2_coordinates(A, A.mul(l2_from_coordinates(A, *x), l2_from_coordinates(A, *y)))
    assert prod[0] == F(-1)
    assert l2_equal_parameter_product(x, y)[0] == 0


def test_spectrum_shift_examples():
    Z = Matrix.zero(2, 2, F(0))
    t = P(0, 1)
    out = spectrum_shift(Z, Z, F(5), t - P(5))
    assert out == (t - P(5)) * (t - P(5))
    A1, B1 = Matrix([[ONE]]), Matrix([[ONE]])
    Pq = Poly((-(ONE + q), ONE))
    out = spectrum_shift(A1, B1, q, Pq)
    assert out == Poly((-q, ONE)) * Pq
    with pytest.raises(PreconditionFailed):
        spectrum_shift(A1, B1, q, Poly((-q, ONE)))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 10**6))
def test_spectrum_shift_random(m, n, seed):
    from hilbkz.linalg import poly_of_matrix

    rng = random.Random(seed)
    A = Matrix([[q * rng.randint(-2, 2) + rng.randint(-2, 2) for _ in range(n)] for _ in range(m)], n)
    B = Matrix([[q * rng.randint(-2, 2) + rng.randint(-2, 2) for _ in range(m)] for _ in range(n)], m)
    qa = q ** rng.randint(0, 2)
    Ti = A @ B + Matrix.identity(m, ONE).scale(qa)
    Pm = minimal_polynomial(Ti)
    out = spectrum_shift(A, B, qa, Pm)
    assert out.degree == Pm.degree + 1
    assert poly_of_matrix(out, B @ A + Matrix.identity(n, ONE).scale(qa)).is_zero()


@pytest.mark.parametrize("l", range(1, 5))
def test_standard_modules(l):
    A = build_qschur(QSchurParams.formal(list(range(l))))
    for j in range(1, l + 1):
        W = standard_module(A, j)
        assert W.dim == l - j + 1
        assert W.is_module()
        assert is_simple(W)
        assert graded_submodules(W) == [(), tuple(k for k in range(j, l + 1))]


def test_standard_module_not_simple_for_equal_params():
    A = build_qschur(QSchurParams(2, (F(3), F(3))))
    W = standard_module(A, 1)
    assert W.is_module() and W.dim == 2
    assert not is_simple(W)
    assert (2,) in graded_submodules(W)


@pytest.mark.parametrize("l", range(1, 6))
def test_block_decomposition(l):
    A = build_qschur(rational_params(l, 3))
    assert block_decomposition(A) == list(range(1, l + 1))


def test_block_decomposition_needs_distinct():
    with pytest.raises(ParamsNotDistinct):
        block_decomposition(build_qschur(QSchurParams(2, (F(1), F(1)))))


def test_chain_examples():
    p = QSchurParams.formal([0, 1])
    zero = ChainModule(p, (0, 0), [Matrix.zero(0, 0)], [Matrix.zero(0, 0)])
    assert chain_to_module(zero).dim == 0
    # the chain relation on V_1 reads -beta_1 alpha_1 = q_2 - q_1
    qa1, qa2 = p.q(1), p.q(2)
    c = ChainModule(p, (1, 1), [Matrix([[ONE]])], [Matrix([[qa1 - qa2]])])
    m = chain_to_module(c)
    assert m.block(m.t_matrix(), 1) == Matrix([[qa1]])
    bad = ChainModule(p, (1, 1), [Matrix([[ONE]])], [Matrix([[qa2 - qa1]])])
    with pytest.raises(ChainRelationViolated) as exc:
        chain_to_module(bad)
    assert exc.value.index == 1


def test_params_from_cbar_and_s():
    cbar = [F(2), F(3), F(1, 6)]
    p = params_from_cbar(cbar)
    assert p.qa == (1, 2, 6)
    assert s_polynomial(cbar, 1) == P(-1, 1)
    assert s_polynomial(cbar, 3) == Poly.from_roots([F(6), F(3), F(1)], F(1))


def _random_cbar(rng, l):
    Q = [F(rng.choice([2, 3, -1, 5, -2])) * F(1, rng.choice([1, 2, 3])) for _ in range(l - 1)]
    prod = F(1)
    for x in Q:
        prod *= x
    return Q + [1 / prod]


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_random_chains(l, seed):
    rng = random.Random(seed)
    cbar = _random_cbar(rng, l)
    c = random_chain(params_from_cbar(cbar), rng)
    assert c.relation_failure() is None
    m = chain_to_module(c)
    assert all(component_minpoly_check(m, i, cbar) for i in range(1, l + 1))


def test_random_chain_formal_q():
    rng = random.Random(3)
    cbar = [q, q ** 2, q ** -3]
    c = random_chain(params_from_cbar(cbar), rng, max_dim=2)
    m = chain_to_module(c)
    assert all(component_minpoly_check(m, i, cbar) for i in range(1, 4))


def test_component_one_is_scalar():
    rng = random.Random(8)
    cbar = _random_cbar(rng, 3)
    c = random_chain(params_from_cbar(cbar), rng)
    m = chain_to_module(c)
    T1 = m.block(m.t_matrix(), 1)
    assert T1 == Matrix.identity(T1.rows).scale(c.params.q(1))


def test_corrupted_action_fails_check():
    cbar = [F(2), F(1, 2)]
    p = params_from_cbar(cbar)
    c = ChainModule(p, (1, 1), [Matrix([[1]])], [Matrix([[p.q(1) - p.q(2)]])])
    m = chain_to_module(c)
    assert component_minpoly_check(m, 2, cbar)
    act = dict(m.act)
    act[2, 2, 1] = act[2, 2, 1].scale(F(7))
    bad = QSchurModule(m.algebra, m.component_dims, act)
    assert not bad.is_module()
    assert not component_minpoly_check(bad, 2, cbar)
