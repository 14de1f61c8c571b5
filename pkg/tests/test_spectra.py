import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from alphaspread.enumeration import enumerate_connected, is_isomorphic
from alphaspread.graph import complete, from_adjacency, is_connected, kite, make_graph, path, star
from alphaspread.spectra import (
    ConvergenceError,
    ObjectiveParams,
    a_alpha_matrix,
    eig_sym,
    eigen_residual,
    lambda_extremes,
    objective,
    quadratic_form,
    quadratic_form_alt,
    spectrum,
    spread,
)

from oracles import exact_spectrum, random_graph_matrix
from test_graph import graphs

alphas = st.floats(0.0, 1.0)
K2 = complete(2)


def circulant(n, offsets):
    return make_graph(n, {tuple(sorted((i, (i + k) % n))) for i in range(n) for k in offsets})


# -- matrix assembly -----------------------------------------------------------


@pytest.mark.parametrize("alpha", [0.0, 0.3, 0.5, 1.0])
def test_a_alpha_k2(alpha):
    np.testing.assert_array_equal(a_alpha_matrix(K2, alpha), [[alpha, 1 - alpha], [1 - alpha, alpha]])


@given(graphs())
def test_a0_is_adjacency_and_2a_half_is_q(G):
    A = G.adjacency()
    np.testing.assert_array_equal(a_alpha_matrix(G, 0.0), A)
    np.testing.assert_array_equal(2 * a_alpha_matrix(G, 0.5), np.diag(A.sum(1)) + A)
    np.testing.assert_array_equal(a_alpha_matrix(G, 1.0), np.diag(A.sum(1)))


@pytest.mark.parametrize("alpha", [-0.1, 1.1, math.nan])
def test_a_alpha_rejects(alpha):
    with pytest.raises(ValueError):
        a_alpha_matrix(K2, alpha)


# -- solver ----------------------------------------------------------------------


@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.9])
def test_eig_k2(alpha):
    np.testing.assert_allclose(spectrum(K2, alpha).eigenvalues, [2 * alpha - 1, 1], atol=1e-14)


def test_eig_star_and_complete():
    r3 = math.sqrt(3)
    np.testing.assert_allclose(spectrum(star(4), 0).eigenvalues, [-r3, 0, 0, r3], atol=1e-12)
    for n in (2, 5, 9):
        np.testing.assert_allclose(spectrum(complete(n), 0).eigenvalues, [-1] * (n - 1) + [n - 1], atol=1e-12)


def test_path3_half_exact():
    # Q(P3) = [[1,1,0],[1,2,1],[0,1,1]]; char poly x(x-1)(x-3)
    q = exact_spectrum(path(3).adjacency(int) + np.diag(path(3).degrees))
    assert q == pytest.approx([0, 1, 3], abs=1e-15)
    np.testing.assert_allclose(spectrum(path(3), 0.5).eigenvalues, np.array(q) / 2, atol=1e-14)
    lmax, lmin, _, _ = lambda_extremes(path(3), 0.5)
    assert lmin == pytest.approx(0, abs=1e-14) and lmax == pytest.approx(1.5, abs=1e-14)


@given(st.integers(1, 30), st.integers(0, 2**32 - 1))
def test_eig_against_lapack(n, seed):
    r = np.random.default_rng(seed)
    M = r.normal(size=(n, n))
    M = M + M.T
    res = eig_sym(M)
    np.testing.assert_allclose(res.eigenvalues, np.linalg.eigvalsh(M), atol=1e-10 * (1 + np.abs(M).sum()))
    assert res.orthonormality_defect() <= 1e-12
    assert res.max_residual <= 1e-8
    assert np.all(np.diff(res.eigenvalues) >= 0)


@given(graphs(max_n=12), alphas)
def test_sign_convention(G, alpha):
    V = spectrum(G, alpha).eigenvectors
    for k in range(V.shape[1]):
        col = V[:, k]
        i = int(np.argmax(np.abs(col)))
        assert col[i] >= 0
        assert np.all(np.abs(col[:i]) < np.abs(col[i]))


def test_eig_errors():
    with pytest.raises(ValueError):
        eig_sym(np.array([[0.0, 1.0], [2.0, 0.0]]))
    with pytest.raises(ValueError):
        eig_sym(np.zeros((2, 3)))
    with pytest.raises(ConvergenceError):
        eig_sym(np.array([[0.0, 1.0], [1.0, 0.0]]), max_sweeps=0)
    with pytest.raises(ConvergenceError):
        eig_sym(np.array([[1.0, 2.0], [2.0, 1.0]]), residual_tol=0.0)


def test_lambda_extremes_complete_minus_one():
    for n in (4, 7, 12):
        for alpha in (0.0, 0.4, 0.8):
            lmax, _, x, _ = lambda_extremes(complete(n - 1), alpha)
            assert lmax == pytest.approx(n - 2, abs=1e-12)
            np.testing.assert_allclose(x, np.full(n - 1, 1 / math.sqrt(n - 1)), atol=1e-12)


@given(graphs(min_n=2, max_n=12).filter(is_connected), st.floats(0.0, 0.99))
def test_perron_vector_nonnegative(G, alpha):
    lmax, lmin, x, z = lambda_extremes(G, alpha)
    assert np.all(x >= 0)
    assert np.linalg.norm(x) == pytest.approx(1) and np.linalg.norm(z) == pytest.approx(1)
    assert lmin <= lmax


# -- quadratic forms ---------------------------------------------------------------


def test_quadratic_form_examples():
    h = 1 / math.sqrt(2)
    assert quadratic_form(K2, 0.3, [h, h]) == pytest.approx(1.0, abs=1e-15)
    assert quadratic_form(kite(6), 0.3, np.zeros(6)) == 0
    assert quadratic_form_alt(kite(6), 0.3, np.zeros(6)) == 0
    a, b = 0.3, -1.7
    assert quadratic_form_alt(K2, 0.5, [a, b]) == pytest.approx(0.5 * (a + b) ** 2)
    # hand evaluation of both sums on star(4), x = 1/2: 3*(2/4) and 0.4*6/4 + 0.3*3
    x = np.full(4, 0.5)
    assert quadratic_form(star(4), 0.7, x) == pytest.approx(1.5, abs=1e-15)
    assert quadratic_form_alt(star(4), 0.7, x) == pytest.approx(1.5, abs=1e-15)


def test_quadratic_form_in_rayleigh_range(rng):
    G = kite(5)
    lmax, lmin, _, _ = lambda_extremes(G, 0.6)
    for _ in range(50):
        x = rng.normal(size=5)
        x /= np.linalg.norm(x)
        assert lmin - 1e-12 <= quadratic_form(G, 0.6, x) <= lmax + 1e-12


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        quadratic_form(K2, 0.5, [1, 2, 3])
    with pytest.raises(ValueError):
        quadratic_form_alt(K2, 0.5, [1])
    with pytest.raises(ValueError):
        eigen_residual(K2, 0.5, 1.0, [1])


@given(graphs(max_n=20), alphas, st.data())
def test_quadratic_forms_agree(G, alpha, data):
    x = np.array(data.draw(st.lists(st.floats(-10, 10), min_size=G.n, max_size=G.n)))
    q2, q3 = quadratic_form(G, alpha, x), quadratic_form_alt(G, alpha, x)
    qm = float(x @ a_alpha_matrix(G, alpha) @ x)
    assert abs(q2 - q3) <= 1e-9 * (1 + abs(q2))
    assert abs(q2 - qm) <= 1e-9 * (1 + abs(qm))


@given(graphs(max_n=14), alphas, st.data())
def test_rayleigh_sandwich(G, alpha, data):
    x = np.array(data.draw(st.lists(st.floats(-1, 1), min_size=G.n, max_size=G.n)))
    if np.linalg.norm(x) < 1e-3:
        return
    x /= np.linalg.norm(x)
    res = spectrum(G, alpha)
    assert res.lambda_min - 1e-9 <= quadratic_form(G, alpha, x) <= res.lambda_max + 1e-9


def test_rayleigh_attained_at_eigenvectors():
    G = kite(8)
    lmax, lmin, x, z = lambda_extremes(G, 0.35)
    assert quadratic_form(G, 0.35, x) == pytest.approx(lmax, abs=1e-12)
    assert quadratic_form(G, 0.35, z) == pytest.approx(lmin, abs=1e-12)


# -- residuals -------------------------------------------------------------------


def test_eigen_residual():
    h = 1 / math.sqrt(2)
    assert eigen_residual(K2, 0.4, 1.0, [h, h]) <= 1e-15
    assert eigen_residual(K2, 0.4, -0.2, [h, -h]) <= 1e-15
    G = kite(9)
    lmax, _, x, _ = lambda_extremes(G, 0.3)
    r0 = eigen_residual(G, 0.3, lmax, x)
    assert r0 <= 1e-8
    y = x.copy()
    y[0] += 0.1
    y /= np.linalg.norm(y)
    assert eigen_residual(G, 0.3, lmax, y) > r0


# -- spread and objective ------------------------------------------------------------


def test_spread_examples():
    for n in (2, 4, 9):
        assert spread(complete(n), 0.0) == pytest.approx(n, abs=1e-12)
    for a in (0.0, 0.3, 0.7):
        assert spread(K2, a) == pytest.approx(2 * (1 - a), abs=1e-14)


def test_kite5_half_spread_ties_exactly():
    # Q-spread of kite(5), K5 - e and K2 v 3K1 is sqrt(33) for all three (exact char polys)
    gs = list(enumerate_connected(5))
    exact = [exact_spectrum(G.adjacency(int) + np.diag(G.degrees)) for G in gs]
    qspread = [ev[-1] - ev[0] for ev in exact]
    top = max(qspread)
    assert top == pytest.approx(math.sqrt(33), abs=1e-12)
    tied = [G for G, s in zip(gs, qspread) if abs(s - top) < 1e-12]
    assert len(tied) == 3
    assert sum(is_isomorphic(G, kite(5)) for G in tied) == 1
    assert spread(kite(5), 0.5) == pytest.approx(math.sqrt(33) / 2, abs=1e-12)


@given(graphs(max_n=12), alphas)
def test_spread_nonnegative(G, alpha):
    s = spread(G, alpha)
    if G.num_edges == 0:
        assert s == pytest.approx(0, abs=1e-14)
    elif alpha < 1:
        assert s > 1e-9


def test_objective_examples():
    for G in (kite(7), path(5), star(6)):
        for a in (0.5, 0.7):
            assert objective(G, ObjectiveParams(a, 1.0, a)) == pytest.approx(spread(G, a), abs=1e-12)
        A = G.adjacency()
        lam1 = np.linalg.eigvalsh(A)[-1]
        qn = np.linalg.eigvalsh(np.diag(A.sum(1)) + A)[0]
        assert objective(G, ObjectiveParams(0.0, 2.0, 0.5)) == pytest.approx(lam1 - qn, abs=1e-10)
    for n in (5, 10, 20):
        for p in (ObjectiveParams(0.0, 2.0, 0.5), ObjectiveParams(0.3, 1.2, 0.8), ObjectiveParams(0.9, 1.0, 0.5)):
            assert objective(kite(n), p) > n - 2 - p.beta * p.gamma


@pytest.mark.parametrize(
    "a, b, g",
    [(1.0, 1.0, 0.5), (-0.1, 1.0, 0.5), (0.5, 1.0, 0.4), (0.5, 1.0, 1.0), (0.5, 0.0, 0.5), (0.5, 2.5, 0.5)],
)
def test_objective_params_validation(a, b, g):
    with pytest.raises(ValueError):
        ObjectiveParams(a, b, g)


# -- spectral invariants ---------------------------------------------------------


@pytest.mark.parametrize("G", [complete(6), circulant(8, [1]), circulant(9, [1, 2]), circulant(10, [1, 4])])
@pytest.mark.parametrize("alpha", [0.0, 0.35, 0.5, 0.9])
def test_regular_shift(G, alpha):
    d = G.degrees[0]
    assert set(G.degrees) == {d}
    shifted = alpha * d + (1 - alpha) * spectrum(G, 0.0).eigenvalues
    np.testing.assert_allclose(spectrum(G, alpha).eigenvalues, shifted, atol=1e-12)


@given(graphs(max_n=16), alphas)
def test_trace(G, alpha):
    assert spectrum(G, alpha).eigenvalues.sum() == pytest.approx(2 * alpha * G.num_edges, abs=1e-9)


@given(graphs(max_n=16))
def test_q_consistency(G):
    lmax, lmin, _, _ = lambda_extremes(G, 0.5)
    e = G.edges()
    Q = np.zeros((G.n, G.n))
    for u, v in e:
        Q[u, u] += 1
        Q[v, v] += 1
        Q[u, v] += 1
        Q[v, u] += 1
    q = np.linalg.eigvalsh(Q)
    assert 2 * lmax == pytest.approx(q[-1], abs=1e-9)
    assert 2 * lmin == pytest.approx(q[0], abs=1e-9)


def test_random_graph_residuals(rng):
    for _ in range(20):
        G = from_adjacency(random_graph_matrix(int(rng.integers(2, 20)), rng))
        assert spectrum(G, 0.4).max_residual <= 1e-8
