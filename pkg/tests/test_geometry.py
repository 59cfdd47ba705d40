import numpy as np
import pytest
from numpy.testing import assert_allclose

from liemetric import (
    LieAlgebra,
    MetricLieAlgebra,
    catalog,
    change_basis,
    connection,
    connection_matrices,
    curvature,
    direct_sum,
    is_ad_invariant,
    is_einstein,
    is_ricci_flat,
    is_ricci_parallel,
    killing_form,
    metric_adjoint,
    nabla_ric,
    ricci,
    ricci_structural,
    u_map,
    verify_isometry,
)
from liemetric.errors import DimensionMismatchError
from liemetric.sampling import random_metric_lie_algebra

from conftest import make_affine


@pytest.fixture
def affine():
    return catalog("affine_plane")


@pytest.fixture
def h1():
    return catalog("heisenberg", n=1)


@pytest.fixture
def sl2k():
    return catalog("sl_killing", n=2)


@pytest.fixture
def abelian3():
    return catalog("abelian", p=0, q=3)


def random_suite(rng, count=20):
    out = []
    for _ in range(count):
        dim = int(rng.integers(2, 7))
        p = int(rng.integers(0, min(3, dim + 1)))
        out.append(random_metric_lie_algebra(rng, dim, (p, dim - p)))
    return out


def test_u_map_affine(affine):
    assert_allclose(u_map(affine, [0, 1], [0, 1]), [1.0, 0.0], atol=1e-15)


def test_u_map_vanishes_ad_invariant(sl2k, rng):
    for _ in range(5):
        x, y = rng.normal(size=(2, 3))
        assert_allclose(u_map(sl2k, x, y), np.zeros(3), atol=1e-12)


def test_u_map_vanishes_abelian(abelian3, rng):
    x, y = rng.normal(size=(2, 3))
    assert_allclose(u_map(abelian3, x, y), np.zeros(3), atol=1e-15)


def test_u_map_symmetric(rng):
    for m in random_suite(rng, 5):
        x, y = rng.normal(size=(2, m.dim))
        assert_allclose(u_map(m, x, y), u_map(m, y, x), atol=1e-10)


def test_connection_affine_values(affine):
    n = connection(affine)
    assert_allclose(n[1, 1], [1.0, 0.0], atol=1e-15)   # nabla_{e2} e2 = e1
    assert_allclose(n[1, 0], [0.0, -1.0], atol=1e-15)  # nabla_{e2} e1 = -e2
    assert_allclose(n[0, 0], [0.0, 0.0], atol=1e-15)
    assert_allclose(n[0, 1], [0.0, 0.0], atol=1e-15)


def test_connection_ad_invariant_is_half_bracket(sl2k):
    assert_allclose(connection(sl2k), 0.5 * sl2k.algebra.tensor, atol=1e-13)


def test_connection_abelian_zero(abelian3):
    assert_allclose(connection(abelian3), np.zeros((3, 3, 3)))


def test_connection_torsion_free_and_metric_compatible(rng):
    for m in random_suite(rng, 10):
        n = connection(m)
        c = m.algebra.tensor
        scale = m.residual_scale()
        torsion = n - n.transpose(1, 0, 2) - c
        assert np.max(np.abs(torsion)) < 1e-10 * scale
        # <nabla_i e_j, e_k> + <e_j, nabla_i e_k> = 0
        low = np.einsum("ijm,mk->ijk", n, m.gram)
        assert np.max(np.abs(low + low.transpose(0, 2, 1))) < 1e-10 * scale


def test_curvature_affine(affine):
    riem = curvature(affine)
    assert_allclose(riem[0, 1, 1], [-1.0, 0.0], atol=1e-15)  # R(e1,e2)e2 = -e1


def test_curvature_ad_invariant_quarter_double_bracket(sl2k, rng):
    riem = curvature(sl2k)
    c = sl2k.algebra.tensor
    expected = -0.25 * np.einsum("ijm,mkl->ijkl", c, c)
    assert_allclose(riem, expected, atol=1e-12)


def test_curvature_abelian_zero(abelian3):
    assert_allclose(curvature(abelian3), np.zeros((3, 3, 3, 3)))


def test_curvature_symmetries_and_bianchi(rng):
    for m in random_suite(rng, 10):
        riem = curvature(m)
        scale = max(1.0, np.max(np.abs(riem)))
        assert np.max(np.abs(riem + riem.transpose(1, 0, 2, 3))) < 1e-10 * scale
        low = np.einsum("ijkl,lm->ijkm", riem, m.gram)
        assert np.max(np.abs(low + low.transpose(0, 1, 3, 2))) < 1e-9 * scale
        bianchi = riem + riem.transpose(1, 2, 0, 3) + riem.transpose(2, 0, 1, 3)
        assert np.max(np.abs(bianchi)) < 1e-9 * scale


def test_ricci_heisenberg(h1):
    assert_allclose(ricci(h1).operator, np.diag([-1 / 3, -1 / 3, 1 / 3]), atol=1e-14)


def test_ricci_affine_einstein(affine):
    data = ricci(affine)
    assert_allclose(data.tensor, -affine.gram, atol=1e-15)
    c, res = is_einstein(affine)
    assert c == pytest.approx(-1.0, abs=1e-12)
    assert res < 1e-12


def test_ricci_abelian(abelian3):
    data = ricci(abelian3)
    assert_allclose(data.tensor, np.zeros((3, 3)))
    assert_allclose(data.mean_curvature, np.zeros(3))


def test_ricci_operator_contracts(rng):
    for m in random_suite(rng, 10):
        data = ricci(m)
        scale = m.residual_scale()
        assert np.max(np.abs(m.gram @ data.operator - data.tensor)) < 1e-10 * scale
        assert np.max(np.abs(metric_adjoint(data.operator, m.metric) - data.operator)) < 1e-9 * scale
        assert data.scalar == pytest.approx(np.trace(data.operator))


def test_ricci_structural_heisenberg(h1):
    assert_allclose(ricci_structural(h1), np.diag([-1 / 3, -1 / 3, 1 / 3]), atol=1e-14)


def test_ricci_structural_sl2_killing(sl2k):
    # ad-invariant metric: ric = -K/4 and the metric here is K itself
    assert_allclose(ricci_structural(sl2k), -0.25 * sl2k.gram, atol=1e-12)
    assert_allclose(ricci_structural(sl2k), -0.25 * killing_form(sl2k.algebra), atol=1e-12)


def test_ricci_structural_abelian_any_metric(rng):
    gram = np.diag([-2.0, 3.0, 1.0, 5.0])
    m = MetricLieAlgebra(LieAlgebra(4, {}), gram)
    assert_allclose(ricci_structural(m), np.zeros((4, 4)))


def test_oracle_equivalence(rng):
    # the module's central property: two independent Ricci routes agree
    for m in random_suite(rng, 30):
        res = np.max(np.abs(ricci(m).tensor - ricci_structural(m)))
        assert res < 1e-9 * m.residual_scale()


def test_nabla_ric_einstein_zero(affine):
    assert_allclose(nabla_ric(affine), np.zeros((2, 2, 2)), atol=1e-14)


def test_nabla_ric_ad_invariant_zero(sl2k):
    assert_allclose(nabla_ric(sl2k), np.zeros((3, 3, 3)), atol=1e-12)


def test_nabla_ric_product_with_flat_line():
    g = direct_sum(make_affine(), LieAlgebra(1, {}))
    m = MetricLieAlgebra(g, np.eye(3))
    assert_allclose(ricci(m).tensor, np.diag([-1.0, -1.0, 0.0]), atol=1e-14)
    assert_allclose(nabla_ric(m), np.zeros((3, 3, 3)), atol=1e-14)


def test_nabla_ric_symmetric_last_two(rng):
    for m in random_suite(rng, 5):
        arr = nabla_ric(m)
        assert_allclose(arr, arr.transpose(0, 2, 1), atol=1e-10 * m.residual_scale())


def test_is_ricci_parallel_cases(sl2k, h1, affine):
    assert is_ricci_parallel(sl2k).ok
    check = is_ricci_parallel(h1)
    assert not check.ok and check.commutator_residual > 1e-3
    assert is_ricci_parallel(affine).ok


def test_is_einstein_cases(h1, abelian3):
    c, _ = is_einstein(h1)
    assert c is None
    c, _ = is_einstein(abelian3)
    assert c == pytest.approx(0.0)
    flat, _ = is_ricci_flat(abelian3)
    assert flat


def test_is_ad_invariant_cases(sl2k, h1, abelian3):
    assert is_ad_invariant(sl2k)[0]
    ok, res = is_ad_invariant(h1)
    assert not ok and res > 0.1
    assert is_ad_invariant(abelian3)[0]


def test_ad_invariant_specializations(sl2k):
    # ad-invariance forces nabla = ad/2 and ric = -K/4
    assert np.max(np.abs(connection(sl2k) - 0.5 * sl2k.algebra.tensor)) < 1e-12
    assert np.max(np.abs(ricci(sl2k).tensor + 0.25 * killing_form(sl2k.algebra))) < 1e-12


def test_einstein_implies_parallel(rng):
    for m in random_suite(rng, 20):
        c, _ = is_einstein(m)
        if c is not None:
            assert is_ricci_parallel(m).ok


def test_verify_isometry_identity(affine):
    assert verify_isometry(np.eye(2), affine, affine).ok


def test_verify_isometry_permutation_of_abelian(abelian3):
    perm = np.eye(3)[[2, 0, 1]]
    assert verify_isometry(perm, abelian3, abelian3).ok


def test_verify_isometry_scaling_fails(affine):
    check = verify_isometry(2.0 * np.eye(2), affine, affine)
    assert not check.ok
    assert check.metric_residual == pytest.approx(3.0)  # |G - 4G| on the diagonal


def test_verify_isometry_dim_mismatch(affine, abelian3):
    with pytest.raises(DimensionMismatchError):
        verify_isometry(np.eye(3), affine, abelian3)


def test_verify_isometry_after_change_basis(rng):
    for m in random_suite(rng, 5):
        p = np.eye(m.dim) + 0.3 * rng.normal(size=(m.dim, m.dim))
        while abs(np.linalg.det(p)) < 1e-2:
            p = np.eye(m.dim) + 0.3 * rng.normal(size=(m.dim, m.dim))
        m2 = change_basis(m, p)
        assert verify_isometry(p, m2, m).ok


def test_connection_matrices_act(affine, rng):
    nm = connection_matrices(affine)
    w = rng.normal(size=2)
    assert_allclose(nm[1] @ w, w[0] * connection(affine)[1, 0] + w[1] * connection(affine)[1, 1])
