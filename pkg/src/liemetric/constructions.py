"""Builders for metrics with prescribed Ricci behaviour.

Covers double extensions (with their Delta/Gamma invariants and the five
parallelism conditions), complexification of a base metric, the split
central-extension and cotangent families, the commuting-derivations
two-step family, and a small catalog of named algebras.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadParamsError,
    CocycleError,
    CyclicityError,
    InvalidSpecError,
    NonCommutingError,
    NotEinsteinError,
    UnknownNameError,
    ZeroMuError,
)
from .geometry import MetricLieAlgebra, ParallelCheck, connection_matrices, is_einstein, is_ricci_parallel, ricci
from .lie import LieAlgebra, trace_functional
from .linalg import (
    DEFAULT_TOL,
    SymmetricForm,
    Tolerance,
    as_matrix,
    as_vector,
    metric_adjoint,
    operator_residual,
)

__all__ = [
    "DoubleExtensionSpec",
    "ExtensionInvariants",
    "ParallelConditionReport",
    "double_extension",
    "extension_invariants",
    "check_parallel_conditions",
    "complexify",
    "type_I_metric",
    "central_extension_metric",
    "bordemann_cotangent",
    "two_step_parallel",
    "catalog",
    "CATALOG_NAMES",
]


@dataclass
class DoubleExtensionSpec:
    """Data (base, D, K, L) for adjoining a hyperbolic plane to a metric algebra.

    Constraints (checked by :meth:`validate`):
      * K skew-adjoint for the base metric,
      * D a derivation of the base bracket,
      * <L, [e, e']_0>_0 = <(K D + D* K) e, e'>_0 on basis pairs.
    """

    base: MetricLieAlgebra
    D: np.ndarray
    K: np.ndarray
    L: np.ndarray

    def __post_init__(self):
        n = self.base.dim
        self.D = as_matrix(self.D, dim=n, name="D")
        self.K = as_matrix(self.K, dim=n, name="K")
        self.L = as_vector(self.L, n, name="L")

    def validate(self, tol: Tolerance = DEFAULT_TOL) -> dict:
        """Residuals of the defining constraints.

        Besides K-skewness, the derivation property and the L
        compatibility, Jacobi on base triples needs the pairing
        <K e, e'>_0 to be a 2-cocycle of the base bracket; the condition
        is vacuous for abelian bases but binding otherwise.
        """
        g0 = self.base.gram
        c0 = self.base.algebra.tensor
        d, k = self.D, self.K

        skew = operator_residual(metric_adjoint(k, self.base.metric) + k)

        t_apply = np.einsum("abm,cm->abc", c0, d)          # D [e_a, e_b]
        t_left = np.einsum("ibm,ia->abm", c0, d)           # [D e_a, e_b]
        t_right = np.einsum("ajm,jb->abm", c0, d)          # [e_a, D e_b]
        derivation = operator_residual(t_apply - t_left - t_right)

        dstar = metric_adjoint(d, self.base.metric)
        lhs = np.einsum("abm,m->ab", c0, g0 @ self.L)
        comp = k @ d + dstar @ k
        rhs = comp.T @ g0
        compatibility = operator_residual(lhs - rhs)

        pair = np.einsum("ma,bcm->abc", g0 @ k, c0)        # <K e_a, [e_b, e_c]_0>_0
        cocycle = operator_residual(pair + pair.transpose(1, 2, 0) + pair.transpose(2, 0, 1))

        return {"skew": skew, "derivation": derivation,
                "compatibility": compatibility, "cocycle": cocycle}

    def scale(self) -> float:
        return max(
            1.0,
            operator_residual(self.D),
            operator_residual(self.K),
            operator_residual(self.L),
            self.base.residual_scale(),
        )


def double_extension(spec: DoubleExtensionSpec, tol: Tolerance = DEFAULT_TOL) -> MetricLieAlgebra:
    """Build the (n+2)-dimensional metric algebra on basis (u, v, e_1..e_n).

    Brackets: [u, e] = D e + <L, e>_0 v, [e, e'] = [e, e']_0 + <K e, e'>_0 v,
    v central.  Metric: hyperbolic pairing <u, v> = 1 on top of the base
    metric, so the signature gains (1, 1).
    """
    residuals = spec.validate(tol)
    thr = tol.threshold(spec.scale() ** 2)
    for name, res in residuals.items():
        if res > thr:
            raise InvalidSpecError(
                f"double-extension data violates the {name} condition (residual {res:.3e})",
                condition=name, residual=res,
            )

    base = spec.base
    n = base.dim
    dim = n + 2
    g0, c0 = base.gram, base.algebra.tensor
    gl = g0 @ spec.L

    structure = {}
    for a in range(n):
        vec = np.zeros(dim)
        vec[2:] = spec.D[:, a]
        vec[1] = gl[a]
        if np.any(vec != 0.0):
            structure[(0, 2 + a)] = vec
    kpair = spec.K.T @ g0  # kpair[a, b] = <K e_a, e_b>_0
    for a in range(n):
        for b in range(a + 1, n):
            vec = np.zeros(dim)
            vec[2:] = c0[a, b]
            vec[1] = kpair[a, b]
            if np.any(vec != 0.0):
                structure[(2 + a, 2 + b)] = vec

    gram = np.zeros((dim, dim))
    gram[0, 1] = gram[1, 0] = 1.0
    gram[2:, 2:] = g0

    algebra = LieAlgebra(dim, structure).validate(tol)
    return MetricLieAlgebra(algebra, SymmetricForm(gram, tol), tol)


@dataclass(frozen=True)
class ExtensionInvariants:
    """The vector Delta and scalar Gamma controlling Ric(u) = Delta + Gamma v."""

    delta: np.ndarray
    gamma: float
    mean_curvature: np.ndarray  # Z_0 of the base


def extension_invariants(spec: DoubleExtensionSpec) -> ExtensionInvariants:
    base = spec.base
    n = base.dim
    g0 = base.gram
    d, k, lvec = spec.D, spec.K, spec.L
    dstar = metric_adjoint(d, base.metric)
    ads = base.algebra.ad_basis
    adstars = np.stack([metric_adjoint(ads[j], base.metric) for j in range(n)]) if n else np.zeros((0, 0, 0))
    z0 = base.metric.solve(trace_functional(base.algebra))

    rhs = np.zeros(n)
    pair_dk = g0 @ ((d - k) @ z0)  # entries <(D - K) Z_0, e_i>_0
    dd = d + dstar
    for i in range(n):
        s0_i = adstars[:, :, i].T  # columns: (ad_0 e_j)* (e_i)
        rhs[i] = (
            -0.5 * float(np.trace(dd @ ads[i]))
            + 0.5 * pair_dk[i]
            - 0.25 * float(np.trace(k @ s0_i))
        )
    delta = base.metric.solve(rhs) if n else np.zeros(0)

    gamma = (
        -0.5 * float(np.trace(d @ d))
        - 0.5 * float(np.trace(dstar @ d))
        - 0.25 * float(np.trace(k @ k))
        + float(lvec @ g0 @ z0)
    )
    return ExtensionInvariants(delta=delta, gamma=gamma, mean_curvature=z0)


@dataclass(frozen=True)
class ParallelConditionReport:
    """Residuals of the five closed-form conditions plus the base parallel check."""

    conditions: dict
    base_parallel: ParallelCheck
    ok: bool


def check_parallel_conditions(spec: DoubleExtensionSpec, tol: Tolerance = DEFAULT_TOL) -> ParallelConditionReport:
    """Evaluate the five conditions equivalent to the extension being Ricci-parallel.

    The verdict must agree with a direct parallelism check on the built
    algebra; the test suite enforces that equivalence, it is never assumed.
    """
    base = spec.base
    g0 = base.gram
    d, k, lvec = spec.D, spec.K, spec.L
    dstar = metric_adjoint(d, base.metric)
    ric0 = ricci(base).operator
    nm0 = connection_matrices(base)
    inv = extension_invariants(spec)
    delta = inv.delta

    a_op = d - dstar - k
    b_plus = d + dstar + k
    b_minus = d + dstar - k

    conditions = {
        "C1": abs(float(lvec @ g0 @ delta)),
        "C2": operator_residual(ric0 @ lvec + 0.5 * a_op @ delta),
        "C3": operator_residual(ric0 @ a_op - a_op @ ric0),
        "C4": operator_residual(b_minus @ delta),
        "C5": operator_residual(np.einsum("iab,b->ia", nm0, delta) + 0.5 * (ric0 @ b_plus).T),
    }
    base_parallel = is_ricci_parallel(base, tol)
    thr = tol.threshold(spec.scale() ** 2 * base.residual_scale())
    ok = base_parallel.ok and all(res <= thr for res in conditions.values())
    return ParallelConditionReport(conditions=conditions, base_parallel=base_parallel, ok=ok)


def complexify(base: MetricLieAlgebra):
    """Double the algebra to g + ig with split metric G0 (+) (-G0).

    Returns the doubled metric algebra and the block complex structure J
    sending x + iy to -y + ix.  Doubling preserves Ricci-parallelism and
    doubles an Einstein constant.
    """
    n = base.dim
    dim = 2 * n
    c0 = base.algebra.tensor
    structure = {}
    for a in range(n):
        for b in range(a + 1, n):
            if np.any(c0[a, b] != 0.0):
                real = np.zeros(dim)
                real[:n] = c0[a, b]
                structure[(a, b)] = real
                neg = np.zeros(dim)
                neg[:n] = -c0[a, b]  # [i e_a, i e_b] = -[e_a, e_b]
                structure[(n + a, n + b)] = neg
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            if np.any(c0[a, b] != 0.0):
                vec = np.zeros(dim)
                vec[n:] = c0[a, b]  # [e_a, i e_b] = i [e_a, e_b]
                structure[(a, n + b)] = vec

    gram = np.zeros((dim, dim))
    gram[:n, :n] = base.gram
    gram[n:, n:] = -base.gram

    j = np.zeros((dim, dim))
    j[:n, n:] = -np.eye(n)
    j[n:, :n] = np.eye(n)

    algebra = LieAlgebra(dim, structure).validate(base.tol)
    return MetricLieAlgebra(algebra, SymmetricForm(gram, base.tol), base.tol), j


def type_I_metric(base: MetricLieAlgebra, lam: float, mu: float,
                  tol: Tolerance | None = None) -> MetricLieAlgebra:
    """Mixed metric on the doubled algebra whose Ricci operator is lam*Id + mu*J.

    Requires an Einstein base with nonzero constant and mu != 0.
    """
    tol = tol or base.tol
    c, res = is_einstein(base, tol)
    if c is None:
        raise NotEinsteinError(f"base is not Einstein (residual {res:.3e})")
    if abs(c) <= tol.threshold(1.0):
        raise NotEinsteinError("base Einstein constant must be nonzero")
    if abs(mu) <= tol.abs:
        raise ZeroMuError("mu must be nonzero for a complex-pair minimal polynomial")

    doubled, j = complexify(base)
    gp = doubled.gram
    gram = (2.0 * c / (lam ** 2 + mu ** 2)) * (lam * gp - mu * (gp @ j))
    gram = 0.5 * (gram + gram.T)
    return MetricLieAlgebra(doubled.algebra, SymmetricForm(gram, tol), tol)


def _check_antisymmetric(theta: np.ndarray, tol: Tolerance, what: str):
    res = operator_residual(theta + theta.transpose(1, 0, 2))
    if res > tol.threshold(max(1.0, operator_residual(theta))):
        raise CocycleError(f"{what} must be antisymmetric in its two arguments (residual {res:.3e})")


def central_extension_metric(d_algebra: LieAlgebra, theta=None,
                             tol: Tolerance = DEFAULT_TOL) -> MetricLieAlgebra:
    """Central extension g = D + D* with the split pairing metric.

    theta[a, b, :] holds the dual-space coordinates of theta(e_a, e_b) and
    must be a cocycle for the trivial action.  The output metric has
    signature (n, n), is always Ricci-parallel, and its Ricci tensor is
    -1/2 times the Killing form.
    """
    n = d_algebra.dim
    if not d_algebra.is_validated:
        d_algebra.validate(tol)
    theta = np.zeros((n, n, n)) if theta is None else np.asarray(theta, dtype=float)
    if theta.shape != (n, n, n):
        raise BadParamsError(f"theta must have shape ({n}, {n}, {n}), got {theta.shape}")
    _check_antisymmetric(theta, tol, "theta")

    c = d_algebra.tensor
    cyc = np.einsum("abm,mcf->abcf", c, theta)
    cyc = cyc + cyc.transpose(1, 2, 0, 3) + cyc.transpose(2, 0, 1, 3)
    res = operator_residual(cyc)
    scale = max(1.0, operator_residual(theta) * max(1.0, d_algebra.max_structure_constant))
    if res > tol.threshold(scale):
        raise CocycleError(f"theta fails the cocycle condition (residual {res:.3e})")

    dim = 2 * n
    structure = {}
    for a in range(n):
        for b in range(a + 1, n):
            vec = np.zeros(dim)
            vec[:n] = c[a, b]
            vec[n:] = theta[a, b]
            if np.any(vec != 0.0):
                structure[(a, b)] = vec

    gram = np.zeros((dim, dim))
    gram[:n, n:] = np.eye(n)
    gram[n:, :n] = np.eye(n)

    algebra = LieAlgebra(dim, structure).validate(tol)
    return MetricLieAlgebra(algebra, SymmetricForm(gram, tol), tol)


def bordemann_cotangent(d_algebra: LieAlgebra, theta=None,
                        tol: Tolerance = DEFAULT_TOL) -> MetricLieAlgebra:
    """Cotangent extension D + D* with the coadjoint action and split metric.

    theta must additionally satisfy the cyclic symmetry
    theta(x, y)(z) + theta(x, z)(y) = 0; the resulting metric is
    ad-invariant, hence Ricci-parallel with connection half the bracket.
    """
    n = d_algebra.dim
    if not d_algebra.is_validated:
        d_algebra.validate(tol)
    theta = np.zeros((n, n, n)) if theta is None else np.asarray(theta, dtype=float)
    if theta.shape != (n, n, n):
        raise BadParamsError(f"theta must have shape ({n}, {n}, {n}), got {theta.shape}")
    _check_antisymmetric(theta, tol, "theta")

    theta_scale = max(1.0, operator_residual(theta))
    cyc_res = operator_residual(theta + theta.transpose(0, 2, 1))
    if cyc_res > tol.threshold(theta_scale):
        raise CyclicityError(f"theta(x,y)(z) + theta(x,z)(y) != 0 (residual {cyc_res:.3e})")

    c = d_algebra.tensor
    coad = -c  # coad[a] acts on dual coordinates: (x_a . f)_c = -sum_m C[a,c,m] f_m
    # cocycle condition for the coadjoint action
    t1 = np.einsum("apf,bcf->abcp", coad, theta)       # x_a . theta(y_b, z_c)
    t2 = np.einsum("abm,mcf->abcf", c, theta)          # theta([x_a, x_b], z_c)
    dres = (
        t1
        - t1.transpose(1, 0, 2, 3)
        + np.einsum("cpf,abf->abcp", coad, theta)
        - t2
        + t2.transpose(0, 2, 1, 3)
        - t2.transpose(1, 2, 0, 3)
    )
    res = operator_residual(dres)
    scale = max(1.0, theta_scale * max(1.0, d_algebra.max_structure_constant))
    if res > tol.threshold(scale):
        raise CocycleError(f"theta fails the coadjoint cocycle condition (residual {res:.3e})")

    dim = 2 * n
    structure = {}
    for a in range(n):
        for b in range(a + 1, n):
            vec = np.zeros(dim)
            vec[:n] = c[a, b]
            vec[n:] = theta[a, b]
            if np.any(vec != 0.0):
                structure[(a, b)] = vec
    for a in range(n):
        for b in range(n):
            vec = np.zeros(dim)
            vec[n:] = -c[a, :, b]  # (x_a . f^b)_c = -C[a, c, b]
            if np.any(vec != 0.0):
                structure[(a, n + b)] = vec

    gram = np.zeros((dim, dim))
    gram[:n, n:] = np.eye(n)
    gram[n:, :n] = np.eye(n)

    algebra = LieAlgebra(dim, structure).validate(tol)
    return MetricLieAlgebra(algebra, SymmetricForm(gram, tol), tol)


def two_step_parallel(g0_dim: int, g0_signature, derivations, alpha=None, theta=None,
                      tol: Tolerance = DEFAULT_TOL) -> MetricLieAlgebra:
    """Commuting-derivations extension D + g0 + D* with the pairing metric.

    Basis order is (derivation directions, base directions, dual
    directions); the metric pairs D with D* hyperbolically and restricts
    to the diagonal form of the requested signature on the base.  The
    output is Ricci-parallel for every admissible input.
    """
    nd = len(derivations)
    p, q = int(g0_signature[0]), int(g0_signature[1])
    if p + q != g0_dim:
        raise BadParamsError(f"signature ({p}, {q}) does not sum to g0_dim {g0_dim}")
    ders = [as_matrix(dmat, dim=g0_dim, name="derivation") for dmat in derivations]

    scale = max([1.0] + [operator_residual(dmat) for dmat in ders])
    for i in range(nd):
        for j in range(i + 1, nd):
            res = operator_residual(ders[i] @ ders[j] - ders[j] @ ders[i])
            if res > tol.threshold(scale ** 2):
                raise NonCommutingError(f"derivations {i} and {j} do not commute (residual {res:.3e})")

    alpha = np.zeros((nd, nd, g0_dim)) if alpha is None else np.asarray(alpha, dtype=float)
    if alpha.shape != (nd, nd, g0_dim):
        raise BadParamsError(f"alpha must have shape ({nd}, {nd}, {g0_dim})")
    _check_antisymmetric(alpha, tol, "alpha")
    if nd:
        cyc = np.einsum("ape,bce->abcp", np.stack(ders), alpha)
        cyc = cyc + cyc.transpose(1, 2, 0, 3) + cyc.transpose(2, 0, 1, 3)
        if operator_residual(cyc) > tol.threshold(scale * max(1.0, operator_residual(alpha))):
            raise CocycleError("alpha fails its cyclic derivation condition")

    nm = nd + g0_dim
    theta = np.zeros((nm, nm, nd)) if theta is None else np.asarray(theta, dtype=float)
    if theta.shape != (nm, nm, nd):
        raise BadParamsError(f"theta must have shape ({nm}, {nm}, {nd})")
    _check_antisymmetric(theta, tol, "theta")

    # bracket [.,.]' on D + g0 (lands in g0)
    brp = np.zeros((nm, nm, g0_dim))
    for a in range(nd):
        for b in range(nd):
            brp[a, b] = alpha[a, b]
        for e in range(g0_dim):
            brp[a, nd + e] = ders[a][:, e]
            brp[nd + e, a] = -ders[a][:, e]
    cocycle = np.einsum("abe,ecf->abcf", brp, theta[nd:, :, :])
    cocycle = cocycle + cocycle.transpose(1, 2, 0, 3) + cocycle.transpose(2, 0, 1, 3)
    if operator_residual(cocycle) > tol.threshold(max(1.0, scale, operator_residual(theta)) ** 2):
        raise CocycleError("theta fails the cocycle condition for the built bracket")

    dim = nd + g0_dim + nd
    structure = {}
    for a in range(nm):
        for b in range(a + 1, nm):
            vec = np.zeros(dim)
            vec[nd:nd + g0_dim] = brp[a, b]
            vec[nd + g0_dim:] = theta[a, b]
            if np.any(vec != 0.0):
                structure[(a, b)] = vec

    gram = np.zeros((dim, dim))
    gram[:nd, nd + g0_dim:] = np.eye(nd)
    gram[nd + g0_dim:, :nd] = np.eye(nd)
    g0 = np.diag([-1.0] * p + [1.0] * q)
    gram[nd:nd + g0_dim, nd:nd + g0_dim] = g0

    algebra = LieAlgebra(dim, structure).validate(tol)
    return MetricLieAlgebra(algebra, SymmetricForm(gram, tol), tol)


# ---------------------------------------------------------------------------
# named catalog
# ---------------------------------------------------------------------------

CATALOG_NAMES = (
    "heisenberg",
    "einstein_solvable",
    "sl_killing",
    "sl_complex_typeI",
    "affine_plane",
    "abelian",
    "double_ext_demo",
)


def _require_int(params, key, minimum):
    if key not in params:
        raise BadParamsError(f"missing parameter {key!r}")
    val = params[key]
    if not isinstance(val, (int, np.integer)) or isinstance(val, bool) or val < minimum:
        raise BadParamsError(f"parameter {key!r} must be an integer >= {minimum}, got {val!r}")
    return int(val)


def _heisenberg_algebra(n: int) -> LieAlgebra:
    dim = 2 * n + 1
    coeff = math.sqrt(2.0 / (n + 2))
    structure = {}
    for i in range(n):
        vec = np.zeros(dim)
        vec[dim - 1] = coeff
        structure[(2 * i, 2 * i + 1)] = vec
    names = [f"E{i + 1}" for i in range(2 * n)] + ["Z"]
    return LieAlgebra(dim, structure, basis_names=names)


def _catalog_heisenberg(tol, **params):
    n = _require_int(params, "n", 1)
    algebra = _heisenberg_algebra(n).validate(tol)
    return MetricLieAlgebra(algebra, SymmetricForm(np.eye(2 * n + 1), tol), tol)


def _catalog_einstein_solvable(tol, **params):
    n = _require_int(params, "n", 1)
    dim = 2 * n + 2  # basis (A, E_1..E_2n, Z)
    sigma = (n + 1.0) / (n + 2.0)
    coeff = math.sqrt(2.0 / (n + 2))
    structure = {}
    for i in range(1, 2 * n + 1):
        vec = np.zeros(dim)
        vec[i] = sigma
        structure[(0, i)] = vec
    vec = np.zeros(dim)
    vec[dim - 1] = 2.0 * sigma
    structure[(0, dim - 1)] = vec
    for i in range(n):
        vec = np.zeros(dim)
        vec[dim - 1] = coeff
        structure[(2 * i + 1, 2 * i + 2)] = vec
    gram = np.eye(dim)
    gram[0, 0] = 2.0 * (n + 1.0) ** 2 / (n + 2.0)
    names = ["A"] + [f"E{i + 1}" for i in range(2 * n)] + ["Z"]
    algebra = LieAlgebra(dim, structure, basis_names=names).validate(tol)
    return MetricLieAlgebra(algebra, SymmetricForm(gram, tol), tol)


def _sl_matrix_basis(n: int):
    mats = []
    names = []
    for i in range(n):
        for j in range(n):
            if i != j:
                m = np.zeros((n, n))
                m[i, j] = 1.0
                mats.append(m)
                names.append(f"E{i + 1}{j + 1}")
    for k in range(n - 1):
        m = np.zeros((n, n))
        m[k, k] = 1.0
        m[k + 1, k + 1] = -1.0
        mats.append(m)
        names.append(f"H{k + 1}")
    return mats, names


def _sl_coords(x: np.ndarray, n: int) -> np.ndarray:
    """Coordinates of a traceless matrix in the _sl_matrix_basis order."""
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append(x[i, j])
    partial = 0.0
    for k in range(n - 1):
        partial += x[k, k]
        out.append(partial)
    return np.array(out)


def _sl_algebra(n: int):
    mats, names = _sl_matrix_basis(n)
    dim = len(mats)
    structure = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            comm = mats[a] @ mats[b] - mats[b] @ mats[a]
            coords = _sl_coords(comm, n)
            if np.any(coords != 0.0):
                structure[(a, b)] = coords
    gram = np.zeros((dim, dim))
    for a in range(dim):
        for b in range(dim):
            gram[a, b] = 2.0 * n * float(np.trace(mats[a] @ mats[b]))
    return LieAlgebra(dim, structure, basis_names=names), gram


def _catalog_sl_killing(tol, **params):
    n = _require_int(params, "n", 2)
    algebra, gram = _sl_algebra(n)
    return MetricLieAlgebra(algebra.validate(tol), SymmetricForm(gram, tol), tol)


def _catalog_sl_complex(tol, **params):
    n = _require_int(params, "n", 2)
    if "lam" not in params or "mu" not in params:
        raise BadParamsError("sl_complex_typeI requires parameters n, lam, mu")
    lam = float(params["lam"])
    mu = float(params["mu"])
    base = _catalog_sl_killing(tol, n=n)
    return type_I_metric(base, lam, mu, tol)


def _catalog_affine_plane(tol, **params):
    if params:
        raise BadParamsError("affine_plane takes no parameters")
    structure = {(0, 1): [0.0, 1.0]}
    algebra = LieAlgebra(2, structure, basis_names=["e1", "e2"]).validate(tol)
    return MetricLieAlgebra(algebra, SymmetricForm(np.eye(2), tol), tol)


def _catalog_abelian(tol, **params):
    p = _require_int(params, "p", 0)
    q = _require_int(params, "q", 0)
    if p + q < 1:
        raise BadParamsError("abelian needs p + q >= 1")
    gram = np.diag([-1.0] * p + [1.0] * q)
    algebra = LieAlgebra(p + q, {}).validate(tol)
    return MetricLieAlgebra(algebra, SymmetricForm(gram, tol), tol)


def _catalog_double_ext_demo(tol, **params):
    kind = params.pop("kind", "nilpotent")
    dim = params.pop("dim", 2)
    if params:
        raise BadParamsError(f"unknown double_ext_demo parameters: {sorted(params)}")
    dim = int(dim)
    if dim < 2:
        raise BadParamsError("double_ext_demo needs dim >= 2")
    base = _catalog_abelian(tol, p=0, q=dim)
    if kind == "solvable":
        spec = DoubleExtensionSpec(base, np.eye(dim), np.zeros((dim, dim)), np.zeros(dim))
    elif kind == "nilpotent":
        k = np.zeros((dim, dim))
        for i in range(0, dim - 1, 2):
            k[i, i + 1] = 1.0
            k[i + 1, i] = -1.0
        spec = DoubleExtensionSpec(base, np.zeros((dim, dim)), k, np.zeros(dim))
    else:
        raise BadParamsError(f"double_ext_demo kind must be 'solvable' or 'nilpotent', got {kind!r}")
    return double_extension(spec, tol)


_CATALOG = {
    "heisenberg": _catalog_heisenberg,
    "einstein_solvable": _catalog_einstein_solvable,
    "sl_killing": _catalog_sl_killing,
    "sl_complex_typeI": _catalog_sl_complex,
    "affine_plane": _catalog_affine_plane,
    "abelian": _catalog_abelian,
    "double_ext_demo": _catalog_double_ext_demo,
}


def catalog(name: str, tol: Tolerance = DEFAULT_TOL, **params) -> MetricLieAlgebra:
    """Named metric Lie algebras with their published constants.

    Irrational constants (sqrt(2/(n+2)) and the (n+1)/(n+2) fractions)
    are computed at call time, never hard-coded as decimals.
    """
    if name not in _CATALOG:
        raise UnknownNameError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG_NAMES)}")
    return _CATALOG[name](tol, **params)
