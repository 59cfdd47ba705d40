"""Pseudo-Riemannian geometry of a metric Lie algebra.

All tensors are taken at the identity in a fixed basis: the Levi-Civita
connection has constant coefficients, so curvature and Ricci reduce to
finite contractions of the structure tensor against the Gram matrix.

The Ricci tensor is computed along two independent routes: the primary
path traces the curvature tensor (no basis change needed), and
:func:`ricci_structural` evaluates the closed orthonormal-basis formula
term by term.  Their agreement is the module's central correctness check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError
from .lie import LieAlgebra, killing_form, trace_functional
from .linalg import (
    DEFAULT_TOL,
    SymmetricForm,
    Tolerance,
    as_matrix,
    as_vector,
    operator_residual,
    pseudo_orthonormal_basis,
)

__all__ = [
    "MetricLieAlgebra",
    "RicciData",
    "ParallelCheck",
    "IsometryCheck",
    "u_map",
    "connection",
    "connection_matrices",
    "curvature",
    "ricci",
    "ricci_structural",
    "nabla_ric",
    "is_ricci_parallel",
    "is_einstein",
    "is_ricci_flat",
    "is_ad_invariant",
    "verify_isometry",
    "change_basis",
]


class MetricLieAlgebra:
    """A validated Lie algebra paired with a nondegenerate metric.

    Derived tensors (connection, curvature, Ricci) are memoised in a
    write-once per-object cache, so the object stays cheap to pass around
    and safe to share between readers.
    """

    def __init__(self, algebra: LieAlgebra, metric, tol: Tolerance = DEFAULT_TOL):
        if not algebra.is_validated:
            algebra.validate(tol)
        if not isinstance(metric, SymmetricForm):
            metric = SymmetricForm(metric, tol)
        if metric.dim != algebra.dim:
            raise DimensionMismatchError(
                f"metric dim {metric.dim} does not match algebra dim {algebra.dim}"
            )
        self.algebra = algebra
        self.metric = metric
        self.tol = tol
        self._cache = {}

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def gram(self) -> np.ndarray:
        return self.metric.gram

    def residual_scale(self) -> float:
        """Scale for predicate residuals: ric is quadratic in the brackets."""
        return max(1.0, operator_residual(self.gram), self.algebra.max_structure_constant ** 2)

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def __repr__(self):
        return f"MetricLieAlgebra(dim={self.dim})"


@dataclass(frozen=True)
class RicciData:
    """Ricci tensor/operator pair with scalar curvature and mean curvature vector."""

    tensor: np.ndarray      # ric(e_i, e_j)
    operator: np.ndarray    # matrix of Ric, columns = images of basis vectors
    scalar: float
    mean_curvature: np.ndarray  # Z with <Z, x> = tr(ad x)


@dataclass(frozen=True)
class ParallelCheck:
    ok: bool
    commutator_residual: float
    nabla_residual: float


@dataclass(frozen=True)
class IsometryCheck:
    ok: bool
    invertible: bool
    bracket_residual: float
    metric_residual: float


def u_map(m: MetricLieAlgebra, x, y) -> np.ndarray:
    """Symmetric Koszul correction U(x, y), defined through the metric pairing."""
    x = as_vector(x, m.dim, name="x")
    y = as_vector(y, m.dim, name="y")
    c, g = m.algebra.tensor, m.gram
    # <U(x,y), e_k> = 1/2 (<[e_k, x], y> + <x, [e_k, y]>)
    rhs = 0.5 * (
        np.einsum("kim,i,mn,n->k", c, x, g, y) + np.einsum("kjm,j,mn,n->k", c, y, g, x)
    )
    return m.metric.solve(rhs)


def connection(m: MetricLieAlgebra) -> np.ndarray:
    """Connection coefficients N[i, j, :] = components of nabla_{e_i} e_j."""

    def build():
        c, g = m.algebra.tensor, m.gram
        b = np.einsum("ijm,mk->ijk", c, g)  # <[e_i, e_j], e_k>
        u_low = 0.5 * (b.transpose(1, 2, 0) + b.transpose(2, 1, 0))
        u = np.einsum("km,ijm->ijk", np.linalg.inv(g), u_low)
        n = 0.5 * c + u
        n.flags.writeable = False
        return n

    return m._memo("connection", build)


def connection_matrices(m: MetricLieAlgebra) -> np.ndarray:
    """Stack of matrices of nabla_{e_i} acting on coefficient vectors."""

    def build():
        mats = connection(m).transpose(0, 2, 1)
        mats.flags.writeable = False
        return mats

    return m._memo("connection_matrices", build)


def curvature(m: MetricLieAlgebra) -> np.ndarray:
    """Curvature tensor riem[i, j, k, l]: component of R(e_i, e_j) e_k along e_l."""

    def build():
        c = m.algebra.tensor
        nm = connection_matrices(m)
        comp = np.einsum("iab,jbc->ijac", nm, nm)
        rmat = comp - comp.transpose(1, 0, 2, 3) - np.einsum("ijm,mlk->ijlk", c, nm)
        riem = rmat.transpose(0, 1, 3, 2)
        riem.flags.writeable = False
        return riem

    return m._memo("curvature", build)


def ricci(m: MetricLieAlgebra) -> RicciData:
    """Ricci data via the trace of curvature (basis-free primary path)."""

    def build():
        riem = curvature(m)
        ric = np.einsum("ijki->jk", riem)
        ric = 0.5 * (ric + ric.T)
        operator = m.metric.solve(ric)
        tau = trace_functional(m.algebra)
        z = m.metric.solve(tau)
        for arr in (ric, operator, z):
            arr.flags.writeable = False
        return RicciData(tensor=ric, operator=operator, scalar=float(np.trace(operator)), mean_curvature=z)

    return m._memo("ricci", build)


def ricci_structural(m: MetricLieAlgebra) -> np.ndarray:
    """Ricci tensor from the closed formula over a pseudo-orthonormal basis.

    Evaluates, term by term:
    -1/2 K(x,y) - 1/2 (<[Z,x],y> + <[Z,y],x>)
    - 1/2 sum_a eps_a <[x, b_a], [y, b_a]>
    + 1/4 sum_{a,b} eps_a eps_b <[b_a, b_b], x> <[b_a, b_b], y>

    This is the independent oracle for :func:`ricci`.
    """

    def build():
        c, g = m.algebra.tensor, m.gram
        basis, signs = pseudo_orthonormal_basis(m.metric, m.tol)
        eps = signs.astype(float)

        term_k = -0.5 * killing_form(m.algebra)

        z = m.metric.solve(trace_functional(m.algebra))
        az = m.algebra.ad(z)
        azg = az.T @ g
        term_z = -0.5 * (azg + azg.T)

        # [e_i, b_a]
        br = np.einsum("ijk,ja->iak", c, basis)
        term3 = -0.5 * np.einsum("iak,kl,jal,a->ij", br, g, br, eps)

        # <[b_a, b_b], e_i>
        bb = np.einsum("ijk,ia,jb->abk", c, basis, basis)
        p = np.einsum("abk,ki->abi", bb, g)
        term4 = 0.25 * np.einsum("abi,abj,a,b->ij", p, p, eps, eps)

        out = term_k + term_z + term3 + term4
        out = 0.5 * (out + out.T)
        out.flags.writeable = False
        return out

    return m._memo("ricci_structural", build)


def nabla_ric(m: MetricLieAlgebra) -> np.ndarray:
    """(nabla_{e_i} ric)(e_j, e_k) using the left-invariant simplification."""

    def build():
        n = connection(m)
        ric = ricci(m).tensor
        out = -np.einsum("ijm,mk->ijk", n, ric) - np.einsum("ikm,jm->ijk", n, ric)
        out.flags.writeable = False
        return out

    return m._memo("nabla_ric", build)


def is_ricci_parallel(m: MetricLieAlgebra, tol: Tolerance | None = None) -> ParallelCheck:
    """Both characterisations of nabla ric = 0, each reported separately.

    (a) Ric commutes with every nabla_{e_i};
    (b) the nabla_ric array vanishes.
    """
    tol = tol or m.tol
    op = ricci(m).operator
    nm = connection_matrices(m)
    comm = np.einsum("ab,ibc->iac", op, nm) - np.einsum("iab,bc->iac", nm, op)
    comm_res = operator_residual(comm)
    nab_res = operator_residual(nabla_ric(m))
    thr = tol.threshold(m.residual_scale())
    return ParallelCheck(ok=(comm_res <= thr and nab_res <= thr),
                         commutator_residual=comm_res, nabla_residual=nab_res)


def is_einstein(m: MetricLieAlgebra, tol: Tolerance | None = None):
    """Einstein constant and residual; (None, residual) when not Einstein."""
    tol = tol or m.tol
    data = ricci(m)
    c = data.scalar / m.dim if m.dim else 0.0
    res = operator_residual(data.tensor - c * m.gram)
    if res <= tol.threshold(m.residual_scale()):
        return c, res
    return None, res


def is_ricci_flat(m: MetricLieAlgebra, tol: Tolerance | None = None):
    tol = tol or m.tol
    res = operator_residual(ricci(m).tensor)
    return res <= tol.threshold(m.residual_scale()), res


def is_ad_invariant(m: MetricLieAlgebra, tol: Tolerance | None = None):
    """Max residual of <[x,y],z> + <y,[x,z]> over basis triples."""
    tol = tol or m.tol
    b = np.einsum("ijm,mk->ijk", m.algebra.tensor, m.gram)
    res = operator_residual(b + b.transpose(0, 2, 1))
    return res <= tol.threshold(m.residual_scale()), res


def verify_isometry(phi, m1: MetricLieAlgebra, m2: MetricLieAlgebra,
                    tol: Tolerance | None = None) -> IsometryCheck:
    """Check that phi is a metric Lie algebra isometry from m1 to m2."""
    tol = tol or m1.tol
    if m1.dim != m2.dim:
        raise DimensionMismatchError("isometry requires equal dimensions")
    phi = as_matrix(phi, dim=m1.dim, name="phi")
    svals = np.linalg.svd(phi, compute_uv=False)
    invertible = bool(svals.size == 0 or svals[-1] > tol.rank * max(1.0, svals[0]))

    c1, c2 = m1.algebra.tensor, m2.algebra.tensor
    lhs = np.einsum("ijm,lm->ijl", c1, phi)                    # phi [e_i, e_j]_1
    rhs = np.einsum("abl,ai,bj->ijl", c2, phi, phi)            # [phi e_i, phi e_j]_2
    bracket_res = operator_residual(lhs - rhs)

    metric_res = operator_residual(m1.gram - phi.T @ m2.gram @ phi)

    scale = max(m1.residual_scale(), m2.residual_scale()) * max(1.0, operator_residual(phi) ** 2)
    thr = tol.threshold(scale)
    ok = invertible and bracket_res <= thr and metric_res <= thr
    return IsometryCheck(ok=ok, invertible=invertible,
                         bracket_residual=bracket_res, metric_residual=metric_res)


def change_basis(m: MetricLieAlgebra, p) -> MetricLieAlgebra:
    """Pull the whole structure back along basis matrix p (columns = new basis)."""
    p = as_matrix(p, dim=m.dim, name="p")
    pinv = np.linalg.inv(p)
    c = m.algebra.tensor
    new_c = np.einsum("abm,ai,bj,lm->ijl", c, p, p, pinv)
    new_c = 0.5 * (new_c - new_c.transpose(1, 0, 2))
    new_g = p.T @ m.gram @ p
    algebra = LieAlgebra.from_tensor(new_c)
    algebra._validated = m.algebra.is_validated
    return MetricLieAlgebra(algebra, SymmetricForm(new_g, m.tol), m.tol)
