"""Lie algebras presented by structure constants.

Structure constants are stored sparsely on ordered pairs i < j; the
antisymmetric completion is computed, never stored, which removes a whole
class of inconsistent-input errors.  Construction is two-phase: raw load,
then :meth:`LieAlgebra.validate` after the Jacobi check.  The geometry
layer only accepts validated algebras.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, JacobiError
from .linalg import DEFAULT_TOL, Tolerance, as_vector, operator_residual

__all__ = [
    "LieAlgebra",
    "StructureReport",
    "validate_jacobi",
    "killing_form",
    "trace_functional",
    "structure_report",
    "direct_sum",
]


class LieAlgebra:
    """A finite-dimensional real Lie algebra over a fixed basis.

    Parameters
    ----------
    dim : int
        Dimension of the algebra.
    structure : mapping from (i, j) with i < j to a length-``dim`` vector
        Expansion of [e_i, e_j] in the basis.  Pairs that are absent
        bracket to zero.
    basis_names : optional sequence of labels for reporting.
    """

    def __init__(self, dim, structure=None, basis_names=None):
        dim = int(dim)
        if dim < 0:
            raise ValueError("dim must be nonnegative")
        self.dim = dim
        entries = {}
        for key, coeffs in dict(structure or {}).items():
            i, j = (int(key[0]), int(key[1]))
            if not (0 <= i < j < dim):
                raise DimensionMismatchError(
                    f"bracket pair ({i}, {j}) must satisfy 0 <= i < j < {dim}"
                )
            vec = as_vector(coeffs, dim, name=f"coefficients of [e_{i}, e_{j}]")
            vec = vec.copy()
            vec.flags.writeable = False
            entries[(i, j)] = vec
        self.structure = entries
        if basis_names is not None:
            basis_names = tuple(str(s) for s in basis_names)
            if len(basis_names) != dim:
                raise DimensionMismatchError("basis_names length must equal dim")
        self.basis_names = basis_names
        self._tensor = None
        self._validated = False

    @classmethod
    def from_tensor(cls, tensor, basis_names=None, atol: float = 1e-12) -> "LieAlgebra":
        """Build from a dense bracket tensor C[i, j, :] = [e_i, e_j]."""
        tensor = np.asarray(tensor, dtype=float)
        dim = tensor.shape[0]
        if tensor.shape != (dim, dim, dim):
            raise DimensionMismatchError(f"bracket tensor must be cubic, got {tensor.shape}")
        asym = operator_residual(tensor + tensor.transpose(1, 0, 2))
        if asym > atol * max(1.0, operator_residual(tensor)):
            raise ValueError(f"bracket tensor is not antisymmetric (residual {asym:.3e})")
        structure = {}
        for i in range(dim):
            for j in range(i + 1, dim):
                if np.any(tensor[i, j] != 0.0):
                    structure[(i, j)] = tensor[i, j]
        return cls(dim, structure, basis_names=basis_names)

    @property
    def tensor(self) -> np.ndarray:
        """Dense antisymmetric tensor C with C[i, j, :] = [e_i, e_j]."""
        if self._tensor is None:
            c = np.zeros((self.dim, self.dim, self.dim))
            for (i, j), vec in self.structure.items():
                c[i, j] = vec
                c[j, i] = -vec
            c.flags.writeable = False
            self._tensor = c
        return self._tensor

    @property
    def ad_basis(self) -> np.ndarray:
        """Array of adjoint matrices: ad_basis[i] = matrix of ad(e_i)."""
        return self.tensor.transpose(0, 2, 1)

    @property
    def max_structure_constant(self) -> float:
        return operator_residual(self.tensor)

    @property
    def is_validated(self) -> bool:
        return self._validated

    def bracket(self, x, y) -> np.ndarray:
        """[x, y] by contraction against the structure tensor."""
        x = as_vector(x, self.dim, name="x")
        y = as_vector(y, self.dim, name="y")
        return np.einsum("ijk,i,j->k", self.tensor, x, y)

    def ad(self, x) -> np.ndarray:
        """Matrix of ad(x): ad(x) y = [x, y]."""
        x = as_vector(x, self.dim, name="x")
        return np.einsum("ijk,i->kj", self.tensor, x)

    def validate(self, tol: Tolerance = DEFAULT_TOL) -> "LieAlgebra":
        """Check the Jacobi identity; mark validated or raise JacobiError."""
        res = validate_jacobi(self)
        bound = tol.abs * max(1.0, self.max_structure_constant ** 3)
        if res > bound:
            raise JacobiError(
                f"Jacobi residual {res:.3e} exceeds bound {bound:.3e}", residual=res
            )
        self._validated = True
        return self

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, brackets={len(self.structure)})"


def validate_jacobi(g: LieAlgebra) -> float:
    """Max-norm over basis triples of the Jacobi cyclic sum."""
    c = g.tensor
    if g.dim == 0:
        return 0.0
    # T[i, j, k, :] = [e_i, [e_j, e_k]]
    t = np.einsum("jkm,iml->ijkl", c, c)
    cyc = t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)
    return operator_residual(cyc)


def killing_form(g: LieAlgebra) -> np.ndarray:
    """K_ij = trace(ad e_i . ad e_j); symmetric, possibly degenerate."""
    ads = g.ad_basis
    k = np.einsum("iab,jba->ij", ads, ads)
    return 0.5 * (k + k.T)


def trace_functional(g: LieAlgebra) -> np.ndarray:
    """tau_i = trace(ad e_i); the algebra is unimodular iff tau = 0."""
    return np.einsum("iaa->i", g.ad_basis)


@dataclass(frozen=True)
class StructureReport:
    is_nilpotent: bool
    is_solvable: bool
    is_unimodular: bool
    center_dim: int
    derived_dim: int
    nilpotency_step: int | None


def _span(rows: np.ndarray, tol: Tolerance) -> np.ndarray:
    """Orthonormal row basis of the span of ``rows`` under the rank cutoff."""
    rows = np.asarray(rows, dtype=float)
    if rows.size == 0:
        return np.zeros((0, rows.shape[-1] if rows.ndim == 2 else 0))
    rows = rows.reshape(-1, rows.shape[-1])
    _, svals, vt = np.linalg.svd(rows, full_matrices=False)
    if svals.size == 0 or svals[0] == 0.0:
        return np.zeros((0, rows.shape[-1]))
    rank = int(np.count_nonzero(svals > tol.rank * svals[0]))
    return vt[:rank]


def _bracket_span(g: LieAlgebra, a: np.ndarray, b: np.ndarray, tol: Tolerance) -> np.ndarray:
    """Span of [span(a), span(b)] for row-basis matrices a, b."""
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((0, g.dim))
    prods = np.einsum("ijk,ai,bj->abk", g.tensor, a, b).reshape(-1, g.dim)
    return _span(prods, tol)


def structure_report(g: LieAlgebra, tol: Tolerance = DEFAULT_TOL) -> StructureReport:
    """Series-based structural predicates with an explicit numerical rank policy."""
    dim = g.dim
    full = np.eye(dim)

    # lower central series
    step = None
    cur = full
    nilpotent = dim == 0
    if dim:
        for k in range(1, dim + 2):
            nxt = _bracket_span(g, full, cur, tol)
            if nxt.shape[0] == 0:
                nilpotent = True
                step = k
                break
            if nxt.shape[0] >= cur.shape[0]:
                break
            cur = nxt
    else:
        step = 1

    # derived series
    solvable = dim == 0
    cur = full
    if dim:
        for _ in range(dim + 1):
            nxt = _bracket_span(g, cur, cur, tol)
            if nxt.shape[0] == 0:
                solvable = True
                break
            if nxt.shape[0] >= cur.shape[0]:
                break
            cur = nxt

    derived = _bracket_span(g, full, full, tol)
    derived_dim = int(derived.shape[0])

    if dim:
        # center = null space of x -> ad(x), flattened to a (dim^2, dim) matrix
        flat = g.tensor.transpose(1, 2, 0).reshape(dim * dim, dim)
        svals = np.linalg.svd(flat, compute_uv=False)
        rank = int(np.count_nonzero(svals > tol.rank * svals[0])) if svals.size and svals[0] > 0 else 0
        center_dim = dim - rank
    else:
        center_dim = 0

    tau = trace_functional(g)
    unimodular = operator_residual(tau) <= tol.threshold(max(1.0, g.max_structure_constant))

    return StructureReport(
        is_nilpotent=nilpotent,
        is_solvable=solvable,
        is_unimodular=unimodular,
        center_dim=center_dim,
        derived_dim=derived_dim,
        nilpotency_step=step if nilpotent else None,
    )


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Direct sum of two algebras (block brackets, no interaction)."""
    dim = a.dim + b.dim
    structure = {}
    for (i, j), vec in a.structure.items():
        out = np.zeros(dim)
        out[: a.dim] = vec
        structure[(i, j)] = out
    for (i, j), vec in b.structure.items():
        out = np.zeros(dim)
        out[a.dim :] = vec
        structure[(i + a.dim, j + a.dim)] = out
    names = None
    if a.basis_names is not None and b.basis_names is not None:
        names = a.basis_names + b.basis_names
    return LieAlgebra(dim, structure, basis_names=names)
