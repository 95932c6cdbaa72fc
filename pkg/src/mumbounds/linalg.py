"""Dense complex linear algebra primitives.

Kronecker products, partial traces and transposes, trace norms,
Hermitian eigendecomposition, and Schmidt decomposition of bipartite
pure states.  All functions are pure and operate on plain numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with a size guard; dimensions multiply."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError("kron expects two 2-d arrays")
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if max(rows, cols) > TOL.max_kron_dim:
        raise ValueError(
            f"kron result {rows}x{cols} exceeds the configured maximum "
            f"dimension {TOL.max_kron_dim}"
        )
    return np.kron(a, b)


def partial_trace(m: np.ndarray, dim_a: int, dim_b: int, keep: str = "A") -> np.ndarray:
    """Reduce a (dim_a*dim_b)-dimensional operator to one factor.

    ``keep`` selects the surviving subsystem, "A" or "B"; the trace of
    the result equals the trace of the input.
    """
    m = np.asarray(m)
    n = dim_a * dim_b
    if m.shape != (n, n):
        raise ValueError(
            f"matrix shape {m.shape} does not match a {dim_a}x{dim_b} bipartition"
        )
    m4 = m.reshape(dim_a, dim_b, dim_a, dim_b)
    if keep == "A":
        return np.einsum("ikjk->ij", m4)
    if keep == "B":
        return np.einsum("kikj->ij", m4)
    raise ValueError("keep must be 'A' or 'B'")


def partial_transpose(m: np.ndarray, dim_a: int, dim_b: int, sub: str = "B") -> np.ndarray:
    """Transpose one tensor factor of a bipartite operator."""
    m = np.asarray(m)
    n = dim_a * dim_b
    if m.shape != (n, n):
        raise ValueError(
            f"matrix shape {m.shape} does not match a {dim_a}x{dim_b} bipartition"
        )
    m4 = m.reshape(dim_a, dim_b, dim_a, dim_b)
    if sub == "B":
        return m4.transpose(0, 3, 2, 1).reshape(n, n)
    if sub == "A":
        return m4.transpose(2, 1, 0, 3).reshape(n, n)
    raise ValueError("sub must be 'A' or 'B'")


def trace_norm(m: np.ndarray) -> float:
    """Sum of singular values; accepts rectangular input."""
    m = np.asarray(m)
    try:
        s = np.linalg.svd(m, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise np.linalg.LinAlgError(
            f"SVD did not converge for a {m.shape[0]}x{m.shape[1]} matrix: {exc}"
        ) from exc
    return float(np.sum(s))


def hermitian_eig(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises ValueError when the input deviates from Hermiticity by more
    than the configured tolerance.
    """
    m = np.asarray(m)
    dev = float(np.abs(m - m.conj().T).max())
    if dev > TOL.hermiticity:
        raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    return np.linalg.eigh(m)


@dataclass(frozen=True)
class SchmidtData:
    """Schmidt form of a bipartite pure state.

    ``coefficients`` are non-negative and non-increasing with unit sum
    of squares; ``left``/``right`` hold the matching orthonormal factor
    vectors as columns; ``rank`` counts coefficients above the rank
    tolerance.
    """

    coefficients: np.ndarray
    left: np.ndarray
    right: np.ndarray
    rank: int

    def reconstruct(self) -> np.ndarray:
        """Rebuild the amplitude vector sum_m c_m (left_m x right_m)."""
        amp = np.einsum("m,im,jm->ij", self.coefficients, self.left, self.right)
        return amp.reshape(-1)


def schmidt_decompose(psi: np.ndarray, dim_a: int, dim_b: int) -> SchmidtData:
    """Schmidt decomposition of a normalized bipartite amplitude vector."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.size != dim_a * dim_b:
        raise ValueError(
            f"amplitude vector of length {psi.size} does not match {dim_a}x{dim_b}"
        )
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > TOL.state_normalization:
        raise ValueError(f"state norm {norm!r} deviates from 1 beyond tolerance")
    u, s, vh = np.linalg.svd(psi.reshape(dim_a, dim_b), full_matrices=False)
    rank = int(np.count_nonzero(s > TOL.schmidt_rank))
    return SchmidtData(coefficients=s, left=u, right=vh.T, rank=rank)
