"""Dense complex matrix kernels: eigendecomposition, exponentials, tensor
products, partial trace, Choi matrices and superoperator builders.

All superoperator routines use the column-stacking convention
vec(A B C) = (C^T otimes A) vec(B); matrices are plain numpy arrays in
row-major storage.
"""

from typing import NamedTuple, Sequence

import numpy as np
import scipy.linalg

from .errors import DimensionMismatch, NoConvergence, NonHermitianInput


def frobenius(m: np.ndarray) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(m))


def _as_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    return m


def is_hermitian(m: np.ndarray, tol: float = 1e-10) -> bool:
    """Check Hermiticity to a Frobenius-relative tolerance."""
    m = _as_square(m)
    scale = max(frobenius(m), 1.0)
    return frobenius(m - m.conj().T) <= tol * scale


def is_unitary(m: np.ndarray, tol: float = 1e-10) -> bool:
    m = _as_square(m)
    eye = np.eye(m.shape[0])
    return frobenius(m.conj().T @ m - eye) <= tol * max(1.0, frobenius(eye))


def is_psd(m: np.ndarray, tol: float = 1e-8) -> bool:
    """Positive semidefinite up to -tol relative to the largest eigenvalue."""
    m = _as_square(m)
    if not is_hermitian(m, tol=1e-8):
        return False
    w = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    top = max(float(w[-1]), 0.0)
    return float(w[0]) >= -tol * max(top, 1e-300)


class HermitianSpectrum(NamedTuple):
    eigenvalues: np.ndarray   # real, ascending
    eigenvectors: np.ndarray  # orthonormal columns


def hermitian_eigendecompose(m: np.ndarray, tol: float = 1e-10) -> HermitianSpectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises NonHermitianInput if the input fails the relative Hermiticity
    check, NoConvergence if the underlying iteration fails.
    """
    m = _as_square(m)
    if not is_hermitian(m, tol=tol):
        raise NonHermitianInput("matrix is not Hermitian within tolerance")
    try:
        w, v = np.linalg.eigh(0.5 * (m + m.conj().T))
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return HermitianSpectrum(w, v)


def matrix_exponential(m: np.ndarray, scale: complex = 1.0) -> np.ndarray:
    """exp(scale * m).

    Hermitian inputs go through the eigendecomposition; everything else
    uses scaling-and-squaring (scipy.linalg.expm).
    """
    m = _as_square(m)
    if is_hermitian(m, tol=1e-12):
        w, v = np.linalg.eigh(0.5 * (m + m.conj().T))
        return (v * np.exp(scale * w)) @ v.conj().T
    return scipy.linalg.expm(scale * m)


def kron_compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product a otimes b."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or b.ndim != 2:
        raise DimensionMismatch("kron_compose expects 2-d arrays")
    return np.kron(a, b)


def partial_trace(total: np.ndarray, dims: Sequence[int], keep: int) -> np.ndarray:
    """Trace out all subsystems except ``keep``.

    ``total`` is a square matrix on the tensor product of subsystems with
    dimensions ``dims``.
    """
    total = _as_square(total)
    dims = [int(d) for d in dims]
    n = int(np.prod(dims))
    if total.shape[0] != n:
        raise DimensionMismatch(
            f"matrix dimension {total.shape[0]} != product of dims {n}")
    if not 0 <= keep < len(dims):
        raise DimensionMismatch(f"keep index {keep} out of range")
    arr = total.reshape(dims + dims)
    k = len(dims)
    # contract every row/column index pair except the kept one
    for site in reversed(range(k)):
        if site == keep:
            continue
        arr = np.trace(arr, axis1=site, axis2=arr.ndim // 2 + site)
        k -= 1
        if site < keep:
            # trace removed one axis before the kept one on each side
            pass
    return np.ascontiguousarray(arr)


def vec(m: np.ndarray) -> np.ndarray:
    """Column-stacking vectorization."""
    return np.asarray(m, dtype=complex).reshape(-1, order="F")


def unvec(v: np.ndarray, dim: int | None = None) -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(-1)
    if dim is None:
        dim = int(round(np.sqrt(v.size)))
    if dim * dim != v.size:
        raise DimensionMismatch("vector length is not a perfect square")
    return v.reshape((dim, dim), order="F")


def apply_superoperator(sop: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """Apply a d^2 x d^2 superoperator matrix to a d x d operator."""
    rho = _as_square(rho)
    sop = _as_square(sop)
    if sop.shape[0] != rho.size:
        raise DimensionMismatch("superoperator does not match operator size")
    return unvec(sop @ vec(rho), rho.shape[0])


def choi_of_superoperator(sop: np.ndarray) -> np.ndarray:
    """Choi matrix of a superoperator acting on d x d operators.

    Convention: the map is applied to the second half of the unnormalized
    maximally entangled operator, Choi = sum_ij E_ij otimes map(E_ij).
    The map is completely positive iff the result is PSD.
    """
    sop = _as_square(sop)
    d = int(round(np.sqrt(sop.shape[0])))
    if d * d != sop.shape[0]:
        raise DimensionMismatch("superoperator dimension is not a perfect square")
    # column-stacking index bookkeeping:
    #   sop[b*d + a, j*d + i] = map(E_ij)[a, b-column-stacked]
    m4 = sop.reshape(d, d, d, d)
    choi4 = np.transpose(m4, (3, 1, 2, 0))
    return np.ascontiguousarray(choi4.reshape(d * d, d * d))


def trace_distance(a: np.ndarray, b: np.ndarray, tol: float = 1e-8) -> float:
    """Half the trace norm of a - b for Hermitian a, b."""
    a = _as_square(a)
    b = _as_square(b)
    if a.shape != b.shape:
        raise DimensionMismatch("trace_distance requires equal shapes")
    if not (is_hermitian(a, tol=tol) and is_hermitian(b, tol=tol)):
        raise NonHermitianInput("trace_distance requires Hermitian inputs")
    diff = 0.5 * ((a - b) + (a - b).conj().T)
    return float(0.5 * np.sum(np.abs(np.linalg.eigvalsh(diff))))


# ---------------------------------------------------------------------------
# superoperator builders (column-stacking convention)
# ---------------------------------------------------------------------------

def hamiltonian_superoperator(h: np.ndarray) -> np.ndarray:
    """Matrix of rho -> -i [h, rho] on column-stacked rho."""
    h = _as_square(h)
    eye = np.eye(h.shape[0])
    return -1j * (np.kron(eye, h) - np.kron(h.T, eye))


def dissipator_superoperator(c_matrix: np.ndarray, ops: np.ndarray) -> np.ndarray:
    """Matrix of rho -> sum_xy C_xy (op_y rho op_x - {op_x op_y, rho}/2).

    ``ops`` is a stack of operators with shape (n, d, d); ``c_matrix`` is
    the n x n coefficient matrix pairing left index x with right index y.
    """
    ops = np.asarray(ops, dtype=complex)
    c_matrix = np.asarray(c_matrix, dtype=complex)
    n, d, _ = ops.shape
    if c_matrix.shape != (n, n):
        raise DimensionMismatch("coefficient matrix does not match operator stack")
    eye = np.eye(d)
    # sandwich term: sum C_xy kron(op_x^T, op_y)
    sand = np.einsum("xy,xab,ycd->bdac", c_matrix, ops, ops, optimize=True)
    sand = sand.reshape(d * d, d * d)
    q = np.einsum("xy,xab,ybc->ac", c_matrix, ops, ops, optimize=True)
    anti = -0.5 * (np.kron(eye, q) + np.kron(q.T, eye))
    return sand + anti


def conjugation_superoperator(u: np.ndarray) -> np.ndarray:
    """Matrix of rho -> u rho u^dagger on column-stacked rho."""
    u = _as_square(u)
    return np.kron(u.conj(), u)
