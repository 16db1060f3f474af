"""Dense complex linear algebra for one- and two-qubit operators.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  The basis is
fixed project-wide to ``{|00>, |01>, |10>, |11>}`` with ``|0>`` the +1
eigenstate of sigma_z.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import HermiticityError, InvalidDimensionError, InvalidStateError

HERMITIAN_TOL = 1e-12
JACOBI_OFFDIAG_TOL = 1e-14
_MAX_SWEEPS = 64

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z)


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidDimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product; entry ``(i*dim_b + k, j*dim_b + l)`` is ``a[i, j] * b[k, l]``."""
    a = as_matrix(a)
    b = as_matrix(b)
    da, db = a.shape[0], b.shape[0]
    out = a[:, None, :, None] * b[None, :, None, :]
    return out.reshape(da * db, da * db)


def partial_transpose_second(rho) -> np.ndarray:
    """Transpose the second qubit of a two-qubit operator.

    ``|a b><c d|`` is mapped to ``|a d><c b|``.
    """
    rho = as_matrix(rho)
    if rho.shape != (4, 4):
        raise InvalidDimensionError(f"partial transpose needs a 4x4 matrix, got {rho.shape}")
    return rho.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


def max_asymmetry(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    apq = a[p, q]
    mag = abs(apq)
    if mag == 0.0:
        return
    phase = apq / mag
    theta = 0.5 * math.atan2(2.0 * mag, (a[q, q] - a[p, p]).real)
    c, s = math.cos(theta), math.sin(theta)
    # phase rotation making a[p, q] real, followed by a real Givens rotation
    g = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
    idx = [p, q]
    a[:, idx] = a[:, idx] @ g
    a[idx, :] = g.conj().T @ a[idx, :]
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    v[:, idx] = v[:, idx] @ g


def hermitian_eigen(m) -> EigenDecomposition:
    """Eigendecomposition of a small Hermitian matrix by cyclic Jacobi rotations.

    Sweeps over all off-diagonal pairs until the off-diagonal Frobenius mass
    drops below ``1e-14`` (relative to the matrix norm when that exceeds 1).

    Returns
    -------
    EigenDecomposition
        Eigenvalues in ascending order and the unitary whose columns are the
        matching eigenvectors.

    Raises
    ------
    HermiticityError
        If ``max |M - M^H|`` exceeds ``1e-12``.
    """
    a = as_matrix(m)
    asym = max_asymmetry(a)
    if asym > HERMITIAN_TOL:
        raise HermiticityError(asym)
    n = a.shape[0]
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)
    threshold = JACOBI_OFFDIAG_TOL * max(1.0, float(np.linalg.norm(a)))
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(_MAX_SWEEPS):
        if np.linalg.norm(a[offdiag]) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)
    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(w[order], v[:, order])


def hermitian_eigenvalues(m) -> np.ndarray:
    return hermitian_eigen(m).eigenvalues


def validate_density_matrix(rho, tol: float = 1e-10, dim: int | None = None) -> np.ndarray:
    """Check Hermiticity, unit trace and positivity; return the matrix as an array."""
    rho = as_matrix(rho)
    if dim is not None and rho.shape[0] != dim:
        raise InvalidDimensionError(f"expected a {dim}x{dim} density matrix, got {rho.shape}")
    asym = max_asymmetry(rho)
    if asym > HERMITIAN_TOL:
        raise InvalidStateError(f"density matrix not Hermitian (max asymmetry {asym:.3e})")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > tol:
        raise InvalidStateError(f"density matrix trace {tr!r} deviates from 1")
    lo = hermitian_eigenvalues(rho)[0]
    if lo < -tol:
        raise InvalidStateError(f"density matrix has negative eigenvalue {lo:.3e}")
    return rho


def von_neumann_entropy(rho) -> float:
    """Entropy ``-tr(rho log2 rho)`` in bits, with ``0 log 0 = 0``.

    Eigenvalues in ``[-1e-8, 0)`` are treated as rounding noise and clamped
    to zero; anything more negative, or a trace off by more than ``1e-8``,
    raises :class:`InvalidStateError`.
    """
    rho = as_matrix(rho)
    tr = np.trace(rho).real
    if abs(tr - 1.0) > 1e-8:
        raise InvalidStateError(f"trace {tr!r} deviates from 1")
    w = hermitian_eigenvalues(rho)
    if w[0] < -1e-8:
        raise InvalidStateError(f"negative eigenvalue {w[0]:.3e}")
    return entropy_from_spectrum(w)


def entropy_from_spectrum(w) -> float:
    w = np.clip(np.asarray(w, dtype=float), 0.0, None)
    w = w[w > 0.0]
    return float(-np.sum(w * np.log2(w))) + 0.0


def ket(*amplitudes) -> np.ndarray:
    return np.array(amplitudes, dtype=complex)


def projector(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())
