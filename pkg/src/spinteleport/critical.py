"""Phase boundaries in (J, T, B) space.

Both surfaces are written as ``cosh(B/T) = R(J/T)`` and solved for ``B`` by
bisection on ``log cosh(B/T) - log R``.  Working with logarithms keeps the
right-hand side finite even when ``exp(2J/T)`` is far beyond double range.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import BracketError, DomainError
from .teleportation import average_fidelity_closed, output_negativity_signed
from .thermal import T_FLOOR, ChainParams

BOUNDARY_TOL = 1e-9
_LN2 = math.log(2.0)
_MAX_ITER = 200


def bisect(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12) -> float:
    """Root of ``f`` on ``[lo, hi]`` by interval halving.

    Stops when the bracket is narrower than ``tol``, when ``f`` hits an
    exact zero, when the midpoint can no longer be split in floating point,
    or after 200 halvings.

    Raises
    ------
    BracketError
        If ``f(lo)`` and ``f(hi)`` have the same strict sign.
    """
    if not tol > 0.0:
        raise DomainError(f"tol must be > 0, got {tol}")
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise BracketError(f"no sign change on [{lo}, {hi}]: f = ({flo}, {fhi})")
    for _ in range(_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol or mid <= lo or mid >= hi:
            break
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid < 0.0) == (flo < 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return lo if abs(flo) <= abs(fhi) else hi


def _log_cosh(y: float) -> float:
    y = abs(y)
    return y + math.log1p(math.exp(-2.0 * y)) - _LN2


def _log_rhs_entanglement(lx: float) -> float:
    # log[(x - 1)^2 / (4 (x + 1))] with x = e^lx
    return 2.0 * math.log(-math.expm1(-lx)) + lx - math.log1p(math.exp(-lx)) - 2.0 * _LN2


def _log_rhs_fidelity(lx: float) -> float:
    # log[sqrt((2.5x^2 + 3x + 2.5)/2) - x - 1] with x = e^lx; -inf when non-positive
    u = math.exp(-lx)
    inner = math.sqrt((2.5 + 3.0 * u + 2.5 * u * u) / 2.0) - 1.0 - u
    return lx + math.log(inner) if inner > 0.0 else -math.inf


_THRESHOLD_SLACK = 1e-12


def _solve_field(log_rhs: float, T: float) -> Optional[float]:
    # log_rhs within rounding of zero: the surface touches B = 0
    if log_rhs < -_THRESHOLD_SLACK:
        return None
    if log_rhs <= _THRESHOLD_SLACK:
        return 0.0
    hi = max(50.0 * T, T * (log_rhs + _LN2 + 1.0))
    return bisect(lambda B: _log_cosh(B / T) - log_rhs, 0.0, hi, tol=1e-15 * hi)


def _check(J: float, T: float) -> float:
    if not J > 0.0:
        raise DomainError(f"J must be > 0, got {J}")
    if not T > 0.0:
        raise DomainError(f"T must be > 0, got {T}")
    return max(T, T_FLOOR)


def critical_field_entanglement(J: float, T: float) -> Optional[float]:
    """Field at which a maximally entangled input stops arriving entangled.

    Returns ``None`` when no entanglement survives even at zero field.
    """
    T = _check(J, T)
    return _solve_field(_log_rhs_entanglement(2.0 * J / T), T)


def critical_field_fidelity(J: float, T: float) -> Optional[float]:
    """Field at which the average fidelity drops to the classical 2/3."""
    T = _check(J, T)
    return _solve_field(_log_rhs_fidelity(2.0 * J / T), T)


def fidelity_minimum_field(T: float) -> float:
    """``T arccosh 2``, where the weak-coupling fidelity bottoms out at 2/9."""
    if not T > 0.0:
        raise DomainError(f"T must be > 0, got {T}")
    return T * math.acosh(2.0)


class BoundaryKind(enum.Enum):
    ENTANGLEMENT_ZERO = "EntanglementZero"
    CLASSICAL_FIDELITY = "ClassicalFidelity"


def entanglement_residual(J: float, B: float, T: float) -> float:
    """Signed output entanglement for a maximally entangled input; zero on the surface."""
    return output_negativity_signed(1.0, ChainParams(J, B, T))


def fidelity_residual(J: float, B: float, T: float) -> float:
    return average_fidelity_closed(ChainParams(J, B, T)) - 2.0 / 3.0


_SOLVERS = {
    BoundaryKind.ENTANGLEMENT_ZERO: (critical_field_entanglement, entanglement_residual),
    BoundaryKind.CLASSICAL_FIDELITY: (critical_field_fidelity, fidelity_residual),
}


@dataclass(frozen=True)
class BoundaryPoint:
    J: float
    T: float
    B: float
    kind: BoundaryKind

    def residual(self) -> float:
        return _SOLVERS[self.kind][1](self.J, self.B, self.T)


def boundary_point(kind: BoundaryKind, J: float, T: float) -> Optional[BoundaryPoint]:
    b = _SOLVERS[kind][0](J, T)
    if b is None:
        return None
    return BoundaryPoint(J, max(T, T_FLOOR), b, kind)
