"""Yang-Baxterization of braid generators and the YBE residual check.

R(theta) = (2/sqrt3)(cos(theta + pi/6) I + sin(theta) B) reduces to the
braid generator at theta = pi/3 and to the identity at theta = 0.  The
YBE holds when the three spectral parameters satisfy the Lorentzian-type
additivity tan(t2) = (tan t1 + tan t3) / (1 + (1/3) tan t1 tan t3),
i.e. u2 = (u1 + u3)/(1 + u1 u3) for u = tan(theta)/sqrt(3).
"""

import math
from dataclasses import dataclass

import numpy as np

from .linalg import SQRT3, identity

_DEGENERATE_EPS = 1e-12


@dataclass(frozen=True)
class YbeTriple:
    theta1: float
    theta2: float
    theta3: float


def r_matrix(b, theta):
    """(2/sqrt3)(cos(theta + pi/6) I + sin(theta) b); unitary for real theta."""
    b = np.asarray(b, dtype=complex)
    eye = identity(b.shape[0])
    return (2.0 / SQRT3) * (math.cos(theta + math.pi / 6) * eye
                            + math.sin(theta) * b)


def theta2_of(theta1, theta3):
    """Middle parameter from the Lorentzian additivity constraint.

    Returns the principal value in (-pi/2, pi/2).  Raises ValueError when
    either input angle sits at pi/2 (mod pi), where the tangent blows up,
    or when the denominator 1 + (1/3) tan(t1) tan(t3) vanishes.
    """
    for name, th in (("theta1", theta1), ("theta3", theta3)):
        if abs(math.cos(th)) < _DEGENERATE_EPS:
            raise ValueError(f"{name} = {th} is congruent to pi/2 (mod pi); "
                             "tan is undefined there")
    t1, t3 = math.tan(theta1), math.tan(theta3)
    denom = 1.0 + t1 * t3 / 3.0
    if abs(denom) < _DEGENERATE_EPS:
        raise ValueError(
            f"singular denominator 1 + (1/3) tan(theta1) tan(theta3) = {denom:.3e}")
    return math.atan((t1 + t3) / denom)


def constrained_triple(theta1, theta3):
    """YbeTriple with theta2 fixed by the additivity constraint."""
    return YbeTriple(theta1, theta2_of(theta1, theta3), theta3)


def ybe_residual(b1, b2, triple):
    """Frobenius norm of R1(t1) R2(t2) R1(t3) - R2(t3) R1(t2) R2(t1).

    Both sides are formed explicitly from the given braid generators;
    no algebraic shortcut is taken.
    """
    b1 = np.asarray(b1, dtype=complex)
    b2 = np.asarray(b2, dtype=complex)
    if b1.shape != b2.shape:
        raise ValueError(f"dimension mismatch: {b1.shape} vs {b2.shape}")
    r1 = lambda th: r_matrix(b1, th)
    r2 = lambda th: r_matrix(b2, th)
    t1, t2, t3 = triple.theta1, triple.theta2, triple.theta3
    lhs = r1(t1) @ r2(t2) @ r1(t3)
    rhs = r2(t3) @ r1(t2) @ r2(t1)
    return float(np.linalg.norm(lhs - rhs))
