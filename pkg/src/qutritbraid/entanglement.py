"""Entanglement analysis of the state generated by the R-matrix.

|Psi(theta)> = (cos t - (i/3) sin t)|11> + (2i/3) w sin t |23>
             + (2i/3) w^2 sin t |32>
is column one of the reduced w^2-sector R-matrix acting on |11>.  Its
l1-norm and von Neumann entropy peak together at theta = pi/3 (and the
mirror point 2pi/3), where the amplitudes equalize to 1/sqrt(3) and the
R-matrix reduces to the braid generator.
"""

import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .linalg import OMEGA, OMEGA2, hermitian_eigenvalues

_NORM_TOL = 1e-12

# 0-based natural-basis indices of |11>, |23>, |32>.
_I11, _I23, _I32 = 0, 5, 7


@dataclass(frozen=True)
class QutritPairState:
    """Normalized 2-qutrit state over the natural basis |11>..|33>."""
    amplitudes: np.ndarray
    sector: str = None  # parity sector the support lies in, if declared

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (9,):
            raise ValueError("expected 9 amplitudes over the 2-qutrit basis")
        n2 = float(np.vdot(amps, amps).real)
        if abs(n2 - 1.0) >= _NORM_TOL:
            raise ValueError(f"state is not normalized: |norm^2 - 1| = {abs(n2 - 1):.3e}")
        object.__setattr__(self, "amplitudes", amps)


@dataclass(frozen=True)
class ThetaSample:
    theta: float
    l1: float
    entropy: float


@dataclass(frozen=True)
class Extremum:
    kind: str       # "max" or "min"
    theta: float
    value: float


@dataclass(frozen=True)
class ExtremaReport:
    l1_extrema: tuple
    entropy_extrema: tuple
    location_gaps: tuple  # |theta_l1 - theta_S| for paired extrema


def psi_theta(theta):
    """State from acting the reduced R-matrix on |11> in the w^2 sector."""
    amps = np.zeros(9, dtype=complex)
    s = math.sin(theta)
    amps[_I11] = math.cos(theta) - 1j * s / 3.0
    amps[_I23] = (2j / 3.0) * OMEGA * s
    amps[_I32] = (2j / 3.0) * OMEGA2 * s
    return QutritPairState(amplitudes=amps, sector="omega2")


def l1_norm(state):
    """Sum of amplitude moduli over the natural basis."""
    return float(np.sum(np.abs(state.amplitudes)))


def partial_trace(state, keep):
    """Reduced 3x3 density matrix of qutrit 1 or 2 of a pure pair state."""
    if keep not in (1, 2):
        raise ValueError("keep must be 1 or 2")
    m = state.amplitudes.reshape(3, 3)  # m[a, b] = <ab|psi>
    if keep == 1:
        return m @ m.conj().T
    return m.T @ m.conj()


def von_neumann_entropy(rho, tol=1e-10):
    """-sum lambda ln lambda over the spectrum, in nats.

    Eigenvalues in [-1e-12, 0) are clipped to zero; anything more negative,
    or a trace off unity beyond ``tol``, raises ValueError.
    """
    rho = np.asarray(rho, dtype=complex)
    tr = float(np.trace(rho).real)
    if abs(tr - 1.0) >= tol:
        raise ValueError(f"trace must be 1, got {tr}")
    vals = hermitian_eigenvalues(rho, herm_tol=tol)
    if vals[-1] < -1e-12:
        raise ValueError(f"density matrix is not PSD: min eigenvalue {vals[-1]:.3e}")
    vals = np.clip(vals, 0.0, None)
    nz = vals[vals > 0.0]
    return float(-np.sum(nz * np.log(nz))) + 0.0  # +0.0 kills negative zero


def entropy_schmidt(state):
    """-sum |a_i|^2 ln |a_i|^2 directly from the amplitudes.

    Valid because psi_theta is in Schmidt form (its three terms have
    distinct first and distinct second qutrit indices).
    """
    p = np.abs(state.amplitudes) ** 2
    nz = p[p > 0.0]
    return float(-np.sum(nz * np.log(nz))) + 0.0


def sweep_theta(theta_min, theta_max, steps):
    """Uniform samples of (theta, l1, entropy), endpoints included."""
    if steps < 2:
        raise ValueError("steps must be >= 2")
    if not theta_min < theta_max:
        raise ValueError("need theta_min < theta_max")
    out = []
    for theta in np.linspace(theta_min, theta_max, steps):
        st = psi_theta(float(theta))
        out.append(ThetaSample(theta=float(theta),
                               l1=l1_norm(st),
                               entropy=entropy_schmidt(st)))
    return out


# --- extremum refinement ---------------------------------------------------
#
# Near a smooth maximum both curves are locally quadratic, so in double
# precision the function is flat to rounding noise over a ~1e-8 window and
# a bisection-style search cannot localize the extremum to 1e-9.  The
# refinement objectives are therefore evaluated in 50-digit arithmetic via
# the closed-form amplitude expressions (identical to l1_norm/entropy of
# psi_theta up to rounding, which the test suite asserts).

_MP_DPS = 50
_INV_PHI = (math.sqrt(5) - 1) / 2  # for step counting only


def _amp_moduli_sq(theta):
    s2 = mp.sin(theta) ** 2
    q = mp.mpf(4) / 9 * s2
    return 1 - 2 * q, q  # (|a1|^2, |a2|^2 = |a3|^2)


def _l1_mp(theta):
    p, q = _amp_moduli_sq(theta)
    return mp.sqrt(p) + 2 * mp.sqrt(q)


def _entropy_mp(theta):
    p, q = _amp_moduli_sq(theta)
    out = mp.mpf(0)
    for x in (p, q, q):
        if x > 0:
            out -= x * mp.log(x)
    return out


def golden_section(f, a, b, tol, find_max=False):
    """Golden-section search on [a, b]; returns the bracket midpoint.

    Works with any ordered arithmetic (floats or mpmath mpf).
    """
    sign = -1 if find_max else 1
    inv_phi = (mp.sqrt(5) - 1) / 2
    inv_phi2 = 1 - inv_phi
    a, b = mp.mpf(a), mp.mpf(b)
    h = b - a
    if h <= tol:
        return float((a + b) / 2)
    c = a + inv_phi2 * h
    d = a + inv_phi * h
    yc = sign * f(c)
    yd = sign * f(d)
    n = int(math.ceil(math.log(tol / float(h)) / math.log(_INV_PHI)))
    for _ in range(max(n, 1)):
        if yc < yd:
            b, d, yd = d, c, yc
            h *= inv_phi
            c = a + inv_phi2 * h
            yc = sign * f(c)
        else:
            a, c, yc = c, d, yd
            h *= inv_phi
            d = a + inv_phi * h
            yd = sign * f(d)
        if b - a <= tol:
            break
    return float((a + b) / 2)


def _refine_curve(samples, values, refine_tol, f_mp):
    """Locate and refine every interior local extremum of a sampled curve."""
    found = []
    with mp.workdps(_MP_DPS):
        for k in range(1, len(samples) - 1):
            prev_v, v, next_v = values[k - 1], values[k], values[k + 1]
            if v >= prev_v and v >= next_v and (v > prev_v or v > next_v):
                kind = "max"
            elif v <= prev_v and v <= next_v and (v < prev_v or v < next_v):
                kind = "min"
            else:
                continue
            theta = golden_section(f_mp, samples[k - 1], samples[k + 1],
                                   mp.mpf(refine_tol), find_max=(kind == "max"))
            found.append(Extremum(kind=kind, theta=theta,
                                  value=float(f_mp(mp.mpf(theta)))))
    return tuple(found)


def find_extrema(samples, refine_tol):
    """Refined interior extrema of both curves, paired up by proximity.

    Each grid-local extremum is bracketed by its two neighbors and refined
    by golden-section search on the exact (non-sampled) curve to
    ``refine_tol``; the report pairs l1 extrema with entropy extrema of the
    same kind and records the location gaps.
    """
    if len(samples) < 3:
        raise ValueError("need at least 3 samples")
    if refine_tol <= 0:
        raise ValueError("refine_tol must be positive")
    thetas = [s.theta for s in samples]
    l1_ext = _refine_curve(thetas, [s.l1 for s in samples], refine_tol, _l1_mp)
    s_ext = _refine_curve(thetas, [s.entropy for s in samples], refine_tol,
                          _entropy_mp)
    gaps = []
    for e in l1_ext:
        partners = [x for x in s_ext if x.kind == e.kind]
        if partners:
            gaps.append(min(abs(x.theta - e.theta) for x in partners))
    return ExtremaReport(l1_extrema=l1_ext, entropy_extrema=s_ext,
                         location_gaps=tuple(gaps))
