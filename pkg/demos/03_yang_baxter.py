"""Demo 3: Yang-Baxterization of the braid generators.

R(theta) = (2/sqrt3) (cos(theta + pi/6) I + sin(theta) B) is a unitary
one-parameter family interpolating between the identity (theta = 0) and
the braid generator (theta = pi/3).  The Yang-Baxter equation

    R_12(t1) R_23(t2) R_12(t3) = R_23(t3) R_12(t2) R_23(t1)

holds when tan(t2) = (tan t1 + tan t3) / (1 + (1/3) tan t1 tan t3), a
Lorentz-like velocity-addition rule for u = tan(theta)/sqrt(3).
"""

import math

import numpy as np

from qutritbraid import (braid_from_tl, build_parafermions, constrained_triple,
                         r_matrix, tl_nearest, ybe_residual)
from qutritbraid.yangbaxter import YbeTriple

def main():
    ps = build_parafermions(2)
    b12 = braid_from_tl(tl_nearest(ps, 1))
    b23 = braid_from_tl(tl_nearest(ps, 2))

    print("Yang-Baxterized R(theta)")
    print("=" * 50)
    print(f"  ||R(0) - I||_F      = "
          f"{np.linalg.norm(r_matrix(b23, 0.0) - np.eye(9)):.2e}")
    print(f"  ||R(pi/3) - B||_F   = "
          f"{np.linalg.norm(r_matrix(b23, math.pi / 3) - b23):.2e}")
    th = 0.8243
    r = r_matrix(b23, th)
    print(f"  unitarity at theta = {th}: "
          f"{np.linalg.norm(r @ r.conj().T - np.eye(9)):.2e}")
    print(f"  ||R(theta + pi) + R(theta)||_F = "
          f"{np.linalg.norm(r_matrix(b23, th + math.pi) + r):.2e}")

    print("\nConstrained Yang-Baxter equation:")
    rng = np.random.default_rng(20260823)
    worst = 0.0
    for t1, t3 in rng.uniform(-1.4, 1.4, size=(25, 2)):
        triple = constrained_triple(t1, t3)
        worst = max(worst, ybe_residual(b12, b23, triple))
    print(f"  25 random constrained (t1, t3) pairs, "
          f"worst residual = {worst:.2e}")

    t1, t3 = 0.3, 0.7
    triple = constrained_triple(t1, t3)
    print(f"  example: t1 = {t1}, t3 = {t3} -> t2 = {triple.theta2:.12f}")
    u = lambda t: math.tan(t) / math.sqrt(3)
    print(f"  additivity check u2 = (u1 + u3)/(1 + u1 u3): "
          f"{abs(u(triple.theta2) - (u(t1) + u(t3)) / (1 + u(t1) * u(t3))):.2e}")

    bad = YbeTriple(0.3, 0.3, 0.7)
    print(f"\nNegative control (unconstrained t2 = 0.3): "
          f"residual = {ybe_residual(b12, b23, bad):.4f}  (clearly nonzero)")

if __name__ == "__main__":
    main()
