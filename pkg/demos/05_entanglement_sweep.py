"""Demo 5: l1-norm and entanglement entropy of the evolved two-qutrit state.

|Psi(theta)> = A23(theta)|11> has three nonzero amplitudes.  Sweeping theta
over [0, pi] shows that the l1 norm of the amplitude vector and the
von Neumann entropy of either single-qutrit marginal peak together at
theta = pi/3 and 2pi/3, where the state is maximally entangled
(S = ln 3, l1 = sqrt 3), and dip together at theta = pi/2.
"""

import math

from qutritbraid import (entropy_schmidt, find_extrema, l1_norm,
                         partial_trace, psi_theta, sweep_theta,
                         von_neumann_entropy)

def main():
    print("theta sweep of |Psi(theta)> = A23(theta) |11>")
    print("=" * 58)
    print(f"{'theta':>10} {'l1 norm':>12} {'entropy (nats)':>16}")
    for frac, label in ((0, "0"), (1 / 6, "pi/6"), (1 / 3, "pi/3"),
                        (1 / 2, "pi/2"), (2 / 3, "2pi/3"), (5 / 6, "5pi/6"),
                        (1, "pi")):
        st = psi_theta(frac * math.pi)
        print(f"{label:>10} {l1_norm(st):>12.6f} {entropy_schmidt(st):>16.6f}")

    print(f"\nreference values: sqrt3 = {math.sqrt(3):.6f}, "
          f"ln 3 = {math.log(3):.6f}")

    samples = sweep_theta(0.0, math.pi, 2001)
    rep = find_extrema(samples, refine_tol=1e-10)
    print("\nRefined extrema over [0, pi]:")
    for name, extrema in (("l1 norm", rep.l1_extrema),
                          ("entropy", rep.entropy_extrema)):
        for e in extrema:
            print(f"  {name:>8} {e.kind}: theta = {e.theta:.12f} "
                  f"({e.theta / math.pi:.6f} pi), value = {e.value:.12f}")

    st = psi_theta(math.pi / 3)
    rho = partial_trace(st, keep=1)
    print("\nAt theta = pi/3 the single-qutrit marginal is maximally mixed:")
    print(f"  S(rho) = {von_neumann_entropy(rho):.12f} vs ln 3 = "
          f"{math.log(3):.12f}")

if __name__ == "__main__":
    main()
