"""Demo 2: Temperley-Lieb elements and the braid generators they induce.

The package carries two distinct Temperley-Lieb families with loop value
d = sqrt(3): the parafermion nearest-neighbour family T_i and the localized
two-qutrit family T'_i.  Each element satisfies T^2 = sqrt(3) T, and the
braid generators B = w (e^{-i pi/6} T - 1) built from adjacent elements
satisfy the braid relation B_i B_{i+1} B_i = B_{i+1} B_i B_{i+1}.
"""

import numpy as np

from qutritbraid import (braid_from_tl, build_parafermions, localized_family,
                         nearest_family, tl_localized, tl_nearest,
                         verify_braid_relation, verify_tl_algebra)
from qutritbraid.braid_tl import B12_LITERAL, B23_LITERAL
from qutritbraid.linalg import SQRT3

def main():
    ps = build_parafermions(2)

    print("Temperley-Lieb algebra, loop value d = sqrt(3)")
    print("=" * 50)
    for label, fam in (("nearest (parafermion pairs)", nearest_family(ps)),
                       ("localized (two-qutrit stencil)", localized_family(4))):
        rep = verify_tl_algebra(fam, tol=1e-12)
        print(f"  {label}: {len(rep.checks)} checks, "
              f"max residual {rep.max_residual:.2e}, pass = {rep.passed}")

    t1 = tl_nearest(ps, 1)
    print("\nIdempotency of T_1 (nearest family):")
    print(f"  ||T_1^2 - sqrt3 T_1||_F = "
          f"{np.linalg.norm(t1 @ t1 - SQRT3 * t1):.2e}")

    b12 = braid_from_tl(tl_nearest(ps, 1))
    b23 = braid_from_tl(tl_nearest(ps, 2))
    print("\nBraid generators from the nearest family:")
    print(f"  ||B_12 - literal||_F = {np.linalg.norm(b12 - B12_LITERAL):.2e}")
    print(f"  ||B_23 - literal||_F = {np.linalg.norm(b23 - B23_LITERAL):.2e}")
    print(f"  braid relation residual = {verify_braid_relation(b12, b23):.2e}")
    print(f"  unitarity ||B B^dag - I||_F = "
          f"{np.linalg.norm(b12 @ b12.conj().T - np.eye(9)):.2e}")
    print("  B_12 is diagonal with phases e^{+-i pi/3}:")
    print("   ", np.round(np.angle(np.diag(b12)) * 3 / np.pi, 10), "(x pi/3)")

    print("\nLocalized family on 4 qutrit sites:")
    tp1, tp3 = tl_localized(4, 1), tl_localized(4, 3)
    print(f"  far commutation ||[T'_1, T'_3]||_F = "
          f"{np.linalg.norm(tp1 @ tp3 - tp3 @ tp1):.2e}")
    bp1 = braid_from_tl(tl_localized(4, 1))
    bp2 = braid_from_tl(tl_localized(4, 2))
    print(f"  braid relation residual (B'_1, B'_2) = "
          f"{verify_braid_relation(bp1, bp2):.2e}")

if __name__ == "__main__":
    main()
