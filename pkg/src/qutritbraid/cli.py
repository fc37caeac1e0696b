"""Command-line front end.

Subcommands:
  verify     run the full identity suite, JSON report, exit 0 iff pass
  scan       theta sweep to CSV plus refined-extrema summary as JSON
  ybe-check  Yang-Baxter residuals for one constrained parameter pair
  sectors    parity-sector blocks of a chosen operator at a chosen theta
  jones      projection of the localized operators to the 2x2 references
  state      amplitudes / l1 / entropy of |Psi(theta)> as JSON

Exit codes: 0 = all checks pass, 1 = verification failure, 2 = usage or
I/O error.  All numeric output carries 12 significant digits.
"""

import argparse
import datetime
import json
import math
import sys

import numpy as np

from . import __version__
from .braid_tl import (B12_LITERAL, B23_LITERAL, braid_from_tl, localized_family,
                       nearest_family, tl_localized, tl_nearest,
                       verify_braid_relation, verify_tl_algebra)
from .entanglement import (entropy_schmidt, find_extrema, l1_norm,
                           partial_trace, psi_theta, sweep_theta,
                           von_neumann_entropy)
from .linalg import OMEGA, OMEGA2, SQRT3, identity
from .parafermion import build_parafermions, verify_parafermion_algebra
from .parity import (SECTORS, parity_operator, reduced_a12, reduced_a23,
                     sector_blocks)
from .report import AlgebraReport
from .topo import (PairStateKind, build_topological_basis, jones_reference,
                   pair_state, project_operator, tl_ketbra)
from .yangbaxter import YbeTriple, constrained_triple, r_matrix, theta2_of, ybe_residual

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _sig(x):
    """Round to 12 significant digits for stable, locale-free output."""
    return float(f"{float(x):.12g}")


def _complex_pair(z):
    return [_sig(z.real), _sig(z.imag)]


def _matrix_json(m):
    return [[_complex_pair(z) for z in row] for row in np.asarray(m)]


# Exact-constant table for --exact display snapping (display only).
def _exact_table():
    ent = {}

    def put(label, value):
        ent.setdefault(label, value)

    put("0", 0j)
    for s, pre in (("", 1), ("-", -1)):
        put(f"{s}1", pre * (1 + 0j))
        put(f"{s}i", pre * 1j)
        put(f"{s}w", pre * OMEGA)
        put(f"{s}w^2", pre * OMEGA2)
        put(f"{s}1/sqrt3", pre / SQRT3)
        put(f"{s}i/sqrt3", pre * 1j / SQRT3)
        put(f"{s}sqrt3", pre * SQRT3)
        put(f"{s}w/sqrt3", pre * OMEGA / SQRT3)
        put(f"{s}w^2/sqrt3", pre * OMEGA2 / SQRT3)
        put(f"{s}i*w/sqrt3", pre * 1j * OMEGA / SQRT3)
        put(f"{s}i*w^2/sqrt3", pre * 1j * OMEGA2 / SQRT3)
        for k in (1, 2, 3, 5, 6):
            put(f"{s}e^(i*pi*{k}/6)", pre * np.exp(1j * np.pi * k / 6))
            put(f"{s}e^(-i*pi*{k}/6)", pre * np.exp(-1j * np.pi * k / 6))
            put(f"{s}e^(i*pi*{k}/6)/sqrt3", pre * np.exp(1j * np.pi * k / 6) / SQRT3)
            put(f"{s}e^(-i*pi*{k}/6)/sqrt3", pre * np.exp(-1j * np.pi * k / 6) / SQRT3)
    return ent


_EXACT = _exact_table()


def _snap_exact(z):
    for label, value in _EXACT.items():
        if abs(z - value) < 1e-12:
            return label
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _matrix_exact(m):
    return [[_snap_exact(complex(z)) for z in row] for row in np.asarray(m)]


# --- verify ------------------------------------------------------------


def _run_verify(tol, seed):
    rep = AlgebraReport()
    rng = np.random.default_rng(seed)

    # 1. parafermion algebra, N = 2 and 3
    for n in (2, 3):
        sub = verify_parafermion_algebra(build_parafermions(n), tol)
        rep.add(f"parafermion algebra N={n} (max residual)", sub.max_residual, tol)

    # 2. T-L algebra, both families
    ps2 = build_parafermions(2)
    near = nearest_family(ps2)
    loc = localized_family(4)
    for fam, label in ((near, "nearest N=2"), (loc, "localized nsites=4")):
        sub = verify_tl_algebra(fam, tol)
        rep.add(f"T-L algebra {label} (max residual)", sub.max_residual, tol)

    # 3. braid relations
    braids = [braid_from_tl(t) for t in near.elements]
    for i in range(len(braids) - 1):
        rep.add(f"braid relation nearest (B{i + 1}, B{i + 2})",
                verify_braid_relation(braids[i], braids[i + 1]), tol)
    loc_braids = [braid_from_tl(t) for t in loc.elements]
    for i in range(len(loc_braids) - 1):
        rep.add(f"braid relation localized (B'{i + 1}, B'{i + 2})",
                verify_braid_relation(loc_braids[i], loc_braids[i + 1]), tol)

    # 4. literal matrix match
    b12, b23 = braids[0], braids[1]
    rep.add("B12 literal match", np.linalg.norm(b12 - B12_LITERAL), tol)
    rep.add("B23 literal match", np.linalg.norm(b23 - B23_LITERAL), tol)

    # 5. R-matrix unitarity on seeded random thetas
    eye9 = identity(9)
    worst = 0.0
    for theta in rng.uniform(0.0, math.pi, size=100):
        r = r_matrix(b23, theta)
        worst = max(worst, np.linalg.norm(r @ r.conj().T - eye9))
    rep.add("R(theta) unitarity, 100 random theta (max residual)", worst, tol)

    # 6. YBE residuals under the additivity constraint, plus negative control
    worst = 0.0
    for t1, t3 in rng.uniform(-1.4, 1.4, size=(100, 2)):
        worst = max(worst, ybe_residual(b12, b23, constrained_triple(t1, t3)))
    rep.add("YBE residual, 100 constrained triples (max)", worst, tol)
    neg = ybe_residual(b12, b23, YbeTriple(0.3, 0.3, 0.7))
    rep.add("YBE negative control (unconstrained theta2) exceeds 1e-3",
            0.0 if neg > 1e-3 else 1.0, tol)
    rep.notes["ybe_negative_control_residual"] = _sig(neg)

    # 7. parity commutation and sector match
    p = parity_operator()
    worst_comm, worst_a12, worst_a23, worst_leak = 0.0, 0.0, 0.0, 0.0
    for theta in rng.uniform(0.0, math.pi, size=20):
        r12, r23 = r_matrix(b12, theta), r_matrix(b23, theta)
        for r in (r12, r23):
            worst_comm = max(worst_comm, np.linalg.norm(r @ p - p @ r))
        d12, d23 = sector_blocks(r12), sector_blocks(r23)
        worst_leak = max(worst_leak, d12.leakage, d23.leakage)
        worst_a12 = max(worst_a12,
                        np.linalg.norm(d12.blocks["omega2"] - reduced_a12(theta)))
        worst_a23 = max(worst_a23,
                        np.linalg.norm(d23.blocks["omega2"] - reduced_a23(theta)))
    rep.add("[R, P] commutation, 20 theta (max)", worst_comm, tol)
    rep.add("sector decomposition leakage (max)", worst_leak, tol)
    rep.add("omega^2-sector block vs A12(theta) (max)", worst_a12, tol)
    rep.add("omega^2-sector block vs A23(theta) (max)", worst_a23, tol)
    a12b = sector_blocks(b12).blocks["omega2"]
    a23b = sector_blocks(b23).blocks["omega2"]
    worst = 0.0
    for t1, t3 in rng.uniform(-1.4, 1.4, size=(20, 2)):
        worst = max(worst, ybe_residual(a12b, a23b, constrained_triple(t1, t3)))
    rep.add("sector-level YBE residual, 20 constrained triples (max)", worst, tol)

    # 8. cross-construction equality of the localized T-L element
    stencil = tl_localized(2, 1)
    para_form = (identity(9) + OMEGA2 * (ps2.cdag(1) @ ps2.c(4))
                 + OMEGA2 * (ps2.c(1) @ ps2.cdag(4))) / SQRT3
    ketbra9 = np.zeros((9, 9), dtype=complex)
    for kind in PairStateKind:
        v = pair_state(kind, 1, 2, 2)
        ketbra9 += np.outer(v, v.conj())
    ketbra9 *= SQRT3
    rep.add("T' stencil vs parafermionic form", np.linalg.norm(stencil - para_form), tol)
    rep.add("T' stencil vs ket-bra form", np.linalg.norm(stencil - ketbra9), tol)

    # 9. topological basis orthonormality
    tb = build_topological_basis()
    gram = np.array([[np.vdot(a, b) for b in (tb.e1, tb.e2)] for a in (tb.e1, tb.e2)])
    rep.add("topological basis Gram matrix vs I2",
            np.linalg.norm(gram - np.eye(2)), tol)

    # 10. Jones reduction, all six projections
    for i in (1, 2, 3):
        tp = tl_ketbra(i)
        for kind, op in (("tl", tp), ("braid", braid_from_tl(tp))):
            mat, leak = project_operator(op, tb)
            ref = jones_reference(i, kind)
            rep.add(f"Jones reduction {kind} i={i}", np.linalg.norm(mat - ref), tol)
            rep.add(f"Jones reduction {kind} i={i} leakage", leak, tol)

    return rep


def cmd_verify(args):
    rep = _run_verify(args.tol, args.seed)
    out = {
        "command": "verify",
        "checks": [
            {"name": c.name, "residual": _sig(c.residual),
             "tolerance": _sig(c.tolerance), "pass": bool(c.passed)}
            for c in rep.checks
        ],
        "overall_pass": bool(rep.passed),
        "metadata": {
            "seed": args.seed,
            "tolerance": _sig(args.tol),
            "versions": {"qutritbraid": __version__, "numpy": np.__version__},
            "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        },
        "notes": rep.notes,
    }
    print(json.dumps(out, indent=2))
    return EXIT_PASS if rep.passed else EXIT_FAIL


# --- scan --------------------------------------------------------------


def cmd_scan(args):
    if not args.min < args.max:
        print("error: need --min < --max", file=sys.stderr)
        return EXIT_USAGE
    if args.steps < 2:
        print("error: need --steps >= 2", file=sys.stderr)
        return EXIT_USAGE
    samples = sweep_theta(args.min, args.max, args.steps)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("theta,l1_norm,entropy\n")
            for s in samples:
                fh.write(f"{s.theta:.12g},{s.l1:.12g},{s.entropy:.12g}\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    summary = {"command": "scan", "csv": args.out, "samples": args.steps}
    if len(samples) >= 3:
        rep = find_extrema(samples, args.refine_tol)
        summary["l1_extrema"] = [
            {"kind": e.kind, "theta": _sig(e.theta), "value": _sig(e.value)}
            for e in rep.l1_extrema]
        summary["entropy_extrema"] = [
            {"kind": e.kind, "theta": _sig(e.theta), "value": _sig(e.value)}
            for e in rep.entropy_extrema]
        summary["extremum_location_gaps"] = [_sig(g) for g in rep.location_gaps]
    print(json.dumps(summary, indent=2))
    return EXIT_PASS


# --- ybe-check ----------------------------------------------------------


def cmd_ybe_check(args):
    try:
        theta2 = theta2_of(args.theta1, args.theta3)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    triple = YbeTriple(args.theta1, theta2, args.theta3)
    # full check on a 3-qutrit register via the localized braid generators
    b1 = braid_from_tl(tl_localized(3, 1))
    b2 = braid_from_tl(tl_localized(3, 2))
    residual_full = ybe_residual(b1, b2, triple)
    # sector check with the reduced 3x3 matrices
    ps2 = build_parafermions(2)
    b12 = braid_from_tl(tl_nearest(ps2, 1))
    b23 = braid_from_tl(tl_nearest(ps2, 2))
    a12 = sector_blocks(b12).blocks["omega2"]
    a23 = sector_blocks(b23).blocks["omega2"]
    residual_sector = ybe_residual(a12, a23, triple)
    print(json.dumps({
        "command": "ybe-check",
        "theta1": _sig(args.theta1),
        "theta2": _sig(theta2),
        "theta3": _sig(args.theta3),
        "residual_full": _sig(residual_full),
        "residual_sector": _sig(residual_sector),
    }, indent=2))
    ok = residual_full < 1e-10 and residual_sector < 1e-10
    return EXIT_PASS if ok else EXIT_FAIL


# --- sectors ------------------------------------------------------------


def _sector_operand(name, theta):
    ps2 = build_parafermions(2)
    b12 = braid_from_tl(tl_nearest(ps2, 1))
    b23 = braid_from_tl(tl_nearest(ps2, 2))
    if name == "B12":
        return b12
    if name == "B23":
        return b23
    if name == "R12":
        return r_matrix(b12, theta)
    if name == "R23":
        return r_matrix(b23, theta)
    if name == "T":
        return tl_localized(2, 1)
    raise ValueError(name)


def cmd_sectors(args):
    op = _sector_operand(args.op, args.theta)
    dec = sector_blocks(op)
    blocks = {}
    for key, eig, labels, _ in SECTORS:
        m = dec.blocks[key]
        blocks[key] = {
            "parity_eigenvalue": _snap_exact(complex(eig)) if args.exact
            else _complex_pair(complex(eig)),
            "basis": [f"|{a}>" for a in labels],
            "matrix": _matrix_exact(m) if args.exact else _matrix_json(m),
        }
    print(json.dumps({
        "command": "sectors",
        "operator": args.op,
        "theta": _sig(args.theta),
        "leakage": _sig(dec.leakage),
        "blocks": blocks,
    }, indent=2))
    return EXIT_PASS


# --- jones ---------------------------------------------------------------


def cmd_jones(args):
    tb = build_topological_basis()
    results = []
    ok = True
    for i in (1, 2, 3):
        tp = tl_ketbra(i)
        for kind, op in (("tl", tp), ("braid", braid_from_tl(tp))):
            mat, leak = project_operator(op, tb)
            ref = jones_reference(i, kind)
            dist = float(np.linalg.norm(mat - ref))
            passed = dist < 1e-12 and leak < 1e-10
            ok = ok and passed
            results.append({
                "operator": f"{kind}_{i}",
                "projected_matrix": _matrix_json(mat),
                "reference_matrix": _matrix_json(ref),
                "frobenius_distance": _sig(dist),
                "leakage": _sig(leak),
                "pass": bool(passed),
            })
    print(json.dumps({"command": "jones", "results": results,
                      "overall_pass": bool(ok)}, indent=2))
    return EXIT_PASS if ok else EXIT_FAIL


# --- state ---------------------------------------------------------------


def cmd_state(args):
    st = psi_theta(args.theta)
    rho = partial_trace(st, 1)
    labels = [f"|{i}{j}>" for i in (1, 2, 3) for j in (1, 2, 3)]
    amps = {lab: _complex_pair(a) for lab, a in zip(labels, st.amplitudes)
            if abs(a) > 0}
    print(json.dumps({
        "command": "state",
        "theta": _sig(args.theta),
        "amplitudes": amps,
        "l1_norm": _sig(l1_norm(st)),
        "entropy_nats": _sig(von_neumann_entropy(rho)),
        "entropy_schmidt_nats": _sig(entropy_schmidt(st)),
        "entropy_base3": _sig(entropy_schmidt(st) / math.log(3)),
    }, indent=2))
    return EXIT_PASS


# --- parser --------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="qutritbraid",
        description="Verification suite for the Z3-parafermion braid "
                    "representation, its Yang-Baxterization and Jones reduction.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the full identity suite")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="theta sweep of l1-norm and entropy")
    p.add_argument("--min", type=float, required=True)
    p.add_argument("--max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--refine-tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("ybe-check", help="Yang-Baxter residuals for one pair")
    p.add_argument("--theta1", type=float, required=True)
    p.add_argument("--theta3", type=float, required=True)
    p.set_defaults(func=cmd_ybe_check)

    p = sub.add_parser("sectors", help="parity-sector blocks of an operator")
    p.add_argument("--op", choices=["R12", "R23", "B12", "B23", "T"], required=True)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--exact", action="store_true",
                   help="snap entries to exact constants for display")
    p.set_defaults(func=cmd_sectors)

    p = sub.add_parser("jones", help="2x2 Jones reduction report")
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("state", help="amplitudes and norms of |Psi(theta)>")
    p.add_argument("--theta", type=float, required=True)
    p.set_defaults(func=cmd_state)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
