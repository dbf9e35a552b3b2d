"""Command-line front end: analyze, squeeze, scan, verify, random.

Input documents are JSON with either a "matrix" key (4x4 row-major
array) or a "standard_form" key ({a, b, c1, c2}).  Verdicts are carried
on the exit code: 0 separable, 1 entangled, 2 unphysical, 3 parse
error.
"""

import argparse
import json
import sys

import numpy as np

from . import covariance, criteria, duan, linalg, oracle, squeezing
from .covariance import CovarianceMatrix, StandardForm
from .criteria import (BOUNDARY, ENTANGLED, SEPARABLE, UNPHYSICAL, RayQuery,
                       analytic_bound, f_quartic, prep_eigensystem,
                       separability_verdict, simon_margins,
                       standard_form_physical)
from .oracle import RandomSpec, SplitMix64, numeric_c1_bound, random_standard_form
from .squeezing import analytic_squeeze, boundary_identity, r2_of_r1

EXIT_SEPARABLE = 0
EXIT_ENTANGLED = 1
EXIT_UNPHYSICAL = 2
EXIT_PARSE_ERROR = 3

_MATRIX_SYM_TOL = 1e-9


class ParseError(ValueError):
    pass


def _fmt(x):
    return f"{float(x):.17g}"


def _load_document(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read input document: {exc}") from exc


def _parse_state(doc):
    """Return (CovarianceMatrix or None, StandardForm or None)."""
    if not isinstance(doc, dict):
        raise ParseError("input document must be a JSON object")
    if "matrix" in doc:
        try:
            m = np.array(doc["matrix"], dtype=float)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"matrix field: {exc}") from exc
        if m.shape != (4, 4):
            raise ParseError(f"matrix must be 4x4, got shape {m.shape}")
        asym = np.abs(m - m.T).max()
        if asym > _MATRIX_SYM_TOL * (1.0 + np.abs(m).max()):
            raise ParseError(f"matrix asymmetry {asym} exceeds tolerance")
        try:
            return CovarianceMatrix(0.5 * (m + m.T)), None
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    if "standard_form" in doc:
        sf = doc["standard_form"]
        try:
            return None, StandardForm(float(sf["a"]), float(sf["b"]),
                                      float(sf["c1"]), float(sf["c2"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"standard_form field: {exc}") from exc
    raise ParseError('document needs a "matrix" or "standard_form" key')


def run_analyze(doc, tol=1e-9):
    """Full pipeline: reduce, classify, squeeze, P-rep check, Duan root.

    Returns (report dict, exit code).
    """
    v, sf = _parse_state(doc)
    echo = doc
    if sf is None:
        try:
            sf = covariance.to_standard_form(v, tol)
        except (covariance.NonPhysicalBlocks,
                covariance.InconsistentInvariants) as exc:
            report = {"input": echo, "verdict": {"classification": UNPHYSICAL},
                      "error": str(exc)}
            return report, EXIT_UNPHYSICAL

    verdict = separability_verdict(sf, tol)
    report = {
        "input": echo,
        "standard_form": {"a": sf.a, "b": sf.b, "c1": sf.c1, "c2": sf.c2},
        "verdict": {"classification": verdict.classification,
                    "det_margin": verdict.det_margin,
                    "weak_margin": verdict.weak_margin},
    }
    if verdict.classification == UNPHYSICAL:
        return report, EXIT_UNPHYSICAL

    t = sf.t
    q = RayQuery(sf.a, sf.b, t)
    r = analytic_squeeze(q)
    prep = prep_eigensystem(sf, r, tol)
    report["t"] = t
    report["squeeze"] = {"r1": float(r.r1), "r2": float(r.r2)}
    report["prep"] = {
        "lambda1_plus": prep.lambda1_plus, "lambda1_minus": prep.lambda1_minus,
        "lambda2_plus": prep.lambda2_plus, "lambda2_minus": prep.lambda2_minus,
        "feasible": prep.feasible,
    }
    if verdict.classification in (SEPARABLE, BOUNDARY):
        report["duan_root"] = duan.duan_root(sf)
        return report, EXIT_SEPARABLE
    report["duan_root"] = None
    return report, EXIT_ENTANGLED


def run_scan(a, b, steps):
    """Rows (t, c1_max, c2_max, r1, r2, identity_residual) over [0, 1]."""
    if steps < 2:
        raise ValueError("steps must be >= 2")
    rows = []
    for t in np.linspace(0.0, 1.0, steps):
        t = float(t)
        q = RayQuery(a, b, t)
        c1sq, c2sq = analytic_bound(q)
        r = analytic_squeeze(q)
        if t > 0.0:
            vals = [float(x) for x in boundary_identity(q)]
            resid = max(vals) - min(vals)
        else:
            resid = 0.0  # limit-branch convention
        rows.append({"t": t, "c1_max": float(np.sqrt(c1sq)),
                     "c2_max": float(np.sqrt(c2sq)),
                     "r1": float(r.r1), "r2": float(r.r2),
                     "identity_residual": resid})
    return rows


def _check(name, residual, threshold):
    return {"name": name, "max_residual": float(residual),
            "threshold": float(threshold),
            "passed": bool(residual <= threshold)}


def verification_suite(grid=20, samples=2000, seed=42):
    """Run every module invariant; returns a list of named check results."""
    results = []
    av = np.linspace(0.5, 10.0, grid)
    a3, b3, t3 = np.meshgrid(av, av, np.linspace(0.0, 1.0, grid),
                             indexing="ij")
    tpos = t3 > 0.0
    q_all = RayQuery(a3, b3, t3)
    q_pos = RayQuery(a3[tpos], b3[tpos], t3[tpos])

    # Boundary-coincidence identity on t > 0.
    outer, inner, rhs = squeezing.boundary_identity(q_pos)
    dev = np.maximum(np.abs(outer - rhs), np.abs(inner - rhs)) / (1.0 + rhs)
    results.append(_check("boundary_identity", dev.max(), 1e-10))

    # The square-root form is checked on a, b > 1/2: at the edge the
    # bound is exactly 0 and sqrt turns double-precision zeros into
    # sqrt(eps)-sized values, which is a conditioning fact, not an error.
    mi = tpos & (a3 > 0.5) & (b3 > 0.5)
    t1, t2v, t3v = squeezing.sqrt_identity(RayQuery(a3[mi], b3[mi], t3[mi]))
    dev = np.maximum(np.abs(t1 - t3v), np.abs(t2v - t3v)) / (1.0 + t3v)
    results.append(_check("sqrt_identity", dev.max(), 1e-10))

    # Squeezer range and t = 0 / t = 1 endpoints.
    r = squeezing.analytic_squeeze(q_all)
    viol = max(float((1.0 - r.r1).max()), float((1.0 - r.r2).max()),
               float(((r.r1 - 2.0 * a3) / (1.0 + 2.0 * a3)).max()),
               float(((r.r2 - 2.0 * b3) / (1.0 + 2.0 * b3)).max()))
    q0 = RayQuery(a3[..., 0], b3[..., 0], np.zeros_like(a3[..., 0]))
    q1 = RayQuery(a3[..., 0], b3[..., 0], np.ones_like(a3[..., 0]))
    r0 = squeezing.analytic_squeeze(q0)
    r1e = squeezing.analytic_squeeze(q1)
    end = max(float((np.abs(r0.r1 - 2 * a3[..., 0]) / (1 + 2 * a3[..., 0])).max()),
              float((np.abs(r0.r2 - 2 * b3[..., 0]) / (1 + 2 * b3[..., 0])).max()),
              float(np.abs(r1e.r1 - 1.0).max()), float(np.abs(r1e.r2 - 1.0).max()))
    results.append(_check("squeeze_range", max(viol, end), 1e-12))

    rp = squeezing.analytic_squeeze(q_pos)
    ratio = min(float((rp.r1 / q_pos.t).min()), float((rp.r2 / q_pos.t).min()))
    results.append(_check("squeeze_ratio_bound", max(0.0, 1.0 - ratio), 1e-12))

    # r2(r1) consistency and a <-> b symmetry.  a = 1/2 is excluded: the
    # stationarity curve degenerates there (r1 is pinned to 1 and every
    # r2 is stationary), so r2_of_r1 returns the conventional value 1.
    nd = a3 > 0.5
    r2c = squeezing.r2_of_r1(a3[nd], b3[nd], np.minimum(r.r1[nd], 2.0 * a3[nd]))
    results.append(_check("r2_of_r1_consistency",
                          np.abs(r2c - r.r2[nd]).max(), 1e-9))
    r_sw = squeezing.analytic_squeeze(RayQuery(b3, a3, t3))
    sym = max(float(np.abs(r_sw.r1 - r.r2).max()),
              float(np.abs(r_sw.r2 - r.r1).max()))
    results.append(_check("squeeze_symmetry", sym, 1e-12))

    # Analytic bound vs quartic-bisection oracle, plus consistency checks.
    bound = analytic_bound(q_all)[0]
    numeric = numeric_c1_bound(q_all)
    results.append(_check("bound_vs_numeric", np.abs(bound - numeric).max(), 1e-8))
    fb = f_quartic(bound, q_all)
    scale = 1.0 + (a3 * b3) ** 2
    results.append(_check("bound_on_quartic", (np.abs(fb) / scale).max(), 1e-9))
    weaker = (2 * a3 - 1) * (2 * b3 - 1) / (1 + t3) ** 2
    results.append(_check("weaker_dominance", (bound - weaker).max(), 1e-12))
    interior = (a3 > 0.5) & (b3 > 0.5) & (t3 < 1.0)
    fw = f_quartic(weaker, q_all)
    neg = float(fw[interior].max()) if interior.any() else 0.0
    at_one = float((np.abs(fw) / scale)[t3 == 1.0].max())
    results.append(_check("quartic_negativity", max(neg, 0.0), 0.0))
    results.append(_check("quartic_zero_at_t1", at_one, 1e-9))

    # Stationarity residuals at the analytic solution (scalar spot grid).
    res = 0.0
    for aa in np.linspace(0.5, 10.0, 7):
        for bb in np.linspace(0.5, 10.0, 7):
            for tt in np.linspace(0.1, 1.0, 7):
                qq = RayQuery(float(aa), float(bb), float(tt))
                triple = squeezing.stationarity_residuals(
                    qq, squeezing.analytic_squeeze(qq))
                res = max(res, max(abs(x) for x in triple))
    results.append(_check("stationarity_residuals", res, 1e-10))

    rng = SplitMix64(seed)
    spec = RandomSpec(seed=seed, a_range=(0.5, 5.0), b_range=(0.5, 5.0),
                      fraction_boundary=0.1)

    # Verdict vs the PPT eigenvalue check, outside the margin band.
    sfs = []
    for i in range(samples):
        mode = ("separable", "entangled", "weak_violating")[i % 3]
        sfs.append(random_standard_form(spec, rng, mode))
    emb = np.empty((len(sfs), 8, 8))
    omega = np.zeros((4, 4))
    omega[:2, :2] = covariance.SYMPLECTIC_J
    omega[2:, 2:] = -covariance.SYMPLECTIC_J
    omega *= 0.5
    for i, sf in enumerate(sfs):
        m = CovarianceMatrix.from_standard_form(sf).matrix
        emb[i, :4, :4] = m
        emb[i, 4:, 4:] = m
        emb[i, :4, 4:] = -omega
        emb[i, 4:, :4] = omega
    eig = linalg.jacobi_eigenvalues(emb)
    ppt_ok = eig[:, 0] >= -1e-9 * (1.0 + np.abs(eig[:, -1]))
    disagree = 0
    for sf, ok in zip(sfs, ppt_ok):
        verdict = separability_verdict(sf)
        if min(abs(verdict.det_margin), abs(verdict.weak_margin)) <= 1e-8:
            continue
        if (verdict.classification == SEPARABLE) != bool(ok):
            disagree += 1
    results.append(_check("verdict_vs_ppt", disagree, 0))

    # Closed-form physicality agrees with the matrix uncertainty check.
    mismatch = 0
    sub_rng = SplitMix64(seed + 1)
    for i in range(min(samples, 300)):
        mode = ("separable", "entangled", "boundary")[i % 3]
        sf = random_standard_form(spec, sub_rng, mode)
        v = CovarianceMatrix.from_standard_form(sf)
        if standard_form_physical(sf) != covariance.uncertainty_check(v):
            mismatch += 1
    results.append(_check("physicality_closed_form", mismatch, 0))

    # P-representation feasibility at the analytic squeezers.
    worst = 0.0
    for i in range(samples):
        mode = ("separable", "entangled", "boundary")[i % 3]
        sf = random_standard_form(spec, rng, mode)
        qv = RayQuery(sf.a, sf.b, sf.t)
        prep = prep_eigensystem(sf, analytic_squeeze(qv))
        if mode == "separable" and not prep.feasible:
            worst = max(worst, -prep.min_lambda())
        elif mode == "entangled" and prep.feasible:
            worst = max(worst, 1.0)
        elif mode == "boundary":
            worst = max(worst, abs(prep.min_lambda()))
    results.append(_check("prep_at_analytic_squeezers", worst, 1e-8))

    # Standard-form reduction under random local symplectics.
    worst = 0.0
    for i in range(samples):
        mode = ("separable", "entangled")[i % 2]
        sf = random_standard_form(spec, rng, mode)
        v = CovarianceMatrix.from_standard_form(sf)
        s = oracle.random_local_symplectic(rng)
        back = covariance.to_standard_form(covariance.apply_local_symplectic(v, s))
        worst = max(worst, abs(back.a - sf.a), abs(back.b - sf.b),
                    abs(back.c1 - sf.c1), abs(back.c2 - sf.c2))
    results.append(_check("standard_form_roundtrip", worst, 1e-8))

    # Duan chain: sign pattern and root location.
    worst = 0.0
    for _ in range(max(samples // 2, 1)):
        sf = random_standard_form(spec, rng, "separable")
        worst = max(worst, -duan.duan_f(sf, 1.0))
        r1a = float(analytic_squeeze(RayQuery(sf.a, sf.b, sf.t)).r1)
        worst = max(worst, duan.duan_f(sf, r1a))
        root = duan.duan_root(sf)
        if not 1.0 - 1e-9 <= root <= 2.0 * sf.a + 1e-9:
            worst = max(worst, 1.0)
        worst = max(worst, abs(duan.duan_f(sf, root)) - 1e-10)
    results.append(_check("duan_chain", worst, 1e-10))

    # Condition-(6) probes.
    worst = 0.0
    n_states = max(min(samples // 20, 100), 5)
    for _ in range(n_states):
        sf = random_standard_form(spec, rng, "prep")
        v = CovarianceMatrix.from_standard_form(sf)
        worst = max(worst, -oracle.condition6_probe(v, 500, rng))
    results.append(_check("condition6_prep_nonnegative", worst, 1e-9))
    worst = 0.0
    for _ in range(n_states):
        sf = random_standard_form(spec, rng, "weak_violating")
        v = CovarianceMatrix.from_standard_form(sf)
        if oracle.condition6_probe(v, 100, rng) >= 0.0:
            worst = 1.0
    results.append(_check("condition6_detects_weak_violation", worst, 0))

    # Seeded determinism.
    g1, g2 = SplitMix64(seed), SplitMix64(seed)
    same = all(g1.next_u64() == g2.next_u64() for _ in range(100))
    same = same and np.array_equal(SplitMix64(seed).uniform_array((64,)),
                                   SplitMix64(seed).uniform_array((64,)))
    results.append(_check("rng_determinism", 0.0 if same else 1.0, 0))

    return results


def _emit_analyze(report, fmt, out):
    if fmt == "text":
        verdict = report["verdict"]
        print(f"classification: {verdict['classification']}", file=out)
        for key in ("det_margin", "weak_margin"):
            if key in verdict and verdict[key] == verdict[key]:
                print(f"{key}: {_fmt(verdict[key])}", file=out)
        if "standard_form" in report:
            sf = report["standard_form"]
            print("standard_form: "
                  + " ".join(f"{k}={_fmt(sf[k])}" for k in ("a", "b", "c1", "c2")),
                  file=out)
        if "squeeze" in report:
            print(f"r1={_fmt(report['squeeze']['r1'])} "
                  f"r2={_fmt(report['squeeze']['r2'])} t={_fmt(report['t'])}",
                  file=out)
            print(f"prep_feasible: {report['prep']['feasible']}", file=out)
        if report.get("duan_root") is not None:
            print(f"duan_root: {_fmt(report['duan_root'])}", file=out)
    else:
        json.dump(report, out, indent=2)
        out.write("\n")


def _emit_scan(rows, fmt, out):
    cols = ["t", "c1_max", "c2_max", "r1", "r2", "identity_residual"]
    if fmt == "csv":
        print(",".join(cols), file=out)
        for row in rows:
            print(",".join(_fmt(row[c]) for c in cols), file=out)
    elif fmt == "text":
        print("  ".join(f"{c:>22}" for c in cols), file=out)
        for row in rows:
            print("  ".join(f"{_fmt(row[c]):>22}" for c in cols), file=out)
    else:
        json.dump(rows, out, indent=2)
        out.write("\n")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cvsep",
        description="Separability analysis for two-mode Gaussian states")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a covariance matrix or "
                                       "standard form from a JSON document")
    p.add_argument("input", help="path to a JSON document, or - for stdin")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("squeeze", help="analytic squeezing parameters")
    p.add_argument("a", type=float)
    p.add_argument("b", type=float)
    p.add_argument("t", type=float)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("scan", help="tabulate bound and squeezers over t")
    p.add_argument("a", type=float)
    p.add_argument("b", type=float)
    p.add_argument("--steps", type=int, default=21)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--csv", action="store_const", dest="format", const="csv")

    p = sub.add_parser("verify", help="run the full self-verification suite")
    p.add_argument("--grid", type=int, default=20)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("random", help="emit random standard forms")
    p.add_argument("--spec", required=True,
                   help="path to a JSON RandomSpec document, or - for stdin")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--mode", default="separable",
                   choices=("separable", "boundary", "interior", "prep",
                            "entangled", "weak_violating"))
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    out = sys.stdout

    if args.command == "analyze":
        try:
            doc = _load_document(args.input)
            report, code = run_analyze(doc, args.tol)
        except ParseError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE_ERROR
        _emit_analyze(report, args.format, out)
        return code

    if args.command == "squeeze":
        try:
            q = RayQuery(args.a, args.b, args.t)
        except ValueError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE_ERROR
        r = analytic_squeeze(q)
        if args.format == "text":
            print(f"r1={_fmt(r.r1)} r2={_fmt(r.r2)}", file=out)
        else:
            json.dump({"a": args.a, "b": args.b, "t": args.t,
                       "r1": float(r.r1), "r2": float(r.r2)}, out, indent=2)
            out.write("\n")
        return 0

    if args.command == "scan":
        try:
            rows = run_scan(args.a, args.b, args.steps)
        except ValueError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE_ERROR
        _emit_scan(rows, args.format, out)
        return 0

    if args.command == "verify":
        results = verification_suite(args.grid, args.samples, args.seed)
        failures = 0
        for res in results:
            status = "PASS" if res["passed"] else "FAIL"
            failures += not res["passed"]
            print(f"{status} {res['name']}: max_residual={_fmt(res['max_residual'])}"
                  f" (threshold {_fmt(res['threshold'])})", file=out)
        print(f"{len(results) - failures}/{len(results)} invariants passed",
              file=out)
        return 0 if failures == 0 else 1

    if args.command == "random":
        try:
            doc = _load_document(args.spec)
            spec = RandomSpec(
                seed=int(doc.get("seed", 42)),
                a_range=tuple(doc.get("a_range", (0.5, 3.0))),
                b_range=tuple(doc.get("b_range", (0.5, 3.0))),
                t_range=tuple(doc.get("t_range", (0.0, 1.0))),
                fraction_boundary=float(doc.get("fraction_boundary", 0.0)))
        except (ParseError, TypeError, ValueError) as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE_ERROR
        rng = SplitMix64(spec.seed)
        samples = [random_standard_form(spec, rng, args.mode)
                   for _ in range(args.count)]
        json.dump([{"a": s.a, "b": s.b, "c1": s.c1, "c2": s.c2}
                   for s in samples], out, indent=2)
        out.write("\n")
        return 0

    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
