"""Command line: classify, certify, verify, sweep, spheres.

Exit codes: 0 success / certified, 1 inconclusive or failed check,
2 usage error, 3 invalid input data.

Useful separations (12 digits): ln 3 = 1.098612288668 is critical for
orders (3, 3); ln(3 + 2 sqrt 2) = 1.762747174039 for (4, 4).
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import certify as cert
from .errors import ChypError, NumericallyAmbiguous
from .hermitian import as_matrix, is_group_element, unitarity_residual
from .isometries import IsometryClass, classify, eigenvalues, fixed_locus, order_of_elliptic
from .jsonio import complex_to_json, dumps, matrix_from_json
from .pairs import PairSpec, make_pair
from .spheres import bounding_spheres, containment_holds, isometric_sphere
from .hermitian import group_inverse
from .words import verify_freeness

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _add_spec_flags(p, delta=True):
    p.add_argument("--m", type=int, required=True, help="order of f")
    p.add_argument("--n", type=int, required=True, help="order of g")
    if delta:
        p.add_argument("--delta", type=float, required=True, help="separation of the fixed loci")
    p.add_argument("--phi", type=float, default=0.0, help="phase of omega^2 (radians)")
    p.add_argument("--kind-f", choices=["line", "point"], default="line")
    p.add_argument("--kind-g", choices=["line", "point"], default="line")


def _spec(args, delta=None) -> PairSpec:
    try:
        return PairSpec(args.m, args.n, args.delta if delta is None else delta,
                        args.phi, args.kind_f, args.kind_g)
    except ChypError as exc:
        raise UsageError(str(exc)) from exc


def _table(rows, out):
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        if isinstance(v, float):
            v = f"{v:.12g}"
        print(f"{k:<{width}}  {v}", file=out)


def cmd_classify(args, out) -> int:
    try:
        with open(args.matrix_file, encoding="utf-8") as fh:
            M = matrix_from_json(json.load(fh))
    except (OSError, ValueError) as exc:
        print(f"error: cannot read matrix: {exc}", file=sys.stderr)
        return EXIT_USAGE
    M = as_matrix(M)
    if not is_group_element(M):
        report = {
            "error": "not an element of SU(2,1)",
            "j_unitarity_residual": unitarity_residual(M),
            "det": complex_to_json(np.linalg.det(M)),
        }
        print(dumps(report), file=out)
        return EXIT_DATA
    try:
        cls = classify(M)
    except NumericallyAmbiguous as exc:
        print(dumps({"error": str(exc)}), file=out)
        return EXIT_DATA
    report = {
        "class": cls.value,
        "eigenvalues": [complex_to_json(x) for x in eigenvalues(M)],
    }
    if cls.is_elliptic or cls is IsometryClass.IDENTITY:
        report["order"] = order_of_elliptic(M, args.max_order)
    if cls in (IsometryClass.BOUNDARY_ELLIPTIC, IsometryClass.POINT_REFLECTION):
        report["fixed_locus"] = fixed_locus(M).to_json()
    print(dumps(report), file=out)
    return EXIT_OK


def cmd_certify(args, out) -> int:
    report = cert.certify_spec(_spec(args))
    if args.json:
        print(dumps(report.to_json()), file=out)
    else:
        d = report.to_json()
        d["kinds"] = "/".join(d["kinds"])
        _table(list(d.items()), out)
    return EXIT_OK if report.certified else EXIT_FAIL


def cmd_verify(args, out) -> int:
    if args.max_syllables < 1:
        raise UsageError("--max-syllables must be >= 1")
    spec = _spec(args)
    F, G = make_pair(spec)
    report = verify_freeness(F, G, spec.m, spec.n, args.max_syllables, args.tol,
                             record=args.dump_words is not None)
    if args.dump_words:
        with open(args.dump_words, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["word", "distance"])
            w.writerows((word, repr(d)) for word, d in report.distances)
    if args.json:
        print(dumps(report.to_json()), file=out)
    else:
        _table(list(report.to_json().items()), out)
    return EXIT_OK if report.all_nontrivial else EXIT_FAIL


def sweep_rows(args):
    if not args.delta_min < args.delta_max:
        raise UsageError("--delta-min must be below --delta-max")
    if args.steps < 2:
        raise UsageError("--steps must be >= 2")
    if args.delta_min <= 0:
        raise UsageError("--delta-min must be positive")
    grid = np.linspace(args.delta_min, args.delta_max, args.steps)
    return [cert.certify_spec(_spec(args, float(d))) for d in grid]


def sweep_summary(reports, m, n) -> dict:
    bracket = None
    for a, b in zip(reports, reports[1:]):
        if a.margin <= 0 < b.margin:
            bracket = [a.delta, b.delta]
            break
    return {"bracket": bracket, "critical_delta": cert.critical_delta(m, n)}


def cmd_sweep(args, out) -> int:
    reports = sweep_rows(args)
    summary = sweep_summary(reports, args.m, args.n)
    if args.out == "json":
        print(dumps({"rows": [r.to_json() for r in reports], "summary": summary}), file=out)
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(cert.CertificateReport.csv_fields)
        for r in reports:
            w.writerow([repr(x) if isinstance(x, float) else x for x in r.csv_row()])
        b = summary["bracket"]
        span = "none" if b is None else f"[{b[0]!r},{b[1]!r}]"
        print(f"# bracket={span} critical_delta={summary['critical_delta']!r}", file=out)
    return EXIT_OK


def sphere_report(spec: PairSpec) -> dict:
    F, G = make_pair(spec)
    r_f, r_g = bounding_spheres(spec.m, spec.n, spec.omega_abs)
    return {
        "I_f": isometric_sphere(F).to_json(),
        "I_f_inv": isometric_sphere(group_inverse(F)).to_json(),
        "I_g": isometric_sphere(G).to_json(),
        "I_g_inv": isometric_sphere(group_inverse(G)).to_json(),
        "r_f_star": r_f,
        "r_g_star": r_g,
        "containment": containment_holds(spec.m, spec.n, spec.omega_abs),
    }


def cmd_spheres(args, out) -> int:
    report = sphere_report(_spec(args))
    if args.json:
        print(dumps(report), file=out)
        return EXIT_OK
    rows = []
    for key in ("I_f", "I_f_inv", "I_g", "I_g_inv"):
        c = report[key]["center"]
        rows.append((key, f"center=({complex(*c['xi']):.6g}, {c['nu']:.12g}) radius={report[key]['radius']:.12g}"))
    rows += [(k, report[k]) for k in ("r_f_star", "r_g_star", "containment")]
    _table(rows, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chyp", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify an SU(2,1) matrix given as JSON")
    p.add_argument("matrix_file")
    p.add_argument("--max-order", type=int, default=1000)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("certify", help="test the free-product criterion for a generator pair")
    _add_spec_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="search reduced words for relations")
    _add_spec_flags(p)
    p.add_argument("--max-syllables", type=int, default=6)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--dump-words", metavar="CSV", help="write every word and its identity distance")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="certify over a grid of separations")
    _add_spec_flags(p, delta=False)
    p.add_argument("--delta-min", type=float, required=True)
    p.add_argument("--delta-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("spheres", help="isometric and bounding spheres of the pair")
    _add_spec_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spheres)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
