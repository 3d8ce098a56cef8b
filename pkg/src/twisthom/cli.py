"""
twisthom command line.

Exit codes: 0 success, 1 a verification failed, 2 invalid usage or a
request no known statement covers.
"""

from __future__ import annotations

import argparse
import sys

from . import confighom, partitions, resolution, series, specseq, verify
from .mapspaces import Family, MapSpaceSpec
from .report import ReportDocument

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _map_spec(args) -> MapSpaceSpec:
    return MapSpaceSpec(Family(args.family), args.m, args.M, args.based, args.r, args.s)


def _series_str(ps: series.PoincareSeries) -> str:
    return " ".join(str(c) for c in ps.coeffs)


def cmd_table(args) -> ReportDocument:
    spec = _map_spec(args)
    closed = series.table_closed_form(spec)
    want = series.expand(closed, args.T)
    doc = ReportDocument("table", {"case": spec.case_id, "T": args.T})
    routes = {"closed_form": closed.to_json(), "closed_form_text": str(closed), "expansion": list(want.coeffs)}
    verdict = True
    if args.verify:
        got = specseq.total_poincare(specseq.build_e1(spec, T=args.T), args.T)
        routes["e1_route"] = list(got.coeffs)
        verdict = got == want
    doc.add(spec.case_id, verdict, **routes)
    if not args.json:
        print("%s: %s" % (spec.case_id, closed))
        print("  closed form: %s" % _series_str(want))
        if args.verify:
            print("  E1 route:    %s" % " ".join(map(str, routes["e1_route"])))
            print("  equal: %s" % verdict)
    return doc


def cmd_e1(args) -> ReportDocument:
    spec = _map_spec(args)
    page = specseq.build_e1(spec, args.p_min, T=args.T)
    wedge = specseq.wedge_support_check(page)
    status = specseq.degeneration_status(page)
    doc = ReportDocument("e1", {"case": spec.case_id, "p_min": page.p_min, "T": args.T})
    doc.add(spec.case_id, wedge and status is not specseq.Degeneration.UNKNOWN,
            cells=page.to_json(), in_wedge=wedge, degeneration=status.value)
    if not args.json:
        print("%s, p >= %d" % (spec.case_id, page.p_min))
        for p, q, d in page.nonzero():
            print("  E1[%d, %d] = Q^%d" % (p, q, d))
        print("  in wedge: %s; degeneration: %s" % (wedge, status.value))
    return doc


def cmd_euler(args) -> ReportDocument:
    N = args.N
    if N % 2 or N < 2 or N > resolution.ORACLE_MAX_N:
        raise ValueError("N must be even and at most %d, got %d" % (resolution.ORACLE_MAX_N, N))
    doc = ReportDocument("euler", {"N": N})
    doc.extend([r for r in verify.check_euler(max_N=N) if r.case_id.startswith("3-euler/N%02d-" % N)])
    if not args.json:
        for r in doc.results:
            vals = ", ".join("%s=%d" % kv for kv in r.route_values.items())
            print("%s: %s  %s" % (r.case_id.split("/")[1], vals, "ok" if r.verdict else "MISMATCH"))
    return doc


def cmd_oracle(args) -> ReportDocument:
    a = partitions.SetPartition.parse(args.partition)
    h = partitions.relative_partition_homology(a, args.include_discrete)
    weight = partitions.partition_weight(a)
    mu = partitions.mobius(a)
    expected = {} if args.include_discrete else {a.n - a.k - 1: weight}
    # Hall's theorem: the relative Euler characteristic is -mu(discrete, A)
    mu_ok = h.euler_characteristic() == (0 if args.include_discrete else -mu)
    doc = ReportDocument("oracle", {"partition": a.to_json(), "include_discrete": args.include_discrete})
    doc.add(str(a), dict(h.items()) == expected and mu_ok,
            relative_homology=h.to_json(), weight=weight, mobius=mu)
    if not args.json:
        print("A = %s" % a)
        print("  H_*(Delta_A, dDelta_A) = %s" % h.to_json())
        print("  weight = %d, mobius = %d" % (weight, mu))
    return doc


def _coeff(args) -> confighom.CoeffSystem:
    C = confighom.CoeffSystem
    if args.sign:
        return C.SIGN
    if args.theta:
        return C.THETA if args.ordered else C.THETA_TILDE
    if args.theta_sign:
        return C.THETA_TILDE_SIGN
    if args.orientation:
        return C.OR
    return C.CONST


def cmd_confighom(args) -> ReportDocument:
    spec = confighom.ConfigSpaceSpec(
        confighom.Space(args.space), args.m, args.N, args.ordered, _coeff(args),
        confighom.Variant(args.variant), args.r,
    )
    dims = confighom.config_homology(spec)
    doc = ReportDocument("confighom", {"space": spec.label()})
    doc.add(spec.label(), True, dims=dims.to_json(), source=dims.source, extension=dims.extension)
    if not args.json:
        print("%s = %s" % (spec.label(), dims.to_json()))
        print("  from: %s%s" % (dims.source, " (extension)" if dims.extension else ""))
    return doc


def cmd_phi(args) -> ReportDocument:
    a = resolution.phi_poincare_closed(args.N, args.m)
    b = resolution.phi_poincare_from_euler(args.N, args.m)
    doc = ReportDocument("phi", {"N": args.N, "m": args.m})
    doc.add("N%d-m%d" % (args.N, args.m), a == b, closed=str(a), from_euler=str(b))
    if not args.json:
        print("closed:     %s" % a)
        print("from Euler: %s" % b)
    return doc


def cmd_leray(args) -> ReportDocument:
    spec = _map_spec(args).free()
    pairs = specseq.leray_dm_pairs(spec)
    fiber, total = specseq.fiber_closed_form(spec), specseq.total_closed_form(spec)
    try:
        ok, err = specseq.leray_verify(fiber, spec.M, pairs, total, args.T), None
    except ArithmeticError as exc:
        ok, err = False, str(exc)
    doc = ReportDocument("leray", {"case": spec.case_id, "T": args.T})
    routes = {"fiber": str(fiber), "total": str(total), "pairs": pairs.to_json()}
    if err:
        routes["error"] = err
    doc.add(spec.case_id, ok, **routes)
    if not args.json:
        desc = "none" if pairs.empty else "q = %d + %d s" % (pairs.start, pairs.step)
        print("%s: fiber %s, total %s" % (spec.case_id, fiber, total))
        print("  d^M pairs: %s; consistent: %s" % (desc, ok))
    return doc


def cmd_stable_range(args) -> ReportDocument:
    bound = series.stable_range_bound(args.k, args.n, args.d)
    doc = ReportDocument("stable-range", {"k": args.k, "n": args.n, "d": args.d})
    doc.add("k%d-n%d-d%d" % (args.k, args.n, args.d), True, bound=bound)
    if not args.json:
        print(bound)
    return doc


def cmd_verify_all(args) -> ReportDocument:
    doc = verify.run_all(args.T)
    if not args.json:
        for r in sorted(doc.failures(), key=lambda r: r.case_id):
            print("FAIL %s %s" % (r.case_id, r.route_values))
        s = doc.summary
        print("checked %d, passed %d, failed %d" % (s["checked"], s["passed"], s["failed"]))
    return doc


def _add_map_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("m", type=int)
    p.add_argument("M", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--based", dest="based", action="store_true", help="pointed maps")
    g.add_argument("--free", dest="based", action="store_false", help="free maps (default)")
    p.add_argument("--r", type=int, help="lens family: order of the root of unity")
    p.add_argument("--s", type=int, help="lens family: weight of the target action")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON report")
    common.add_argument("-T", type=int, default=series.DEFAULT_TRUNCATION, help="truncation degree (default 40)")

    ap = argparse.ArgumentParser(prog="twisthom", description="Rational cohomology of spaces of sphere maps.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="closed-form Poincaré series")
    _add_map_args(p)
    p.add_argument("--verify", action="store_true", help="also total the first page and compare")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("e1", parents=[common], help="first page of the resolution spectral sequence")
    _add_map_args(p)
    p.add_argument("--p-min", type=int, default=None)
    p.set_defaults(func=cmd_e1)

    p = sub.add_parser("euler", parents=[common], help="Euler characteristics of horizontal complexes")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("oracle", parents=[common], help="chain-level homology of a partition order complex")
    p.add_argument("partition", help="e.g. 12|34")
    p.add_argument("--include-discrete", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("confighom", parents=[common], help="twisted (co)homology of configuration spaces")
    p.add_argument("space", choices=[s.value for s in confighom.Space])
    p.add_argument("m", type=int)
    p.add_argument("N", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--ordered", action="store_true")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--sign", action="store_true")
    g.add_argument("--theta", action="store_true", help="Theta-tilde, or Theta with --ordered")
    g.add_argument("--theta-sign", action="store_true")
    g.add_argument("--or", dest="orientation", action="store_true")
    p.add_argument("--variant", choices=[v.value for v in confighom.Variant], default="cohomology")
    p.set_defaults(func=cmd_confighom)

    p = sub.add_parser("phi", parents=[common], help="fiber of I(RP^m, N) -> RP^m, two routes")
    p.add_argument("N", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("leray", parents=[common], help="d^M consistency of the evaluation fibration")
    _add_map_args(p)
    p.set_defaults(func=cmd_leray)

    p = sub.add_parser("stable-range", parents=[common], help="stable range of polynomial approximations")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_stable_range)

    p = sub.add_parser("verify-all", parents=[common], help="run every cross-check")
    p.set_defaults(func=cmd_verify_all)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.T < 0:
        print("error: -T must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        doc = args.func(args)
    except confighom.UncoveredCase as exc:
        print("uncovered: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, specseq.InsufficientDepth) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(doc.dumps())
    return EXIT_OK if doc.ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
