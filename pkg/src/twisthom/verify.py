"""
The full cross-check suite. Each ``check_*`` function returns a list of
case results; ``run_all`` collects them into one report.

Providers are looked up through their modules at call time so that a test
can swap one out and watch the suite fail.
"""

from __future__ import annotations

from math import factorial

from . import confighom, partitions, resolution, series, specseq
from .exactlinalg import ChainComplexError, homology_dims
from .mapspaces import Family, MapSpaceSpec
from .report import CaseResult, ReportDocument

MAX_M = 9


def table_specs() -> list[MapSpaceSpec]:
    out = []
    for fam in (Family.EVEN, Family.ODD, Family.GENERAL):
        for M in range(2, MAX_M + 1):
            for m in range(1, M):
                for based in (False, True):
                    out.append(MapSpaceSpec(fam, m, M, based))
    return out


def lens_specs(rs=(2, 3, 4, 6)) -> list[MapSpaceSpec]:
    out = []
    for r in rs:
        for s in range(1, r + 1):
            for M in range(3, MAX_M + 1, 2):
                for m in range(1, M, 2):
                    for based in (False, True):
                        out.append(MapSpaceSpec(Family.LENS, m, M, based, r, s))
    return out


def _e1_series(spec: MapSpaceSpec, T: int):
    page = specseq.build_e1(spec, T=T)
    return page, specseq.total_poincare(page, T)


def _structural(page, case_id: str) -> list[CaseResult]:
    wedge = specseq.wedge_support_check(page)
    status = specseq.degeneration_status(page)
    return [
        CaseResult("8-wedge/" + case_id, {"in_wedge": wedge}, wedge),
        CaseResult("8-degeneration/" + case_id, {"status": status.value},
                   status is not specseq.Degeneration.UNKNOWN),
    ]


def _compare_case(spec: MapSpaceSpec, T: int, prefix: str) -> list[CaseResult]:
    closed = series.table_closed_form(spec)
    want = series.expand(closed, T)
    try:
        page, got = _e1_series(spec, T)
    except (confighom.UncoveredCase, ValueError) as exc:
        return [CaseResult(prefix + spec.case_id, {"closed_form": str(closed), "error": str(exc)}, False)]
    res = CaseResult(
        prefix + spec.case_id,
        {"e1_route": list(got.coeffs), "closed_form": list(want.coeffs)},
        got == want,
    )
    return [res] + _structural(page, spec.case_id)


def check_tables(T: int = series.DEFAULT_TRUNCATION) -> list[CaseResult]:
    out = []
    for spec in table_specs():
        out += _compare_case(spec, T, "1-table/")
    return out


def check_lens(T: int = series.DEFAULT_TRUNCATION) -> list[CaseResult]:
    out = []
    for spec in lens_specs():
        out += _compare_case(spec, T, "2-lens/")
    # r = 2 reproduces even maps (s = 2) and odd maps (s = 1)
    for M in range(3, MAX_M + 1, 2):
        for m in range(1, M, 2):
            for based in (False, True):
                for s, fam in ((2, Family.EVEN), (1, Family.ODD)):
                    lens = MapSpaceSpec(Family.LENS, m, M, based, 2, s)
                    other = MapSpaceSpec(fam, m, M, based)
                    try:
                        a = _e1_series(lens, T)[1]
                        b = _e1_series(other, T)[1]
                    except (confighom.UncoveredCase, ValueError) as exc:
                        out.append(CaseResult("2-r2/" + lens.case_id, {"error": str(exc)}, False))
                        continue
                    out.append(CaseResult(
                        "2-r2/%s=%s" % (lens.case_id, other.case_id),
                        {"lens": list(a.coeffs), fam.value: list(b.coeffs)},
                        a == b,
                    ))
    return out


def check_euler(max_N: int = 10, oracle_max_N: int = 8) -> list[CaseResult]:
    out = []
    for N in range(2, max_N + 1, 2):
        for s in range(N // 2):
            routes = {
                "sum_route": resolution.horizontal_euler_sum(N, s),
                "closed_route": resolution.horizontal_euler_closed(N, s),
            }
            if N <= oracle_max_N:
                routes["oracle_route"] = resolution.permutation_oracle(N, s)
            out.append(CaseResult("3-euler/N%02d-s%d" % (N, s), routes, len(set(routes.values())) == 1))
        if N <= oracle_max_N:
            counts = resolution.place_choice_counts(N)
            for places, c in sorted(counts.items()):
                closed = resolution.combi_count(N, places)
                tag = "-".join(map(str, places)) or "none"
                out.append(CaseResult("3-places/N%02d-%s" % (N, tag), {"oracle": c, "closed": closed}, c == closed))
    return out


def check_phi(max_N: int = 8, ms=(1, 3, 5)) -> list[CaseResult]:
    out = []
    for N in range(2, max_N + 1, 2):
        for m in ms:
            a = resolution.phi_poincare_closed(N, m)
            b = resolution.phi_poincare_from_euler(N, m)
            total = sum(a.as_dict().values())
            out.append(CaseResult(
                "4-phi/N%d-m%d" % (N, m),
                {"closed": str(a), "from_euler": str(b), "coefficient_sum": total},
                a == b and total == factorial(N - 1),
            ))
    return out


def check_partitions(max_n: int = 6) -> list[CaseResult]:
    out = []
    for n in range(2, max_n + 1, 2):
        for k in range(1, n // 2 + 1):
            for a in partitions.enumerate_partitions(n, k, even_only=True):
                pair = partitions.order_complex_pair(a)
                try:
                    cx = pair.chain_complex(relative=True)
                    cx.check()
                    full = pair.chain_complex(relative=False)
                    full.check()
                    boundary_ok = True
                except ChainComplexError:
                    boundary_ok = False
                h = homology_dims(cx) if boundary_ok else None
                want = {n - k - 1: partitions.partition_weight(a)}
                got = dict(h.items()) if h is not None else None
                out.append(CaseResult(
                    "5-partition/%s" % a,
                    {"relative_homology": got, "weight": want, "d2_zero": boundary_ok},
                    boundary_ok and got == want,
                ))
    return out


def _dims(space, m, N, coeff, variant=confighom.Variant.COHOMOLOGY, r=None):
    return confighom.config_homology(confighom.ConfigSpaceSpec(space, m, N, coeff=coeff, variant=variant, r=r))


def check_duality_euler(max_N: int = 10, ms=(1, 3, 5, 7)) -> list[CaseResult]:
    S, C = confighom.Space, confighom.CoeffSystem
    out = []
    for N in range(2, max_N + 1, 2):
        for m in ms:
            hom = _dims(S.PROJ, m, N, C.THETA_TILDE_SIGN, confighom.Variant.HOMOLOGY)
            bm = _dims(S.PROJ, m, N, C.THETA_TILDE, confighom.Variant.BOREL_MOORE)
            ok = series.poincare_dual_check(hom.poincare(), bm.poincare(), m * N)
            out.append(CaseResult("6-duality/rp-m%d-N%02d" % (m, N),
                                  {"homology": hom.to_json(), "borel_moore": bm.to_json()}, ok))
            chi = series.euler_char(hom.poincare())
            out.append(CaseResult("6-euler/rp-theta-sign-m%d-N%02d" % (m, N), {"euler": chi}, chi == 0))
    for m in ms:
        for N in range(1, max_N + 1):
            for space, r in ((S.SPHERE, None), (S.PROJ, None), (S.LENS, 3), (S.LENS, 4)):
                tag = space.value + ("%d" % r if r else "")
                h = _dims(space, m, N, C.CONST, r=r)
                chi = h.euler_characteristic()
                out.append(CaseResult("6-euler/%s-const-m%d-N%02d" % (tag, m, N), {"euler": chi}, chi == 0))
                if N % 2:
                    h = _dims(space, m, N, C.SIGN, r=r)
                    chi = h.euler_characteristic()
                    out.append(CaseResult("6-euler/%s-sign-m%d-N%02d" % (tag, m, N), {"euler": chi}, chi == 0))
    return out


def check_leray(T: int = series.DEFAULT_TRUNCATION) -> list[CaseResult]:
    out = []
    for spec in table_specs():
        if spec.based:
            continue
        pairs = specseq.leray_dm_pairs(spec)
        row = "%s-%s%s" % (spec.family.value, "o" if spec.m % 2 else "e", "o" if spec.M % 2 else "e")
        try:
            ok = specseq.leray_verify(
                specseq.fiber_closed_form(spec), spec.M, pairs, specseq.total_closed_form(spec), T
            )
            detail = {"pairs": pairs.to_json()}
        except ArithmeticError as exc:
            ok, detail = False, {"pairs": pairs.to_json(), "error": str(exc)}
        out.append(CaseResult("7-leray/%s/%s" % (row, spec.case_id), detail, ok))
    return out


CHECKS = {
    "tables": check_tables,
    "lens": check_lens,
    "euler": check_euler,
    "phi": check_phi,
    "partitions": check_partitions,
    "duality": check_duality_euler,
    "leray": check_leray,
}


def run_all(T: int = series.DEFAULT_TRUNCATION) -> ReportDocument:
    doc = ReportDocument("verify-all", {"T": T})
    doc.extend(check_tables(T))
    doc.extend(check_lens(T))
    doc.extend(check_euler())
    doc.extend(check_phi())
    doc.extend(check_partitions())
    doc.extend(check_duality_euler())
    doc.extend(check_leray(T))
    return doc
