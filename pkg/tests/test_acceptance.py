"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import json
import subprocess
import sys
import time

import pytest

from twisthom import verify
from twisthom.confighom import CoeffSystem, ConfigSpaceSpec, Space, Variant, config_homology
from twisthom.series import euler_char, poincare_dual_check
from twisthom.specseq import Degeneration, build_e1, degeneration_status, wedge_support_check


@pytest.fixture
def report(capsys):
    def emit(n, title, ok, detail=""):
        with capsys.disabled():
            print("\nACCEPTANCE %d %s: %s%s" % (n, "PASS" if ok else "FAIL", title, (" (%s)" % detail) if detail else ""))
        return ok
    return emit


def _failed(results):
    return [r.case_id for r in results if not r.verdict]


def test_criterion_1_tables(report):
    start = time.perf_counter()
    res = [r for r in verify.check_tables(40) if r.case_id.startswith("1-")]
    elapsed = time.perf_counter() - start
    bad = _failed(res)
    ok = not bad and len(res) >= 60 and elapsed < 10
    assert report(1, "table closed forms equal first-page totals to degree 40", ok,
                  "%d cases, %.2fs, failed %s" % (len(res), elapsed, bad[:5]))


def test_criterion_2_lens(report):
    res = [r for r in verify.check_lens(40) if r.case_id.startswith("2-")]
    bad = _failed(res)
    r2 = [r for r in res if r.case_id.startswith("2-r2/")]
    ok = not bad and len(r2) > 0
    assert report(2, "equivariant lens family and its r = 2 coincidences", ok,
                  "%d cases, %d r=2 comparisons, failed %s" % (len(res), len(r2), bad[:5]))


def test_criterion_3_euler(report):
    start = time.perf_counter()
    res = verify.check_euler(max_N=10, oracle_max_N=8)
    elapsed = time.perf_counter() - start
    bad = _failed(res)
    triples = [r for r in res if "oracle_route" in r.route_values]
    places = [r for r in res if r.case_id.startswith("3-places/")]
    ok = not bad and elapsed < 30 and triples and places
    assert report(3, "horizontal Euler characteristics by sum, closed form and permutation count", ok,
                  "%d cases, %.2fs, failed %s" % (len(res), elapsed, bad[:5]))


def test_criterion_4_phi(report):
    res = verify.check_phi(max_N=8, ms=(1, 3, 5))
    bad = _failed(res)
    assert report(4, "fiber Poincaré polynomial by two routes, total (N-1)!", not bad and len(res) == 12,
                  "%d cases, failed %s" % (len(res), bad))


def test_criterion_5_partitions(report):
    res = verify.check_partitions(max_n=6)
    bad = _failed(res)
    d2 = all(r.route_values["d2_zero"] for r in res)
    # 12; 1234 and three 2+2 splits; 123456, fifteen 2+4 and fifteen 2+2+2 splits
    ok = not bad and d2 and len(res) == 1 + 4 + 31
    assert report(5, "relative homology of partition order complexes equals block weights", ok,
                  "%d partitions, failed %s" % (len(res), bad))


def test_criterion_6_duality_euler(report):
    bad = []
    n = 0
    for N in range(2, 11, 2):
        for m in (1, 3, 5, 7):
            hom = config_homology(ConfigSpaceSpec(Space.PROJ, m, N, coeff=CoeffSystem.THETA_TILDE_SIGN,
                                                  variant=Variant.HOMOLOGY))
            bm = config_homology(ConfigSpaceSpec(Space.PROJ, m, N, coeff=CoeffSystem.THETA_TILDE,
                                                 variant=Variant.BOREL_MOORE))
            n += 1
            if not poincare_dual_check(hom.poincare(), bm.poincare(), m * N) or euler_char(hom.poincare()) != 0:
                bad.append((m, N))
    res = verify.check_duality_euler()
    bad += _failed(res)
    assert report(6, "Poincaré duality and vanishing Euler characteristics", not bad,
                  "%d duality pairs, %d suite cases, failed %s" % (n, len(res), bad[:5]))


def test_criterion_7_leray(report):
    res = verify.check_leray(40)
    rows = {r.case_id.split("/")[1] for r in res}
    bad = _failed(res)
    ok = not bad and len(rows) == 12
    assert report(7, "d^M pairs reconcile fiber and free-space series", ok,
                  "%d rows, %d cases, failed %s" % (len(rows), len(res), bad[:5]))


def test_criterion_8_structure(report):
    bad = []
    pages = 0
    for spec in verify.table_specs() + verify.lens_specs():
        page = build_e1(spec)
        pages += 1
        if not wedge_support_check(page) or degeneration_status(page) is Degeneration.UNKNOWN:
            bad.append(spec.case_id)
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "twisthom", "verify-all", "-T", "40", "--json"],
                          capture_output=True, text=True, timeout=120)
    elapsed = time.perf_counter() - start
    summary = json.loads(proc.stdout)["summary"] if proc.returncode in (0, 1) else None
    ok = not bad and proc.returncode == 0 and elapsed < 60 and summary and summary["failed"] == 0
    assert report(8, "wedge support, degeneration and verify-all", ok,
                  "%d pages, verify-all exit %d in %.1fs, summary %s" % (pages, proc.returncode, elapsed, summary))
