"""End-to-end acceptance checks. Each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` (or plain ``pytest``; the
lines are printed with output capture disabled either way).
"""

import time
from math import comb

import pytest

from binedge import cli
from binedge import dual
from binedge import sweep as sw
from binedge.graphs import Graph
from binedge.ideal import nonzerodivisor_check, strongly_free_check

pytestmark = pytest.mark.slow


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail, started):
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title} ({detail}; {time.perf_counter() - started:.1f}s)"
        with capsys.disabled():
            print("\n" + line)
    return emit


def _detail(summary):
    counts = ", ".join(f"{k}={v}" for k, v in summary.counts.items())
    return f"{summary.instances} graphs, {counts}, {len(summary.violations)} violations"


def test_1_groebner_cross_validation(report):
    t0 = time.perf_counter()
    summary = sw.sweep(5, ["gb"])
    ok = summary.ok and summary.counts["gb"] == 1 + 2 + 8 + 64 + 1024
    report(1, "combinatorial GB equals reduced Buchberger GB, all labeled n<=5, 4 labelings each",
           ok, _detail(summary), t0)
    assert ok, summary.violations[:5]


def test_2_quadratic_iff_closed(report):
    t0 = time.perf_counter()
    summary = sw.sweep(6, ["quadratic"], canonical=True)
    ok = summary.ok and summary.counts["quadratic"] == 1 + 2 + 4 + 11 + 34 + 156
    report(2, "quadratic GB for some labeling iff closed, n<=6 up to isomorphism",
           ok, _detail(summary), t0)
    assert ok, summary.violations[:5]


def test_3_cox_erskine(report):
    t0 = time.perf_counter()
    summary = sw.sweep(7, ["cox-erskine"], canonical=True)
    ok = summary.ok and summary.counts["cox-erskine"] == 1252
    report(3, "chordal, claw-free and narrow iff closed, n<=7 up to isomorphism",
           ok, _detail(summary), t0)
    assert ok, summary.violations[:5]


def test_4_cone_proposition(report):
    t0 = time.perf_counter()
    summary = sw.sweep(6, ["cone"])
    ok = summary.ok and summary.counts["cone"] == 33867
    report(4, "cone closed iff chordal with triangle-free Ind(G); cones have diameter <= 2 and are narrow, all labeled n<=6",
           ok, _detail(summary), t0)
    assert ok, summary.violations[:5]


def test_5_betti(report):
    t0 = time.perf_counter()
    summary = sw.sweep(5, ["betti"])
    examples = {
        "n=1": (dual.betti2_bruteforce(Graph(1)), 1),
        "P3": (dual.betti2_bruteforce(Graph(3, [(1, 2), (2, 3)])), 17),
        "K3": (dual.betti2_bruteforce(Graph(3, [(1, 2), (1, 3), (2, 3)])), 18),
    }
    ok = summary.ok and summary.counts["betti"] == 1099 and all(a == b for a, b in examples.values())
    shown = ", ".join(f"{k}->{v[0]}" for k, v in examples.items())
    report(5, "brute-force beta2 = C(2n,2)+|E| with explicit syzygy basis, all labeled n<=5",
           ok, f"{_detail(summary)}; {shown}", t0)
    assert ok, summary.violations[:5]


def test_6_dual(report):
    t0 = time.perf_counter()
    summary = sw.sweep(5, ["dual"])
    ok = summary.ok and summary.counts["dual"] == 1099
    report(6, "dual relations orthogonal, span dim C(2n+1,2)-|E|, equal to linear-system span, all labeled n<=5",
           ok, _detail(summary), t0)
    assert ok, summary.violations[:5]


def test_7_triangle_pendant_edge(report):
    t0 = time.perf_counter()
    g = Graph(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
    nzd = nonzerodivisor_check(g, (2, 4), N=10)
    sf = strongly_free_check(g, (2, 4), N=10)
    ok = not nzd.holds and not sf.holds
    report(7, "triangle plus pendant with new edge {2,4}: neither nonzerodivisor nor strongly free",
           ok, f"nzd={nzd.holds} (differs at degree {nzd.first_difference}), "
               f"strongly_free={sf.holds} (differs at degree {sf.first_difference}), N=10", t0)
    assert ok


def test_8_gluing(report):
    t0 = time.perf_counter()
    summary = sw.gluing_sweep(5)
    ok = not summary.violations and summary.gluings > 0
    verdicts = ", ".join(f"{k}={v}" for k, v in sorted(summary.verdicts.items()))
    report(8, "gluing closed graphs (n<=5 each) at free vertices never yields a No verdict",
           ok, f"{summary.pairs} pairs, {summary.gluings} gluings, {summary.distinct} distinct; {verdicts}",
           t0)
    assert ok, summary.violations[:5]


def test_9_negative_controls(report, monkeypatch, capsys):
    t0 = time.perf_counter()
    g = Graph(2, [(1, 2)])
    rels = dual.dual_generators(g)
    edge = rels[-1]
    flipped = tuple((ab, -c if k == 0 else c) for k, (ab, c) in enumerate(edge.terms))
    corrupted = rels[:-1] + [dual.NCQuadraticRelation(edge.nletters, flipped)]
    orth_fails = not dual.verify_orthogonality(g, corrupted).all_orthogonal

    # the real quadratic check, fed a predicate that inverts every verdict
    real = sw.is_quadratic_basis
    monkeypatch.setattr(sw, "is_quadratic_basis", lambda basis: not real(basis))
    code = cli.main(["sweep", "--nmax", "3", "--checks", "quadratic"])
    out = capsys.readouterr().out
    n_viol = int(out.split("violations: ")[1].split()[0])
    ok = orth_fails and code == 1 and n_viol > 0
    report(9, "corrupted dual relation fails orthogonality; broken sweep check exits 1",
           ok, f"orthogonality rejected={orth_fails}, sweep exit={code}, violations={n_viol}", t0)
    assert ok


def test_counts_match_formulas():
    # sanity for the expected totals used above
    assert sum(2 ** comb(n, 2) for n in range(1, 6)) == 1099
    assert sum(2 ** comb(n, 2) for n in range(1, 7)) == 33867
