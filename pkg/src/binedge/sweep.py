"""Exhaustive small-graph sweeps cross-checking every decision procedure
against an independent oracle."""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import closedness as cl
from . import dual
from . import graphs as gr
from .errors import CapacityError
from .ideal import build_ideal, combinatorial_gb, oracle_gb, quadratic_gb_labeling
from .poly import is_quadratic_basis

Check = Callable[[gr.Graph], list]


def random_labelings(g: gr.Graph, count: int = 3) -> list[tuple[int, ...]]:
    """Deterministic pseudo-random labelings keyed on the graph itself."""
    rng = random.Random(f"{g.n}:{gr.graph_mask(g)}")
    out = []
    for _ in range(count):
        perm = list(range(1, g.n + 1))
        rng.shuffle(perm)
        out.append(tuple(perm))
    return out


def check_gb(g: gr.Graph) -> list:
    problems = []
    for lab in [gr.identity_labeling(g.n)] + random_labelings(g):
        comb = combinatorial_gb(g, lab)
        ref = oracle_gb(g, lab)
        if comb != ref:
            problems.append(f"labeling {list(lab)}: combinatorial GB differs from Buchberger")
    return problems


def check_quadratic(g: gr.Graph) -> list:
    problems = []
    witness = cl.is_closed_search(g)
    quad = quadratic_gb_labeling(g)
    if (witness is None) != (quad is None):
        problems.append(f"closed labeling {witness} but quadratic-GB labeling {quad}")
    if witness is not None and not is_quadratic_basis(combinatorial_gb(g, witness)):
        problems.append(f"closed labeling {list(witness)} has a non-quadratic GB")
    return problems


def check_cox_erskine(g: gr.Graph) -> list:
    search = cl.is_closed_search(g) is not None
    fast = cl.is_closed_fast(g)
    if search != fast:
        return [f"labeling search says {search}, chordal/claw-free/narrow says {fast}"]
    return []


def check_cone(g: gr.Graph) -> list:
    problems = []
    c = gr.cone(g)
    closed = cl.is_closed_search(c) is not None
    status = cl.cone_koszul_classify(g)
    if closed != (status.verdict == cl.Verdict.YES):
        problems.append(f"cone closed={closed} but criterion gives {status.verdict.value}")
    if (gr.find_claw(c) is None) != (gr.independence_triangle(g) is None):
        problems.append("claw in cone does not match triangle in Ind(G)")
    if gr.is_chordal(c) != gr.is_chordal(g):
        problems.append("cone chordality differs from base chordality")
    dist = gr.distances(c)
    if any(d > 2 for row in dist.values() for d in row.values() if d != math.inf):
        problems.append("cone has diameter above 2")
    if not gr.is_narrow(c):
        problems.append("cone is not narrow")
    return problems


def check_betti(g: gr.Graph) -> list:
    cert = dual.explicit_syzygy_certificate(g)
    expected = dual.betti_formula(g).beta2
    problems = []
    if cert.kernel_dim != expected:
        problems.append(f"brute-force beta2={cert.kernel_dim}, formula gives {expected}")
    if not cert.spans_kernel:
        problems.append(f"explicit syzygies do not form a kernel basis: {cert}")
    return problems


def check_dual(g: gr.Graph) -> list:
    rels = dual.dual_generators(g)
    res = dual.verify_orthogonality(g, rels)
    problems = []
    if not res.all_orthogonal:
        problems.append("dual relations are not orthogonal to I_2")
    if res.span_dim != dual.expected_dual_count(g) or res.span_dim != res.expected_dim:
        problems.append(f"span dimension {res.span_dim}, expected {dual.expected_dual_count(g)}")
    if len(rels) != dual.expected_dual_count(g):
        problems.append(f"{len(rels)} relations listed, expected {dual.expected_dual_count(g)}")
    general = dual.dual_generators_general(build_ideal(g).generators, 2 * g.n)
    if not dual.same_relation_span(rels, general):
        problems.append("closed-form relations and linear-system relations span different spaces")
    return problems


def check_interval(g: gr.Graph) -> list:
    # labeling-wise, closed => interval only holds for connected graphs:
    # two disjoint edges {1,3}, {2,4} satisfy the closed condition vacuously
    problems = []
    connected = g.is_connected()
    any_closed = any_interval = False
    for perm in itertools.permutations(range(1, g.n + 1)):
        closed = cl.check_labeling_closed(g, perm)
        interval = cl.interval_facets_check(g, perm)
        any_closed |= closed
        any_interval |= interval
        if connected and closed and not interval:
            problems.append(f"closed labeling {list(perm)} has a non-interval facet")
    if any_closed != any_interval:
        problems.append(f"closed labeling exists: {any_closed}; interval labeling exists: {any_interval}")
    return problems


def check_koszul(g: gr.Graph) -> list:
    status = cl.koszul_classify(g)
    problems = []
    bad_shape = gr.find_claw(g) is not None or not gr.is_chordal(g)
    if status.verdict == cl.Verdict.YES and bad_shape:
        problems.append("classified Koszul despite a claw or long induced cycle")
    if status.verdict == cl.Verdict.NO and cl.is_closed_search(g) is not None:
        problems.append("closed graph classified non-Koszul")
    if status.verdict == cl.Verdict.YES and not cl.check_labeling_closed(g, status.witness):
        problems.append("Yes verdict without a valid closed labeling")
    return problems


CHECKS: dict[str, Check] = {
    "gb": check_gb,
    "quadratic": check_quadratic,
    "cox-erskine": check_cox_erskine,
    "cone": check_cone,
    "betti": check_betti,
    "dual": check_dual,
    "interval": check_interval,
    "koszul": check_koszul,
}

# per-check size limits on sweeps; beyond these an instance is skipped
CHECK_MAX_N = {
    "gb": 7,
    "quadratic": 7,
    "cox-erskine": cl.SEARCH_CAP,
    "cone": cl.SEARCH_CAP - 1,
    "betti": dual.BETTI_MAX_N,
    "dual": 7,
    "interval": 7,
    "koszul": 12,
}


@dataclass
class Violation:
    check: str
    graph: str
    message: str

    def as_dict(self) -> dict:
        return {"check": self.check, "graph": self.graph, "message": self.message}


@dataclass
class SweepSummary:
    nmax: int
    checks: list
    canonical: bool
    instances: int = 0
    counts: dict = field(default_factory=dict)
    skipped: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "nmax": self.nmax,
            "checks": list(self.checks),
            "canonical": self.canonical,
            "instances": self.instances,
            "counts": dict(sorted(self.counts.items())),
            "skipped": [v.as_dict() for v in self.skipped],
            "violations": [v.as_dict() for v in self.violations],
            "ok": self.ok,
        }


def _reproducer(g: gr.Graph) -> str:
    return gr.format_edge_list(g).strip().replace("\n", "; ")


def run_instance(g: gr.Graph, checks: Iterable[str], registry: Optional[dict] = None):
    """Run the named checks on one graph; returns (ran, skipped, violations)."""
    registry = CHECKS if registry is None else registry
    ran, skipped, violations = [], [], []
    for name in checks:
        if g.n > CHECK_MAX_N.get(name, g.n):
            skipped.append(Violation(name, _reproducer(g), f"n={g.n} above limit"))
            continue
        try:
            problems = registry[name](g)
        except CapacityError as exc:
            skipped.append(Violation(name, _reproducer(g), str(exc)))
            continue
        ran.append(name)
        violations.extend(Violation(name, _reproducer(g), msg) for msg in problems)
    return ran, skipped, violations


def _run_packed(args):
    g, checks = args
    return run_instance(g, checks)


def sweep(nmax: int, checks: Iterable[str], canonical: bool = False, parallelism: int = 1,
          nmin: int = 1, registry: Optional[dict] = None) -> SweepSummary:
    """Run ``checks`` on every graph with ``nmin <= n <= nmax``.

    Results are merged in instance order, so the summary does not depend on
    ``parallelism``. A custom ``registry`` forces serial execution.
    """
    checks = list(checks)
    reg = CHECKS if registry is None else registry
    unknown = [c for c in checks if c not in reg]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    summary = SweepSummary(nmax, checks, canonical)
    graphs = list(gr.graphs_up_to(nmax, canonical=canonical, nmin=nmin))
    if parallelism > 1 and registry is None:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(_run_packed, ((g, checks) for g in graphs), chunksize=16))
    else:
        results = [run_instance(g, checks, reg) for g in graphs]
    for ran, skipped, violations in results:
        summary.instances += 1
        for name in ran:
            summary.counts[name] = summary.counts.get(name, 0) + 1
        summary.skipped.extend(skipped)
        summary.violations.extend(violations)
    return summary


# ----------------------------------------------------------------- gluing


def closed_graphs(nmax: int) -> list[gr.Graph]:
    """Closed graphs up to isomorphism with at most ``nmax`` vertices."""
    return [g for g in gr.graphs_up_to(nmax, canonical=True) if cl.is_closed_search(g) is not None]


@dataclass
class GluingSummary:
    pairs: int = 0
    gluings: int = 0
    distinct: int = 0
    verdicts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)


def gluing_sweep(nmax: int = 5) -> GluingSummary:
    """Glue every pair of closed graphs (at most ``nmax`` vertices each) at
    every pair of free vertices and classify the result."""
    pieces = closed_graphs(nmax)
    summary = GluingSummary()
    seen: dict = {}
    for g1, g2 in itertools.product(pieces, repeat=2):
        summary.pairs += 1
        for v in sorted(gr.free_vertices(g1)):
            for w in sorted(gr.free_vertices(g2)):
                glued = gr.glue_at_free_vertices(g1, v, g2, w)
                summary.gluings += 1
                key = (glued.n, gr.canonical_mask(glued)) if glued.n <= gr.CANONICAL_MAX_N else (
                    glued.n, gr.format_graph6(glued))
                if key in seen:
                    status = seen[key]
                else:
                    status = seen[key] = cl.koszul_classify(glued)
                summary.verdicts[status.verdict.value] = summary.verdicts.get(status.verdict.value, 0) + 1
                if status.verdict == cl.Verdict.NO:
                    summary.violations.append(
                        Violation("gluing", _reproducer(glued),
                                  f"glued {_reproducer(g1)} at {v} with {_reproducer(g2)} at {w}: "
                                  f"{status.reason.value}")
                    )
    summary.distinct = len(seen)
    return summary
