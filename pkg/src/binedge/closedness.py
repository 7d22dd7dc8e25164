"""Closed graphs and the Koszul implication chain

    closed  =>  Koszul  =>  chordal and claw-free

Closedness is decided independently by labeling search, by the
chordal/claw-free/narrow characterization, and by interval facets.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import CapacityError
from .graphs import (
    Graph,
    check_labeling,
    clique_facets,
    cone,
    find_claw,
    find_induced_long_cycle,
    independence_triangle,
    is_chordal,
    is_narrow,
    perfect_elimination_ordering,
)

SEARCH_CAP = 8


def check_labeling_closed(g: Graph, lab) -> bool:
    """Test the closed-labeling condition on every pair of edges.

    With positions ``i < j`` and ``k < l``: if ``i == k`` and ``j != l`` then
    ``{j, l}`` must be an edge; if ``j == l`` and ``i != k`` then ``{i, k}``
    must be an edge.
    """
    lab = check_labeling(lab, g.n)
    h = g.relabel(lab)
    edges = h.sorted_edges()
    for (i, j), (k, l) in itertools.combinations(edges, 2):
        if i == k and j != l and not h.has_edge(j, l):
            return False
        if j == l and i != k and not h.has_edge(i, k):
            return False
    return True


def _open_wedges(g: Graph) -> list[tuple[int, int, int]]:
    """Triples (v, a, b) with a, b non-adjacent neighbours of v."""
    out = []
    for v in g.vertices:
        for a, b in itertools.combinations(sorted(g.adj[v]), 2):
            if not g.has_edge(a, b):
                out.append((v, a, b))
    return out


def is_closed_search(g: Graph, cap: int = SEARCH_CAP) -> Optional[tuple[int, ...]]:
    """First closed labeling in lexicographic permutation order, or None.

    A labeling is closed exactly when every open wedge ``a - v - b`` puts
    ``v`` strictly between ``a`` and ``b``; partial labelings violating this
    on fully placed wedges are pruned, which does not change the first hit.
    """
    if g.n > cap:
        raise CapacityError(
            f"labeling search is capped at n <= {cap} (got n={g.n}); use is_closed_fast"
        )
    n = g.n
    wedges = _open_wedges(g)
    # wedges become decidable once their largest vertex is placed
    due: dict[int, list] = {v: [] for v in g.vertices}
    for v, a, b in wedges:
        due[max(v, a, b)].append((v, a, b))
    pos = [0] * (n + 1)
    free = [True] * (n + 1)

    def place(v: int) -> bool:
        if v > n:
            return True
        for p in range(1, n + 1):
            if not free[p]:
                continue
            pos[v] = p
            ok = True
            for c, a, b in due[v]:
                pc, pa, pb = pos[c], pos[a], pos[b]
                if not (pa < pc < pb or pb < pc < pa):
                    ok = False
                    break
            if ok:
                free[p] = False
                if place(v + 1):
                    return True
                free[p] = True
        return False

    if place(1):
        return tuple(pos[1:])
    return None


def _facets_are_intervals(facets, lab) -> bool:
    for facet in facets:
        image = [lab[v - 1] for v in facet]
        if max(image) - min(image) != len(image) - 1:
            return False
    return True


def interval_facets_check(g: Graph, lab) -> bool:
    """True iff every maximal clique maps to a run of consecutive labels."""
    return _facets_are_intervals(clique_facets(g), check_labeling(lab, g.n))


def is_closed_fast(g: Graph, reading: str = "some") -> bool:
    """Chordal, claw-free and narrow (each condition is checked per component)."""
    return is_chordal(g) and find_claw(g) is None and is_narrow(g, reading)


def _lex_bfs(g: Graph, vertices: list[int], previous: Optional[list[int]] = None) -> list[int]:
    """Lexicographic BFS on ``vertices``; with ``previous`` given, ties go to
    the vertex appearing latest in it (the LexBFS+ rule)."""
    rank = {v: k for k, v in enumerate(previous)} if previous else {v: -v for v in vertices}
    labels: dict[int, list[int]] = {v: [] for v in vertices}
    order = []
    step = len(vertices)
    while labels:
        v = max(labels, key=lambda u: (labels[u], rank[u]))
        del labels[v]
        order.append(v)
        for w in g.adj[v]:
            if w in labels:
                labels[w].append(step)
        step -= 1
    return order


def closed_labeling_construction(g: Graph) -> Optional[tuple[int, ...]]:
    """Try to build a closed labeling with repeated LexBFS+ sweeps per
    component; the result is verified before being returned."""
    order: list[int] = []
    for comp in g.components():
        sweep = _lex_bfs(g, comp)
        for _ in range(3):
            sweep = _lex_bfs(g, comp, sweep)
        order.extend(sweep)
    lab = [0] * g.n
    for p, v in enumerate(order, start=1):
        lab[v - 1] = p
    lab = tuple(lab)
    if check_labeling_closed(g, lab):
        return lab
    rev = tuple(g.n + 1 - p for p in lab)
    return rev if check_labeling_closed(g, rev) else None


class Verdict(str, enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


class Reason(str, enum.Enum):
    CLOSED_GRAPH = "ClosedGraph"
    NOT_CHORDAL = "NotChordal"
    HAS_CLAW = "HasClaw"
    CONE_CRITERION = "ConeCriterion"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class KoszulStatus:
    verdict: Verdict
    reason: Reason
    witness: object = None

    def as_dict(self) -> dict:
        w = self.witness
        if isinstance(w, tuple):
            w = list(w)
        return {"verdict": self.verdict.value, "reason": self.reason.value, "witness": w}


def koszul_classify(g: Graph, cap: int = SEARCH_CAP) -> KoszulStatus:
    """Place ``g`` on the implication chain closed => Koszul => chordal and claw-free."""
    cycle = find_induced_long_cycle(g)
    if cycle is not None:
        return KoszulStatus(Verdict.NO, Reason.NOT_CHORDAL, tuple(cycle))
    claw = find_claw(g)
    if claw is not None:
        return KoszulStatus(Verdict.NO, Reason.HAS_CLAW, claw)
    if g.n <= cap:
        lab = is_closed_search(g, cap)
    else:
        lab = closed_labeling_construction(g) if is_closed_fast(g) else None
    if lab is not None:
        return KoszulStatus(Verdict.YES, Reason.CLOSED_GRAPH, lab)
    return KoszulStatus(Verdict.UNKNOWN, Reason.INDETERMINATE)


def cone_koszul_classify(g: Graph) -> KoszulStatus:
    """Classify ``cone(g)``: Koszul iff Ind(g) is triangle-free and g is chordal."""
    triple = independence_triangle(g)
    if triple is not None:
        return KoszulStatus(Verdict.NO, Reason.HAS_CLAW, (g.n + 1,) + triple)
    peo = perfect_elimination_ordering(g)
    if peo is None:
        return KoszulStatus(Verdict.NO, Reason.NOT_CHORDAL, tuple(find_induced_long_cycle(g)))
    return KoszulStatus(
        Verdict.YES,
        Reason.CONE_CRITERION,
        {"perfect_elimination_ordering": peo, "independence_triangle": None},
    )


def cone_is_closed(g: Graph) -> bool:
    """Oracle for :func:`cone_koszul_classify`: labeling search on the cone."""
    return is_closed_search(cone(g)) is not None


def interval_labeling_search(g: Graph, cap: int = SEARCH_CAP) -> Optional[tuple[int, ...]]:
    """First labeling (lexicographic order) under which every facet is an interval."""
    if g.n > cap:
        raise CapacityError(f"interval search is capped at n <= {cap} (got n={g.n})")
    facets = clique_facets(g)
    for perm in itertools.permutations(range(1, g.n + 1)):
        if _facets_are_intervals(facets, perm):
            return perm
    return None
