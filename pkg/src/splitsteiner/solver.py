"""Steiner tree solvers for connected split graphs.

Pipeline: split_partition -> K_{1,4}-freeness verification -> pruning ->
dispatch on the reduced graph's maximum independent degree (delta_i).
Every regime reduces to picking clique vertices that cover the surviving
independent terminals:

  * delta 1: one clique neighbor per terminal, all forced;
  * delta 2 (claw-free or general): a maximum matching in the labeled
    graph M tells which clique vertices can cover two terminals at once,
    giving |S| = |I1| - alpha(M) (minimum edge cover via Gallai);
  * delta 3, K_{1,4}-free: at most one clique vertex covering three
    terminals is ever worth using; trying every such center v against a
    matching on what remains yields |S| in {|I1|-2, |I1|-3, |I1|-4}.

Graphs that are split but contain an induced K_{1,4} are NP-hard
territory; solve() either delegates to the exponential oracle (when
enabled and the clique is small enough) or raises NotK14FreeError with
a witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotK14FreeError
from .graph import Graph, bfs_tree
from .matching import maximum_matching
from .oracle import brute_force_steiner
from .split import SplitPartition, split_partition
from .sstp import SteinerInstance
from .structure import (
    LabeledGraph,
    SplitView,
    build_labeled_graph,
    check_claw_free_characterization,
    check_k14_free_3split,
    corresponding_clique_set,
    corresponding_vertex_set,
    find_induced_star,
    restrict_view,
)

REGIMES = ("empty", "1-split", "2-split", "3-split", "claw-free", "exact-fallback")


@dataclass(frozen=True)
class SolveTrace:
    """Which regime ran and the matching sizes it decided on."""

    regime: str
    alpha_m: int | None = None
    alpha_m2: int | None = None
    chosen_v3_vertex: int | None = None


@dataclass(frozen=True)
class PrunedInstance:
    """Reduced instance: every surviving I-vertex is a terminal and no
    surviving clique vertex is one."""

    view: SplitView
    terminals: tuple[int, ...]
    removed_s1: tuple[int, ...]
    removed_s2: tuple[int, ...]
    removed_s3: tuple[int, ...]
    clique_terminal_anchor: int | None


@dataclass(frozen=True)
class SteinerResult:
    steiner_set: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]
    trace: SolveTrace
    optimal: bool = True

    @property
    def size(self) -> int:
        return len(self.steiner_set)


def prune(inst: SteinerInstance, sp: SplitPartition) -> PrunedInstance:
    """Remove S1 (non-terminal I), S2 (non-terminal C with no terminal
    I-neighbor), and S3 (terminal C-vertices plus their I-neighborhoods),
    in that order.

    Pruning can leave the reduced clique non-maximal, which the delta-
    dispatched solvers rely on; an I-vertex adjacent to all of the
    reduced clique is therefore promoted into it and, being a terminal,
    immediately removed by another S3 round. Promotion stops while fewer
    than two I-terminals remain: a promoted terminal reconnects through
    any clique vertex of the final solution, so at least one more
    terminal must stay behind to force such a vertex into S.
    """
    g = inst.graph
    r_set = set(inst.terminals)
    s1 = [x for x in sp.independent if x not in r_set]
    s1_set = set(s1)
    s2 = [v for v in sp.clique
          if v not in r_set and not any(x in r_set for x in sp.indep_neighbors(v))]
    s2_set = set(s2)
    # S3 may overlap S1: it collects the whole I-neighborhood of every
    # clique terminal, terminal or not
    s3_set: set[int] = set()
    for v in sp.clique:
        if v in r_set:
            s3_set.add(v)
            s3_set.update(sp.indep_neighbors(v))
    s3 = sorted(s3_set)

    clique_terminals = [v for v in sp.clique if v in r_set]
    anchor = clique_terminals[0] if clique_terminals else None
    c1 = [v for v in sp.clique if v not in s2_set and v not in s3_set]
    i1 = [x for x in sp.independent if x not in s1_set and x not in s3_set]

    while len(i1) >= 2:
        c1_set = set(c1)
        promoted = None
        for u in i1:
            if sum(1 for w in g.neighbor_list(u) if w in c1_set) == len(c1):
                promoted = u
                break
        if promoted is None:
            break
        i1.remove(promoted)
        s3.append(promoted)
        if anchor is None:
            anchor = promoted

    view = restrict_view(sp, drop_clique=s2_set | s3_set,
                         drop_indep=s1_set | set(s3))
    terminals = tuple(i1)
    assert view.independent == terminals
    return PrunedInstance(view=view, terminals=terminals,
                          removed_s1=tuple(s1), removed_s2=tuple(s2),
                          removed_s3=tuple(sorted(s3)),
                          clique_terminal_anchor=anchor)


def _labeled_edges_without(view: SplitView,
                           banned: set[int]) -> tuple[tuple[int, int, int], ...]:
    """Labeled edges of the view with the banned I-vertices removed,
    without materializing the restricted view."""
    chosen: dict[tuple[int, int], int] = {}
    for v in view.clique:
        xs = [x for x in view.indep_neighbors(v) if x not in banned]
        if len(xs) == 2:
            pair = (xs[0], xs[1])
            if pair not in chosen:
                chosen[pair] = v
    return tuple(sorted((a, b, lab) for (a, b), lab in chosen.items()))


def _edge_graph(n: int, labeled: tuple[tuple[int, int, int], ...]) -> Graph:
    return Graph.from_edges(n, [(a, b) for a, b, _ in labeled])


def _covered_by(view: SplitView, chosen: set[int]) -> set[int]:
    out: set[int] = set()
    for v in chosen:
        out.update(view.indep_neighbors(v))
    return out


def _survivor_pairs(v3_triples: list[tuple[int, tuple[int, ...]]],
                    v: int, banned: set[int]) -> list[tuple[int, int]]:
    """Labeled-graph edges left after dropping the I-neighborhood of v.

    Once the K_{1,4}-freeness check has passed, every clique vertex's
    neighborhood meets banned, so a surviving pair can only be another
    three-neighbor center's triple losing exactly one vertex."""
    out = []
    for u, xs in v3_triples:
        if u == v:
            continue
        rest = [x for x in xs if x not in banned]
        if len(rest) == 2:
            out.append((rest[0], rest[1]))
    return out


def _alpha_capped(pairs: list[tuple[int, int]]) -> int:
    """min(maximum matching size, 2) of the given edges."""
    if not pairs:
        return 0
    a, b = pairs[0]
    pa: set[int] = set()
    pb: set[int] = set()
    for x, y in pairs[1:]:
        if x != a and x != b and y != a and y != b:
            return 2  # disjoint from the first edge
        if a in (x, y):
            other = y if x == a else x
            if other != b:
                pa.add(other)
        if b in (x, y):
            other = y if x == b else x
            if other != a:
                pb.add(other)
    # every edge meets {a, b}: a second matched edge needs one edge off
    # each endpoint, with distinct far ends
    if pa and pb and (len(pa) > 1 or len(pb) > 1 or pa != pb):
        return 2
    return 1


def solve_1split(pi: PrunedInstance) -> tuple[int, ...]:
    """One clique neighbor per terminal; all |I1| picks are forced."""
    view = pi.view
    if view.delta_i != 1:
        raise ValueError(f"solve_1split needs delta_i == 1, got {view.delta_i}")
    s = corresponding_clique_set(view, view.independent)
    assert len(s) == len(view.independent)
    return s


def solve_claw_free(pi: PrunedInstance) -> tuple[int, ...]:
    """Claw-free reduced instances: delta 1 degenerates to one neighbor
    per terminal; delta 2 forces |I1| <= 3, one shared neighbor plus at
    most one extra pick."""
    view = pi.view
    if view.delta_i >= 3:
        raise ValueError("claw-free solver got a partition with delta_i >= 3")
    if view.delta_i <= 1:
        return corresponding_clique_set(view, view.independent)
    if len(view.independent) > 3:
        raise ValueError("claw-free 2-split graphs have at most 3 I-vertices")
    x = min(v for v in view.clique if view.indep_degree(v) == 2)
    rest = [u for u in view.independent if u not in view.indep_neighbors(x)]
    s = {x} | set(corresponding_clique_set(view, rest))
    return tuple(sorted(s))


def _solve_2split_impl(view: SplitView) -> tuple[tuple[int, ...], int]:
    lg = build_labeled_graph(view)
    p = maximum_matching(_edge_graph(view.graph.n, lg.labeled_edges))
    s1 = set(corresponding_vertex_set(lg, p.edges))
    covered = _covered_by(view, s1)
    rest = [u for u in view.independent if u not in covered]
    s2 = set(corresponding_clique_set(view, rest))
    assert not (s1 & s2)
    s = tuple(sorted(s1 | s2))
    assert len(s) == len(view.independent) - p.size
    return s, p.size


def solve_2split(pi: PrunedInstance) -> tuple[int, ...]:
    """|S| = |I1| - alpha(M): matched labels cover two terminals each,
    every unmatched terminal gets its smallest clique neighbor."""
    if pi.view.delta_i != 2:
        raise ValueError(f"solve_2split needs delta_i == 2, got {pi.view.delta_i}")
    return _solve_2split_impl(pi.view)[0]


def _solve_3split_impl(
        view: SplitView) -> tuple[tuple[int, ...], int, int | None, int | None]:
    """Returns (S, alpha_m, alpha_m2, chosen_v3_vertex)."""
    if view.delta_i != 3:
        raise ValueError(f"solve_3split needs delta_i == 3, got {view.delta_i}")
    if not check_k14_free_3split(view):
        raise ValueError("solve_3split needs a K_{1,4}-free reduced graph")
    n = view.graph.n
    best_v: int | None = None
    best_alpha = -1
    # V_3 can be a constant fraction of the clique, so the probe works on
    # raw survivor pairs instead of building a graph per center.
    v3_triples = [(v, view.indep_neighbors(v)) for v in view.v3]
    for v in view.v3:  # ascending; strict improvement keeps the smallest id
        banned = set(view.indep_neighbors(v))
        alpha = _alpha_capped(_survivor_pairs(v3_triples, v, banned))
        if alpha > best_alpha:
            best_alpha, best_v = alpha, v
            if best_alpha == 2:  # alpha(M) caps at 2; no center can beat it
                break
    alpha_m2: int | None = None
    chosen: int | None
    if best_alpha >= 1:
        assert best_v is not None
        banned = set(view.indep_neighbors(best_v))
        labeled = _labeled_edges_without(view, banned)
        lg = LabeledGraph(
            vertices=tuple(x for x in view.independent if x not in banned),
            labeled_edges=labeled)
        p1 = maximum_matching(_edge_graph(n, labeled))
        assert p1.size == best_alpha
        s1 = {best_v} | set(corresponding_vertex_set(lg, p1.edges))
        chosen = best_v
        alpha_m = p1.size
    else:
        alpha_m = 0
        h2 = restrict_view(view, drop_clique=view.v3)
        lg2 = build_labeled_graph(h2)
        p2 = maximum_matching(_edge_graph(n, lg2.labeled_edges))
        # every M2 edge touches the neighborhood of any V_3 vertex
        assert p2.size <= 3
        alpha_m2 = p2.size
        if p2.size == 3:
            s1 = set(corresponding_vertex_set(lg2, p2.edges))
            chosen = None
        else:
            chosen = view.v3[0]
            s1 = {chosen}
    covered = _covered_by(view, s1)
    rest = [u for u in view.independent if u not in covered]
    s2 = set(corresponding_clique_set(view, rest))
    assert not (s1 & s2)
    s = tuple(sorted(s1 | s2))
    n_i1 = len(view.independent)
    assert n_i1 - 4 <= len(s) <= n_i1 - 2
    return s, alpha_m, alpha_m2, chosen


def solve_3split(pi: PrunedInstance) -> tuple[int, ...]:
    """K_{1,4}-free 3-split instances: try each three-terminal center
    v in V_3 with a matching on the rest; with no useful center, a
    3-matching avoiding V_3 still saves a vertex when it exists."""
    return _solve_3split_impl(pi.view)[0]


def solve(inst: SteinerInstance, *, exact_fallback: bool = False,
          fallback_budget: int = 20,
          oracle_budget: int = 2_000_000) -> SteinerResult:
    """Full pipeline; see the module docstring.

    exact_fallback sends instances with an induced K_{1,4} to the
    brute-force oracle instead of raising, provided at most
    fallback_budget non-terminal clique vertices remain to search over.
    """
    g = inst.graph
    sp = split_partition(g)  # NotSplitError propagates
    r_set = set(inst.terminals)
    if not r_set:
        return SteinerResult((), (), SolveTrace(regime="empty"))

    witness = find_induced_star(sp, 4)
    if witness is not None:
        if exact_fallback:
            pool = [v for v in sp.clique if v not in r_set]
            if len(pool) <= fallback_budget:
                orc = brute_force_steiner(inst, universe="clique-only",
                                          budget=oracle_budget)
                tree = _tree_edges(g, set(orc.witness) | r_set)
                return SteinerResult(tuple(orc.witness), tree,
                                     SolveTrace(regime="exact-fallback"))
        raise NotK14FreeError(witness)

    pi = prune(inst, sp)
    view = pi.view
    i1 = pi.terminals
    if not i1 or (len(i1) == 1 and pi.clique_terminal_anchor is None):
        # R is already connected: clique terminals are pairwise adjacent
        # and every pruned I-terminal hangs off one of them
        return SteinerResult((), _tree_edges(g, r_set),
                             SolveTrace(regime="empty"))

    d = view.delta_i
    assert 1 <= d <= 3  # every terminal kept a clique neighbor; K14-free caps at 3
    if d == 1:
        s: tuple[int, ...] = solve_1split(pi)
        trace = SolveTrace(regime="1-split")
    elif d == 2:
        if len(i1) <= 3 and check_claw_free_characterization(view):
            s = solve_claw_free(pi)
            trace = SolveTrace(regime="claw-free")
        else:
            s, alpha = _solve_2split_impl(view)
            trace = SolveTrace(regime="2-split", alpha_m=alpha)
    else:
        s, alpha, alpha2, chosen = _solve_3split_impl(view)
        trace = SolveTrace(regime="3-split", alpha_m=alpha, alpha_m2=alpha2,
                           chosen_v3_vertex=chosen)
    assert not (set(s) & r_set)
    return SteinerResult(s, _tree_edges(g, set(s) | r_set), trace)


def _tree_edges(g: Graph, subset: set[int]) -> tuple[tuple[int, int], ...]:
    edges = bfs_tree(g, subset)
    return tuple(sorted((u, v) if u < v else (v, u) for u, v in edges))
