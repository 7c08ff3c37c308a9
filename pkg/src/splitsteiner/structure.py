"""Structural analysis of split partitions.

Induced stars K_{1,r} in a split graph always have their center in the
clique and at most one leaf there, so searching for one reduces to two
neighborhood tests per clique vertex:

  * d_I(v) >= r gives a star with all leaves independent;
  * d_I(v) == r-1 plus a clique vertex w missing all of N_I(v) gives a
    star whose last leaf is w.

check_claw_free_characterization and check_k14_free_3split specialize
this to r=3 and r=4 through pairwise neighborhood-intersection conditions,
which is what the Steiner solvers dispatch on.

The labeled graph M of a view with d_I <= 2 has the independent set as
its vertices and one edge {a, b} per pair sharing a clique neighbor; the
edge is labeled by the smallest such neighbor. Matchings in M translate
back to Steiner vertices via the corresponding vertex/clique sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Iterable

import numpy as np

from .graph import Graph
from .split import SplitPartition


@dataclass(frozen=True)
class StarWitness:
    """An induced K_{1,r}: center plus r pairwise non-adjacent leaves."""

    center: int
    leaves: tuple[int, ...]


@dataclass(frozen=True)
class SplitView:
    """A (clique, independent) labeled induced subgraph of a host graph.

    Used for the reduced graphs the solvers work on; unlike
    SplitPartition, the clique side is not required to be maximal within
    the view. Vertex ids are host-graph ids throughout.
    """

    graph: Graph = field(repr=False, compare=False)
    clique: tuple[int, ...]
    independent: tuple[int, ...]
    delta_i: int
    v3: tuple[int, ...]
    _n_i: dict[int, tuple[int, ...]] = field(repr=False, compare=False)

    def indep_neighbors(self, v: int) -> tuple[int, ...]:
        return self._n_i.get(v, ())

    def indep_degree(self, v: int) -> int:
        return len(self._n_i.get(v, ()))


def as_view(sp: SplitPartition | SplitView) -> SplitView:
    if isinstance(sp, SplitView):
        return sp
    n_i = {v: sp.indep_neighbors(v) for v in sp.clique if sp.indep_neighbors(v)}
    return SplitView(graph=sp.graph, clique=sp.clique,
                     independent=sp.independent, delta_i=sp.delta_i,
                     v3=sp.v3, _n_i=n_i)


def restrict_view(src: SplitPartition | SplitView,
                  drop_clique: Iterable[int] = (),
                  drop_indep: Iterable[int] = ()) -> SplitView:
    """View of src with the given clique/independent vertices removed."""
    dc = set(drop_clique)
    di = set(drop_indep)
    clique = tuple(v for v in src.clique if v not in dc)
    independent = tuple(x for x in src.independent if x not in di)
    n_i: dict[int, tuple[int, ...]] = {}
    for v in clique:
        xs = src.indep_neighbors(v)
        if di:
            xs = tuple(x for x in xs if x not in di)
        if xs:
            n_i[v] = xs
    delta_i = max((len(xs) for xs in n_i.values()), default=0)
    v3 = tuple(sorted(v for v, xs in n_i.items() if len(xs) == 3))
    return SplitView(graph=src.graph, clique=clique, independent=independent,
                     delta_i=delta_i, v3=v3, _n_i=n_i)


def _coverage_gap(g: Graph, clique_arr: np.ndarray,
                  indep_vertices: tuple[int, ...]) -> int | None:
    """Smallest clique vertex with no neighbor among indep_vertices, or
    None when every clique vertex has one."""
    mask = np.zeros(g.n, dtype=bool)
    for x in indep_vertices:
        mask[g.neighbors(x)] = True
    vals = mask[clique_arr]
    if vals.all():
        return None
    return int(clique_arr[int(np.argmin(vals))])


def find_induced_star(sp: SplitPartition | SplitView, r: int) -> StarWitness | None:
    """First induced K_{1,r} witness (ascending center id), or None.

    Requires r >= 3. Within a center, leaves all in the independent set
    are preferred; otherwise the last leaf is the smallest clique vertex
    whose neighborhood misses N_I(center).
    """
    if r < 3:
        raise ValueError("induced-star search needs r >= 3")
    if sp.delta_i <= r - 2:
        return None
    clique_arr = np.asarray(sp.clique, dtype=np.int64)
    gap_memo: dict[tuple[int, ...], int | None] = {}
    for v in sp.clique:
        n_i = sp.indep_neighbors(v)
        d = len(n_i)
        if d >= r:
            return StarWitness(center=v, leaves=tuple(n_i[:r]))
        if d == r - 1:
            if n_i not in gap_memo:
                gap_memo[n_i] = _coverage_gap(sp.graph, clique_arr, n_i)
            w = gap_memo[n_i]
            if w is not None:
                return StarWitness(center=v, leaves=tuple(n_i) + (w,))
    return None


def check_claw_free_characterization(sp: SplitPartition | SplitView) -> bool:
    """Claw-freeness test for a connected split graph.

    True iff delta_i <= 1, or delta_i == 2 and every clique vertex with
    two independent neighbors shares an independent neighbor with every
    other clique vertex.
    """
    if sp.delta_i <= 1:
        return True
    if sp.delta_i >= 3:
        return False
    clique_arr = np.asarray(sp.clique, dtype=np.int64)
    pair_memo: dict[tuple[int, ...], bool] = {}
    for u in sp.clique:
        pair = sp.indep_neighbors(u)
        if len(pair) != 2:
            continue
        if pair not in pair_memo:
            pair_memo[pair] = _coverage_gap(sp.graph, clique_arr, pair) is None
        if not pair_memo[pair]:
            return False
    return True


def check_k14_free_3split(sp: SplitPartition | SplitView) -> bool:
    """K_{1,4}-freeness of a 3-split graph.

    True iff every clique vertex with three independent neighbors shares
    an independent neighbor with every other clique vertex. Requires
    delta_i == 3.
    """
    if sp.delta_i != 3:
        raise ValueError(f"expected a 3-split partition, got delta_i={sp.delta_i}")
    clique_arr = np.asarray(sp.clique, dtype=np.int64)
    triple_memo: dict[tuple[int, ...], bool] = {}
    for u in sp.v3:
        triple = sp.indep_neighbors(u)
        if triple not in triple_memo:
            triple_memo[triple] = _coverage_gap(sp.graph, clique_arr, triple) is None
        if not triple_memo[triple]:
            return False
    return True


@dataclass(frozen=True)
class LabeledGraph:
    """Graph on the independent set with clique-vertex edge labels.

    labeled_edges holds (a, b, label) with a < b, sorted by (a, b); the
    label is the smallest clique vertex adjacent to both a and b.
    """

    vertices: tuple[int, ...]
    labeled_edges: tuple[tuple[int, int, int], ...]


def build_labeled_graph(sp: SplitPartition | SplitView) -> LabeledGraph:
    """Labeled graph of a view whose clique vertices have at most two
    independent neighbors each. Raises ValueError above that bound,
    because edge labels would stop being well defined."""
    if sp.delta_i > 2:
        raise ValueError(
            f"labeled graph needs independent degrees <= 2, got {sp.delta_i}")
    chosen: dict[tuple[int, int], int] = {}
    for v in sp.clique:  # ascending, so the first label per pair is smallest
        xs = sp.indep_neighbors(v)
        if len(xs) == 2:
            pair = (xs[0], xs[1])
            if pair not in chosen:
                chosen[pair] = v
    edges = tuple(sorted((a, b, lab) for (a, b), lab in chosen.items()))
    return LabeledGraph(vertices=tuple(sp.independent), labeled_edges=edges)


def corresponding_vertex_set(m: LabeledGraph,
                             edges: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Labels of the given labeled-graph edges, one per edge, sorted.

    Raises ValueError if an edge is not in m or if two distinct edges
    carry the same label (cannot happen when every label vertex has at
    most two independent neighbors, but is checked defensively).
    """
    by_pair = {(a, b): lab for a, b, lab in m.labeled_edges}
    out: list[int] = []
    seen: dict[int, tuple[int, int]] = {}
    for e in edges:
        a, b = min(e), max(e)
        if (a, b) not in by_pair:
            raise ValueError(f"edge ({a}, {b}) is not in the labeled graph")
        lab = by_pair[(a, b)]
        if lab in seen and seen[lab] != (a, b):
            raise ValueError(f"label {lab} shared by edges {seen[lab]} and {(a, b)}")
        seen[lab] = (a, b)
        out.append(lab)
    return tuple(sorted(set(out)))


def corresponding_clique_set(sp: SplitPartition | SplitView,
                             vertices: Iterable[int]) -> tuple[int, ...]:
    """Smallest clique neighbor of each given independent vertex,
    deduplicated and sorted. Raises ValueError when a vertex has no
    neighbor inside the view's clique."""
    clique_set = set(sp.clique)
    out: set[int] = set()
    for u in sorted(set(vertices)):
        for w in sp.graph.neighbors(u):
            wi = int(w)
            if wi in clique_set:
                out.add(wi)
                break
        else:
            raise ValueError(f"vertex {u} has no clique neighbor in the view")
    return tuple(sorted(out))
