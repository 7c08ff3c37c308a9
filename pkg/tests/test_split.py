"""Recognition agrees with brute force on every graph up to 6 vertices,
certificates are verified as genuine induced obstructions, and the
canonical partition is pinned on small named graphs."""

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from splitsteiner import Graph, NotSplitError, split_partition
from helpers import brute_is_split, graph_from_masks, masks_from_graph


def _partition_invariants(g, sp):
    cset, iset = set(sp.clique), set(sp.independent)
    assert cset | iset == set(range(g.n))
    assert not cset & iset
    for u, v in combinations(sp.clique, 2):
        assert g.has_edge(u, v)
    for u, v in combinations(sp.independent, 2):
        assert not g.has_edge(u, v)
    # maximality: no independent vertex sees the whole clique
    for u in sp.independent:
        assert not cset or any(not g.has_edge(u, w) for w in sp.clique)
    degs = {v: len(sp.indep_neighbors(v)) for v in sp.clique}
    assert sp.delta_i == (max(degs.values()) if degs else 0)
    assert sp.v3 == tuple(sorted(v for v, d in degs.items() if d == 3))


def test_p3_partition_pinned():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    sp = split_partition(g)
    assert sp.clique == (0, 1)
    assert sp.independent == (2,)
    assert sp.delta_i == 1


def test_p4_partition_pinned():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    sp = split_partition(g)
    assert sp.clique == (1, 2)
    assert sp.independent == (0, 3)
    assert sp.delta_i == 1


def test_star_partition():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    sp = split_partition(g)
    assert sp.clique == (0, 1)  # lex-smallest valid completion of the tie
    assert sp.delta_i == 2


def test_complete_graph_is_all_clique():
    g = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    sp = split_partition(g)
    assert sp.clique == (0, 1, 2, 3)
    assert sp.independent == ()
    assert sp.delta_i == 0


def test_edgeless_graph():
    g = Graph.from_edges(3, [])
    sp = split_partition(g)
    assert sp.clique == (0,)
    assert sp.independent == (1, 2)


def _assert_obstruction_is_real(g, err):
    vs = err.vertices
    present = {(min(u, v), max(u, v)) for u, v in combinations(vs, 2)
               if g.has_edge(u, v)}
    if err.kind == "2K2":
        a, b, c, d = vs
        assert present == {(min(a, b), max(a, b)), (min(c, d), max(c, d))}
    elif err.kind == "C4":
        a, b, c, d = vs
        cyc = [(a, b), (b, c), (c, d), (d, a)]
        assert present == {(min(u, v), max(u, v)) for u, v in cyc}
    elif err.kind == "C5":
        assert len(vs) == 5 and len(present) == 5
        for i in range(5):
            u, v = vs[i], vs[(i + 1) % 5]
            assert g.has_edge(u, v)
    else:
        pytest.fail(f"unknown obstruction kind {err.kind}")


@pytest.mark.parametrize("edges,kind", [
    ([(0, 1), (1, 2), (2, 3), (0, 3)], "C4"),
    ([(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], "C5"),
    ([(0, 1), (2, 3)], "2K2"),
])
def test_obstructions(edges, kind):
    n = max(max(e) for e in edges) + 1
    g = Graph.from_edges(n, edges)
    with pytest.raises(NotSplitError) as exc:
        split_partition(g)
    assert exc.value.kind == kind
    _assert_obstruction_is_real(g, exc.value)


def test_every_graph_up_to_6_vertices():
    """Exhaustive cross-check of the recognizer against subset search."""
    for n in range(1, 7):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for sub in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if sub >> i & 1]
            g = Graph.from_edges(n, edges)
            masks = masks_from_graph(g)
            try:
                sp = split_partition(g)
            except NotSplitError as err:
                assert not brute_is_split(masks), (n, edges)
                _assert_obstruction_is_real(g, err)
            else:
                assert brute_is_split(masks), (n, edges)
                _partition_invariants(g, sp)


def test_partition_is_deterministic(corpus7):
    sample = corpus7[::37]
    for n, masks in sample:
        g = graph_from_masks(n, masks)
        a = split_partition(g)
        b = split_partition(g)
        assert a.clique == b.clique and a.independent == b.independent


@st.composite
def random_graphs(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True,
                          max_size=len(pairs)) if pairs else st.just([]))
    return Graph.from_edges(n, edges)


@given(random_graphs())
@settings(max_examples=150)
def test_recognizer_matches_brute_force(g):
    masks = masks_from_graph(g)
    try:
        sp = split_partition(g)
    except NotSplitError as err:
        assert not brute_is_split(masks)
        _assert_obstruction_is_real(g, err)
    else:
        assert brute_is_split(masks)
        _partition_invariants(g, sp)
