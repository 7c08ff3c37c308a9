"""Reference implementations the test suite trusts.

Everything here is deliberately naive: bitmask adjacency, exhaustive
enumeration, recursion. No code is shared with the package beyond the
Graph constructors at the edges of tests, so agreement between the two
sides is meaningful.
"""

from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from splitsteiner import Graph


def masks_from_graph(g: Graph) -> list[int]:
    return [sum(1 << int(w) for w in g.neighbors(v)) for v in range(g.n)]


def graph_from_masks(n: int, masks: list[int]) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if masks[u] >> v & 1]
    return Graph.from_edges(n, edges)


def brute_find_star(masks: list[int], r: int):
    """First induced K_(1,r): (center, leaves) or None. Tries every
    center and every r-subset of its neighborhood."""
    n = len(masks)
    for c in range(n):
        nb = [v for v in range(n) if masks[c] >> v & 1]
        if len(nb) < r:
            continue
        for leaves in combinations(nb, r):
            if all(not masks[leaves[i]] >> leaves[j] & 1
                   for i in range(r) for j in range(i + 1, r)):
                return c, leaves
    return None


def brute_is_split(masks: list[int]) -> bool:
    """Try every subset as the clique side."""
    n = len(masks)
    for csub in range(1 << n):
        cs = [v for v in range(n) if csub >> v & 1]
        rest = [v for v in range(n) if not csub >> v & 1]
        if all(masks[u] >> v & 1 for u, v in combinations(cs, 2)) and \
           not any(masks[u] >> v & 1 for u, v in combinations(rest, 2)):
            return True
    return False


def brute_matching(n: int, edges) -> int:
    """Maximum matching size by branching over the edge list. Fine for
    a dozen vertices."""
    edge_list = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))

    @lru_cache(maxsize=None)
    def best(used: int, idx: int) -> int:
        if idx == len(edge_list):
            return 0
        u, v = edge_list[idx]
        res = best(used, idx + 1)
        if not used >> u & 1 and not used >> v & 1:
            res = max(res, 1 + best(used | 1 << u | 1 << v, idx + 1))
        return res

    out = best(0, 0)
    best.cache_clear()
    return out


def set_connected(masks: list[int], members) -> bool:
    """DFS over an explicit member set; the empty set counts as connected."""
    mem = sorted(set(members))
    if not mem:
        return True
    seen = {mem[0]}
    stack = [mem[0]]
    while stack:
        u = stack.pop()
        for v in mem:
            if v not in seen and masks[u] >> v & 1:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(mem)


def brute_steiner_min(masks: list[int], terminals, pool) -> int:
    """Smallest k such that some k-subset of pool connects the terminals."""
    base = sorted(set(terminals))
    pool = sorted(set(pool) - set(base))
    for k in range(len(pool) + 1):
        for s in combinations(pool, k):
            if set_connected(masks, base + list(s)):
                return k
    raise AssertionError("no feasible Steiner set in the given pool")


def split_corpus(max_n: int):
    """Every split graph on at most max_n vertices, as (n, masks) pairs.

    Built as a clique 0..a-1 plus b independent vertices whose rows are
    a multiset of clique subsets; that enumeration is exhaustive up to
    relabeling inside the independent side, which is all the structural
    checks can see. Graphs reachable from several (a, b) choices appear
    more than once; duplicates only re-test.
    """
    out = []
    for n in range(1, max_n + 1):
        for a in range(n + 1):
            b = n - a
            clique_mask = (1 << a) - 1
            for combo in combinations_with_replacement(range(1 << a), b):
                masks = [clique_mask & ~(1 << v) for v in range(a)] + [0] * b
                for i, row in enumerate(combo):
                    masks[a + i] = row
                    for v in range(a):
                        if row >> v & 1:
                            masks[v] |= 1 << (a + i)
                out.append((n, masks))
    return out
