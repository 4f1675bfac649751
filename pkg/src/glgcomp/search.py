"""Exhaustive search for edge-clique realizations of a graph.

A realization of graph G with k extra vertices is an ordering of the
vertices of G plus k trailing extra vertices, together with one clique of G
per position, such that each position's clique lies entirely among the
earlier G-vertices and every edge of G appears inside at least one clique.
Reading the cliques as in-neighborhoods yields an acyclic digraph whose
competition graph is G plus k isolated vertices.

The search works on bitmasks and memoizes dominance: for a fixed set of
placed vertices, only Pareto-maximal covered-edge sets are explored.
"""

import itertools

from .errors import BudgetExceeded, NotAClique, UnknownVertex
from .graph_core import is_clique, maximal_cliques


class SearchBudget:
    """Knobs bounding the exhaustive search."""

    __slots__ = ("max_total_vertices", "max_k", "max_nodes")

    def __init__(self, max_total_vertices=11, max_k=4, max_nodes=2_000_000):
        self.max_total_vertices = max_total_vertices
        self.max_k = max_k
        self.max_nodes = max_nodes


DEFAULT_BUDGET = SearchBudget()


def fresh_labels(taken, count, stem="z"):
    """`count` labels of the form stem1, stem2, ... avoiding the taken set."""
    taken = set(taken)
    out = []
    i = 1
    while len(out) < count:
        cand = "%s%d" % (stem, i)
        if cand not in taken:
            out.append(cand)
            taken.add(cand)
        i += 1
    return out


def find_realization(graph, k, first_pair=None, added_cliques=None, budget=None):
    """Search for a realization of `graph` with k extra vertices.

    first_pair: optional pair of vertices forced to the first two positions
        with empty cliques (so they have empty in-neighborhoods).
    added_cliques: optional sequence of exactly the cliques assigned to the
        extra vertices; when given, k is taken from its length and the
        search only orders the real vertices.

    Returns (order, cliques, added_cover) on success, where order and
    cliques describe the real vertices in placement order and added_cover
    gives the k extra in-neighborhoods; returns None when no realization
    exists; raises BudgetExceeded when the node budget runs out.
    """
    budget = budget or DEFAULT_BUDGET
    vs = graph.vertices
    n = len(vs)
    vbit = {v: 1 << i for i, v in enumerate(vs)}
    edges = sorted(graph.edges)
    ebit = {e: 1 << i for i, e in enumerate(edges)}
    target = (1 << len(edges)) - 1

    fixed_cover = None
    if added_cliques is not None:
        fixed_cover = [frozenset(c) for c in added_cliques]
        for c in fixed_cover:
            if not is_clique(graph, c):
                raise NotAClique("fixed extra clique %r is not a clique" % (sorted(c),))
        k = len(fixed_cover)

    cliques = maximal_cliques(graph)
    clique_masks = []
    for c in cliques:
        m = 0
        for v in c:
            m |= vbit[v]
        clique_masks.append(m)

    def pairs_mask(vmask):
        mask = 0
        members = [v for v in vs if vbit[v] & vmask]
        for a, b in itertools.combinations(members, 2):
            mask |= ebit[(a, b)]
        return mask

    pairs_cache = {}

    def cover_of(vmask):
        got = pairs_cache.get(vmask)
        if got is None:
            got = pairs_cache[vmask]= pairs_mask(vmask)
        return got

    # Pairwise "can share a clique" relation between edges, for lower bounds.
    compatible = [0] * len(edges)
    for i, e in enumerate(edges):
        for j in range(i + 1, len(edges)):
            f = edges[j]
            quad = set(e) | set(f)
            if is_clique(graph, quad):
                compatible[i] |= 1 << j
                compatible[j] |= 1 << i

    def independent_edges_lb(uncovered):
        """Greedy count of uncovered edges no two of which fit in one clique."""
        count = 0
        forbidden = 0
        m = uncovered
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if not (low & forbidden):
                count += 1
                forbidden |= low | compatible[i]
            m &= m - 1
        return count

    start_placed = 0
    start_path = []
    if first_pair is not None:
        u, v = first_pair
        if u == v:
            raise UnknownVertex("forced pair must be two distinct vertices")
        for w in (u, v):
            if not graph.has_vertex(w):
                raise UnknownVertex("forced vertex %r is not in the graph" % (w,))
        start_placed = vbit[u] | vbit[v]
        start_path = [(u, frozenset()), (v, frozenset())]

    start_covered = 0
    if fixed_cover is not None:
        for c in fixed_cover:
            m = 0
            for v in c:
                m |= vbit[v]
            start_covered |= cover_of(m)

    full = (1 << n) - 1
    memo = {}
    nodes = [0]

    def bump():
        nodes[0] += 1
        if nodes[0] > budget.max_nodes:
            raise BudgetExceeded(
                "realization search exceeded %d nodes" % budget.max_nodes)

    def dominated(placed, covered):
        for c in memo.get(placed, ()):
            if covered & ~c == 0:
                return True
        return False

    def record(placed, covered):
        lst = memo.setdefault(placed, [])
        lst[:] = [c for c in lst if c & ~covered]
        lst.append(covered)

    def final_cover(uncovered, slots):
        """Cover the remaining edges with at most `slots` maximal cliques."""
        if not uncovered:
            return []
        if slots <= 0 or independent_edges_lb(uncovered) > slots:
            return None
        bump()
        low = uncovered & -uncovered
        e = edges[low.bit_length() - 1]
        emask = ebit[e]
        for cm in clique_masks:
            if cover_of(cm) & emask:
                rest = final_cover(uncovered & ~cover_of(cm), slots - 1)
                if rest is not None:
                    members = frozenset(v for v in vs if vbit[v] & cm)
                    return [members] + rest
        return None

    def clique_candidates(placed):
        inters = set()
        for cm in clique_masks:
            inters.add(cm & placed)
        inters.discard(0)
        maximal = [m for m in inters
                   if not any(m != o and m & ~o == 0 for o in inters)]
        return maximal or [0]

    def dfs(placed, covered, path):
        bump()
        if placed == full:
            if fixed_cover is not None:
                if covered == target:
                    return list(path), list(fixed_cover)
                return None
            slack = independent_edges_lb(target & ~covered)
            if slack > k:
                return None
            tail = final_cover(target & ~covered, k)
            if tail is None:
                return None
            tail += [frozenset()] * (k - len(tail))
            return list(path), tail
        slots = k if fixed_cover is None else 0
        unplaced_count = n - bin(placed).count("1")
        if independent_edges_lb(target & ~covered) > unplaced_count + slots:
            return None
        if dominated(placed, covered):
            return None
        record(placed, covered)
        cands = clique_candidates(placed)
        for v in vs:
            if vbit[v] & placed:
                continue
            for cm in cands:
                members = frozenset(w for w in vs if vbit[w] & cm)
                path.append((v, members))
                got = dfs(placed | vbit[v], covered | cover_of(cm), path)
                if got is not None:
                    return got
                path.pop()
        return None

    got = dfs(start_placed, start_covered, start_path)
    if got is None:
        return None
    path, tail = got
    order = tuple(v for v, _ in path)
    body = tuple(c for _, c in path)
    return order, body, tuple(tail)
