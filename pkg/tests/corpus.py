"""Shared test corpora built from the networkx small-graph atlas."""

import functools
import itertools

import networkx as nx

from glgcomp import Graph


def _convert(nxg):
    verts = ["v%d" % i for i in sorted(nxg.nodes())]
    edges = [("v%d" % a, "v%d" % b) for a, b in nxg.edges()]
    return Graph(verts, edges)


@functools.lru_cache(maxsize=None)
def atlas_graphs(max_vertices=7):
    """Every graph (up to isomorphism) with at most max_vertices vertices."""
    out = []
    for nxg in nx.graph_atlas_g()[1:]:
        if nxg.number_of_nodes() <= max_vertices:
            out.append(_convert(nxg))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def connected_graphs(max_vertices=7, min_edges=0, max_edges=None):
    out = []
    for g in atlas_graphs(max_vertices):
        if len(g.vertices) < 1:
            continue
        m = len(g.edges)
        if m < min_edges:
            continue
        if max_edges is not None and m > max_edges:
            continue
        nxg = nx.Graph()
        nxg.add_nodes_from(g.vertices)
        nxg.add_edges_from(g.edges)
        if nx.is_connected(nxg):
            out.append(g)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def connected_chordal_graphs(max_vertices=6):
    out = []
    for g in connected_graphs(max_vertices):
        if len(g.vertices) < 2:
            continue
        nxg = nx.Graph()
        nxg.add_nodes_from(g.vertices)
        nxg.add_edges_from(g.edges)
        if nx.is_chordal(nxg):
            out.append(g)
    return tuple(out)


def cycle_graph(n):
    verts = ["c%d" % i for i in range(n)]
    edges = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
    return Graph(verts, edges)


def complete_bipartite(a, b):
    left = ["a%d" % i for i in range(a)]
    right = ["b%d" % i for i in range(b)]
    return Graph(left + right, list(itertools.product(left, right)))


def weight_maps(vertices, max_weight=2, max_total=4):
    """All weight maps on the given vertices within the stated caps."""
    for combo in itertools.product(range(max_weight + 1), repeat=len(vertices)):
        if sum(combo) <= max_total:
            yield {v: w for v, w in zip(vertices, combo) if w}
