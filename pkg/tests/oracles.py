"""Independent reference implementations used only by the tests.

Distances come from networkx and colorings from plain enumeration, so none of
this shares code with the package.
"""

import itertools

import networkx as nx

INF = float("inf")


def nx_graph(vertices, edges):
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(edges)
    return g


def nx_digraph(vertices, arcs):
    g = nx.DiGraph()
    g.add_nodes_from(vertices)
    g.add_edges_from(arcs)
    return g


def distances(g):
    d = dict(nx.all_pairs_shortest_path_length(g))
    return {a: {b: d[a].get(b, INF) for b in g.nodes} for a in g.nodes}


def weak_distances(dg):
    d = distances(dg)
    return {a: {b: min(d[a][b], d[b][a]) for b in dg.nodes} for a in dg.nodes}


def is_packing(dist, colors):
    nodes = list(colors)
    for a, b in itertools.combinations(nodes, 2):
        if colors[a] == colors[b] and dist[a][b] <= colors[a]:
            return False
    return True


def naive_pcn(dist):
    """Smallest k with a packing k-coloring, by trying every assignment."""
    nodes = sorted(dist)
    for k in range(1, len(nodes) + 1):
        for combo in itertools.product(range(1, k + 1), repeat=len(nodes)):
            if is_packing(dist, dict(zip(nodes, combo))):
                return k
    return len(nodes)


def theta_edges(lengths):
    """Vertices and edges of a theta graph with the package's labels."""
    vertices, edges = ["u", "v"], []
    for i, l in enumerate(lengths, start=1):
        walk = ["u"] + [f"x{i}_{j}" for j in range(1, l)] + ["v"]
        vertices.extend(walk[1:-1])
        edges.extend(zip(walk, walk[1:]))
    return vertices, edges
