"""Independent reference computations used by the tests.

Nothing here calls into the package's algorithms: adjacency comes from the
rotation lists only, and graph questions go to networkx or to brute force.
"""

from __future__ import annotations

from itertools import product

import networkx as nx


def to_nx(G) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    for v, r in enumerate(G.rotation):
        for w in r:
            g.add_edge(v, w)
    return g


def embed(graph: nx.Graph):
    """Rotation system of a planar networkx graph, outer face chosen as in the corpus tool."""
    from spiralchains.planar import PlanarTriangulation, trace_faces
    ok, emb = nx.check_planarity(graph)
    assert ok
    rot = [list(emb.neighbors_cw_order(v)) for v in sorted(graph)]
    x, y, z = trace_faces(PlanarTriangulation(rot, (0, 1, 2)))[0].vertices
    return PlanarTriangulation.from_rotations(rot, (x, z, y))


def faces_nx(G) -> set[frozenset]:
    """Facial triangles of a 3-connected planar graph: triangles whose removal keeps it connected."""
    g = to_nx(G)
    out = set()
    for t in (c for c in nx.enumerate_all_cliques(g) if len(c) == 3):
        h = g.copy()
        h.remove_nodes_from(t)
        if h.number_of_nodes() == 0 or nx.is_connected(h):
            out.add(frozenset(t))
    return out


def boundary_rescan(adj, chain, segments) -> list[str]:
    """Quadratic check of every non-final boundary; returns problems found."""
    problems = []
    m = len(chain)
    cover = []
    for s in segments:
        cover.extend(range(s.start, s.end + 1))
    if cover != list(range(m)):
        problems.append("segments do not partition the chain")
    for s in segments[:-1]:
        i, j = s.start, s.end

        def pred(jj):
            return jj > i + 1 and chain[i] in adj[chain[jj]] and chain[i + 1] not in adj[chain[jj]]

        if not pred(j):
            problems.append(f"boundary ({i},{j}) fails the predicate")
        later = [jj for jj in range(j + 1, m) if pred(jj)]
        if later:
            problems.append(f"boundary ({i},{j}) is not the last such vertex: {later}")
    return problems


def is_hamiltonian_path(adj, path, n) -> bool:
    return (len(path) == n and len(set(path)) == n
            and all(b in adj[a] for a, b in zip(path, path[1:])))


def three_colorable(vertices, edges) -> bool:
    """Plain backtracking over vertices in BFS order."""
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(edges)
    order = []
    for comp in nx.connected_components(g):
        root = min(comp)
        order.extend(nx.bfs_tree(g, root))
    color = {}

    def go(k):
        if k == len(order):
            return True
        v = order[k]
        for c in (1, 2, 3):
            if all(color.get(w) != c for w in g[v]):
                color[v] = c
                if go(k + 1):
                    return True
                del color[v]
        return False

    return go(0)


def proper_assignments(free, fixed, edges, palette):
    """All assignments of ``palette`` colors to ``free`` that are proper with ``fixed``."""
    out = []
    for combo in product(palette, repeat=len(free)):
        col = dict(fixed)
        col.update(zip(free, combo))
        if all(col[u] != col[v] for u, v in edges if u in col and v in col):
            out.append(combo)
    return out


def naive_spiral(G) -> list[list[int]]:
    """Spiral chains by direct list scanning, no cursors.

    ``a`` counts as entered from ``b`` (the walk closes the outer triangle),
    every other vertex from the vertex that reached it.
    """
    a, b, c = G.outer
    rot = G.rotation
    entered_from = {a: b, c: a, b: c}
    order = [a, c, b]
    seen = set(order)
    chains = [[a, c, b]]

    def first_unvisited(u):
        r = rot[u]
        k = r.index(entered_from[u])
        for step in range(1, len(r) + 1):
            w = r[(k + step) % len(r)]
            if w not in seen:
                return w
        return None

    u = b
    while len(seen) < G.n:
        w = first_unvisited(u)
        if w is None:
            t = next(x for x in reversed(order) if first_unvisited(x) is not None)
            w = first_unvisited(t)
            chains.append([])
            u = t
        entered_from[w] = u
        seen.add(w)
        order.append(w)
        chains[-1].append(w)
        u = w
    return chains
