"""Regenerate the shipped corpus documents under src/spiralchains/genlab/data.

Adjacency lists for the Errera and Kittell graphs are transcribed from the
SageMath graph generators (``graphs.ErreraGraph`` and ``graphs.KittellGraph``).
The platonic solids come from networkx. networkx also computes the planar
embeddings; the outer triangle is the first traced face ``(x, y, z)``,
declared as ``outer x z y`` so that the clockwise walk is ``x -> y -> z``. This script is a
development tool and is not imported by the package.
"""

from pathlib import Path

import networkx as nx

from spiralchains.planar import PlanarTriangulation, serialize, trace_faces, validate_triangulation

DATA = Path(__file__).resolve().parents[1] / "src" / "spiralchains" / "genlab" / "data"

ERRERA = {
    0: [1, 7, 14, 15, 16], 1: [2, 9, 14, 15], 2: [3, 8, 9, 10, 14],
    3: [4, 9, 10, 11], 4: [5, 10, 11, 12], 5: [6, 11, 12, 13],
    6: [7, 8, 12, 13, 16], 7: [13, 15, 16], 8: [10, 12, 14, 16],
    9: [11, 13, 15], 10: [12], 11: [13], 13: [15], 14: [16],
}

KITTELL = {
    0: [1, 2, 4, 5, 6, 7], 1: [0, 2, 7, 10, 11, 13],
    2: [0, 1, 11, 4, 14], 3: [16, 12, 4, 5, 14], 4: [0, 2, 3, 5, 14],
    5: [0, 16, 3, 4, 6], 6: [0, 5, 7, 15, 16, 17, 18],
    7: [0, 1, 6, 8, 13, 18], 8: [9, 18, 19, 13, 7],
    9: [8, 10, 19, 20, 13], 10: [1, 9, 11, 13, 20, 21],
    11: [1, 2, 10, 12, 14, 15, 21], 12: [11, 16, 3, 14, 15],
    13: [8, 1, 10, 9, 7], 14: [11, 12, 2, 3, 4],
    15: [6, 11, 12, 16, 17, 21, 22],
    16: [3, 12, 5, 6, 15], 17: [18, 19, 22, 6, 15],
    18: [8, 17, 19, 6, 7], 19: [8, 9, 17, 18, 20, 22],
    20: [9, 10, 19, 21, 22], 21: [10, 11, 20, 22, 15],
    22: [17, 19, 20, 21, 15],
}

ENTRIES = {
    "k4": ("complete graph K4, the smallest triangulation", nx.complete_graph(4)),
    "octahedron": ("octahedron, 3-chromatic", nx.octahedral_graph()),
    "icosahedron": ("icosahedron, 5-regular", nx.icosahedral_graph()),
    "errera": ("Errera 1921, Kempe-method failure graph (adjacency from SageMath ErreraGraph)",
               nx.Graph(nx.from_dict_of_lists(ERRERA))),
    "kittell": ("Kittell 1935, Kempe-method failure graph (adjacency from SageMath KittellGraph)",
                nx.Graph(nx.from_dict_of_lists(KITTELL))),
}


def embed(graph: nx.Graph) -> PlanarTriangulation:
    ok, emb = nx.check_planarity(graph)
    assert ok
    nodes = sorted(graph)
    assert nodes == list(range(len(nodes)))
    rot = [list(emb.neighbors_cw_order(v)) for v in nodes]
    probe = PlanarTriangulation(rot, (0, 1, 2))
    x, y, z = trace_faces(probe)[0].vertices
    outer = (x, z, y)
    return PlanarTriangulation.from_rotations(rot, outer)


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    for name, (note, graph) in ENTRIES.items():
        G = embed(graph)
        report = validate_triangulation(G)
        assert report.ok, (name, report)
        header = f"# {name}: {note}\n# n={G.n} e={G.num_edges}\n"
        (DATA / f"{name}.rot").write_text(header + serialize(G))
        print(name, G, report.advisories)


if __name__ == "__main__":
    main()
