"""Historical Kempe-failure graphs and small reference triangulations."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from ..planar import PlanarTriangulation, load_rotation_system

NAMES = ("k4", "octahedron", "icosahedron", "errera", "kittell")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    document: str
    n: int
    e: int
    note: str

    def graph(self) -> PlanarTriangulation:
        return load_rotation_system(self.document)


def _entry(name: str) -> CorpusEntry:
    text = resources.files(__package__).joinpath("data", f"{name}.rot").read_text()
    note = text.splitlines()[0].lstrip("# ").split(": ", 1)[1]
    G = load_rotation_system(text)
    return CorpusEntry(name, text, G.n, G.num_edges, note)


def corpus() -> list[CorpusEntry]:
    """Every shipped entry, validated on load."""
    return [_entry(name) for name in NAMES]


def corpus_entry(name: str) -> CorpusEntry:
    if name not in NAMES:
        raise KeyError(f"no corpus entry {name!r}; available: {', '.join(NAMES)}")
    return _entry(name)
