"""Three ways to four-color Errera's graph.

The pure spiral method gets stuck on it; the failure witness replays
exactly; Kempe repair finishes the job. Kempe-Kittell and the exact solver
give independent colorings to compare against.
"""

from spiralchains.coloring import (FailureWitness, exact_four_color, kempe_kittell_color,
                                   replay_witness, spiral_color, verify_coloring)
from spiralchains.genlab.corpus import corpus_entry

G = corpus_entry("errera").graph()

pure = spiral_color(G)
if isinstance(pure, FailureWitness):
    print(f"pure spiral: stuck at vertex {pure.stuck_vertex}, "
          f"neighbors use {list(pure.blocking)} (stage {pure.stage})")
    print("replay reproduces it:", replay_witness(pure).reproduced)

repaired = spiral_color(G, kempe_repair=True)
print("with Kempe repair:", repaired.colors, verify_coloring(G, repaired).ok)
for note in repaired.notes:
    print("  note:", note)
for entry in repaired.schedule:
    print(f"  segment {entry.segment} at {entry.position}: palette {entry.palette} ({entry.reason})")

kk = kempe_kittell_color(G, seed=7)
print("Kempe-Kittell:", kk.colors, kk.stages)

exact = exact_four_color(G)
print("exact:", exact.colors, f"{exact.stages['nodes']} search nodes")
print("three colors suffice?", bool(exact_four_color(G, k=3)))
