"""Spiral chains on Kittell's graph.

Walk the outer triangle, spiral inward, cut the chains into segments, then
look at the ladder-fans between consecutive segments. Writes kittell.svg.
"""

from spiralchains.genlab.corpus import corpus_entry
from spiralchains.planar import validate_triangulation
from spiralchains.render import to_svg
from spiralchains.spiral import detect_theta_separator, extract_spiral_chains, fan_decomposition

G = corpus_entry("kittell").graph()
report = validate_triangulation(G)
print(f"n={G.n} e={G.num_edges} valid={report.ok} min degree={report.advisories['min_degree']}")

d = extract_spiral_chains(G)
print(f"{len(d.chains)} chains, {d.steps} rotation steps")
for k, chain in enumerate(d.chains):
    print(f"  chain {k} (parent {d.parents[k]}): {list(chain.vertices)}")
    for s in d.segments[k]:
        print(f"    segment {s.start}..{s.end}: {list(s.vertices(d))}")

# the first chain stops because a theta graph closes it off
theta = detect_theta_separator(G, d, 0)
print("theta separator:", theta)

for lad in fan_decomposition(G, d):
    kinds = "".join("c" if f else "." for f in lad.ctype_flags)
    print(f"ladder {lad.key}: {len(lad.triangles)} triangles, fans {kinds}, "
          f"outerplanar={lad.outerplanar}")

with open("kittell.svg", "w") as fh:
    fh.write(to_svg(G, d))
print("wrote kittell.svg")
