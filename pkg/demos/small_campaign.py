"""A small randomized campaign.

Generates 300 triangulations, colors each with every engine, verifies the
results and tallies what happened. Witnesses land in ./witnesses.
"""

import json

from spiralchains.genlab.fuzz import fuzz

report = fuzz(300, nmin=4, nmax=40, seed=11, witness_dir="witnesses")
doc = report.to_dict()
print(f"{report.instances} instances in {report.seconds:.1f} s")
for algo, t in sorted(doc["tallies"].items()):
    print(f"  {algo:14s} {t['success']:4d} colored  {t['failure']:4d} witnesses  "
          f"{t['improper']} improper")
print("stages used on success:", json.dumps(doc["stage_activation"], sort_keys=True))
print("exact solver agreed on", doc["exact"])
print("chains per instance:", dict(sorted(doc["chain_counts"].items(), key=lambda kv: int(kv[0]))))
