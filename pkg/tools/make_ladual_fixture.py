"""Produce the large-annihilator dual table for lam = mu = ((1),) using naive_lr only.

Run from the repository root:  python3 tools/make_ladual_fixture.py
"""
import json
from pathlib import Path

from olacat.oracle import naive_lr
from olacat.partitions import Partition, partitions_of

LAM = Partition([1])
MU = Partition([1])

table = {}
for g in range(min(LAM.size, MU.size) + 1):
    for gamma in partitions_of(g):
        for alpha in partitions_of(LAM.size - g):
            for beta in partitions_of(MU.size - g):
                c = naive_lr(alpha, gamma, LAM) * naive_lr(beta, gamma, MU)
                if c:
                    key = f"{alpha};{beta}"
                    table[key] = table.get(key, 0) + c

out = {"lambda": [str(LAM)], "mu": [str(MU)], "source": "oracle.naive_lr", "table": table}
path = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "ladual_n1_1_1.json"
path.write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
print(path.read_text())
