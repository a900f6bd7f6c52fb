"""Export twice with different worker counts and require byte-identical files."""
import filecmp
import os
import subprocess
import sys

cli, out = sys.argv[1], sys.argv[2]
runs = []
for workers in (1, 3):
    d = os.path.join(out, f"w{workers}")
    subprocess.run([cli, "export", "--q", "5", "11", "--workers", str(workers), "--out", d], check=True,
                   stdout=subprocess.DEVNULL)
    runs.append(d)

names = sorted(os.listdir(runs[0]))
expected = {f"{kind}_q{q}.{ext}" for q in (5, 11) for kind in ("gamma", "gamma_tilde", "cubic")
            for ext in ("dot", "edges")}
expected |= {f"intersecting_{g}_q{q}.witness" for q in (5, 11) for g in ("psl", "pgl")}
missing = expected - set(names)
if missing:
    sys.exit(f"missing exports: {sorted(missing)}")
if names != sorted(os.listdir(runs[1])):
    sys.exit("file sets differ between worker counts")
match, mismatch, errors = filecmp.cmpfiles(runs[0], runs[1], names, shallow=False)
if mismatch or errors:
    sys.exit(f"differing files: {mismatch + errors}")

with open(os.path.join(runs[0], "cubic_q5.edges")) as f:
    edges = [tuple(map(int, line.split())) for line in f]
if len(edges) != 30 or any(u >= v for u, v in edges) or edges != sorted(edges):
    sys.exit("cubic_q5.edges is not 30 sorted edges")
print(f"{len(names)} files identical")
