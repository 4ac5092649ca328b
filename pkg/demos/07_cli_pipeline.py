"""The file-based pipeline: markov -> hankel -> realize -> analyze.

Every library operation is also reachable through the `alpv` command with
JSON/CSV files in between, so realizations can be scripted without writing
Python.  This demo drives the chain in a temp directory and prints what
each stage produced.
"""

import json
import pathlib
import subprocess
import sys
import tempfile

from alpvreal import ALPVSystem
from alpvreal import fileio


def alpv(*args):
    cmd = [sys.executable, "-m", "alpvreal", *map(str, args)]
    print("$", "alpv", " ".join(map(str, args)))
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.stdout:
        print(proc.stdout, end="")
    if proc.returncode != 0:
        print(proc.stderr, end="")
        raise SystemExit(proc.returncode)


with tempfile.TemporaryDirectory() as tmp:
    base = pathlib.Path(tmp)
    system = base / "system.json"
    table = base / "table.json"
    hankel = base / "H.csv"
    realized = base / "realized.json"

    fileio.save_system(
        system,
        ALPVSystem(A=[[[0.5]], [[0.0]]], B=[[[1.0]], [[3.0]]], C=[[[1.0]], [[2.0]]]),
    )

    alpv("markov", system, "--horizon", 3, "-o", table)
    alpv("hankel", "--from-table", table, "--L", 0, "--M", 1, "-o", hankel)
    alpv("realize", "--from-hankel", hankel, "-o", realized)
    alpv("analyze", realized)

    print("\nHankel sub-matrix on disk:")
    print(hankel.read_text(), end="")
    print("sidecar:", json.loads((base / "H.csv.meta.json").read_text()))
    print("\nrecovered system dimension:", fileio.load_system(realized).n)
