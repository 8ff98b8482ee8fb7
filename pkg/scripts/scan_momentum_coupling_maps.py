#!/usr/bin/env python3
"""2D maps of concurrence and probability over (g_A, k) at fixed g_B = 3
for the exchange model: the resonance ridges in the momentum-coupling
plane."""

import sys
from pathlib import Path

from entscat.cli import main

OUT = Path(__file__).resolve().parent.parent / "out"


def run(out_dir=OUT):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / "exchange_cp_ga_k.csv"
    code = main([
        "scan", "--model", "xy", "--gB", "3",
        "--axis", "gA=0.05:6:81", "--axis", "k=0.05:10:120",
        "--out", str(path),
    ])
    if code != 0:
        raise SystemExit(code)
    return [path]


if __name__ == "__main__":
    run(sys.argv[1] if len(sys.argv) > 1 else OUT)
