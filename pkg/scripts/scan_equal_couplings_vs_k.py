#!/usr/bin/env python3
"""Concurrence and detection probability versus incident momentum for the
exchange model at equal couplings g = 3: the resonance comb with unit
concurrence at integer k and oscillations that damp out for k above the
opacity crossover."""

import sys
from pathlib import Path

from entscat.cli import main

OUT = Path(__file__).resolve().parent.parent / "out"


def run(out_dir=OUT):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / "exchange_cp_vs_k.csv"
    code = main([
        "scan", "--model", "xy", "--gA", "3", "--gB", "3",
        "--axis", "k=0.05:10:200", "--out", str(path),
    ])
    if code != 0:
        raise SystemExit(code)
    return [path]


if __name__ == "__main__":
    run(sys.argv[1] if len(sys.argv) > 1 else OUT)
