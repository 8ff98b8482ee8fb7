#!/usr/bin/env python3
"""Concurrence and probability over the (omega_A, omega_B) quadrant at the
resonant phase sin^2(kd) = 1 for the exchange model: the probability crests
toward 1/2 near omega_A = 1/sqrt(2) at large omega_B, and C = 1 runs along
omega_A = omega_B/(1 + 2 omega_B^2)."""

import sys
from pathlib import Path

from entscat.cli import main

OUT = Path(__file__).resolve().parent.parent / "out"


def run(out_dir=OUT):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / "exchange_resonant_grid.csv"
    code = main([
        "scan", "--model", "xy", "--sin2kd", "1",
        "--axis", "omegaA=0.02:3:100", "--axis", "omegaB=0.02:3:100",
        "--out", str(path),
    ])
    if code != 0:
        raise SystemExit(code)
    return [path]


if __name__ == "__main__":
    run(sys.argv[1] if len(sys.argv) > 1 else OUT)
