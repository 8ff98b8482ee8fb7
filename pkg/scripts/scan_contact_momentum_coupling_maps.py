#!/usr/bin/env python3
"""2D maps of the per-side concurrences and probabilities over (g_A, k) at
fixed g_B = 1.5 for the contact model, where the transmitted and reflected
detections genuinely differ."""

import sys
from pathlib import Path

from entscat.cli import main

OUT = Path(__file__).resolve().parent.parent / "out"


def run(out_dir=OUT):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / "contact_cp_ga_k.csv"
    code = main([
        "scan", "--model", "heis", "--gB", "1.5",
        "--axis", "gA=0.05:6:81", "--axis", "k=0.05:10:120",
        "--out", str(path),
    ])
    if code != 0:
        raise SystemExit(code)
    return [path]


if __name__ == "__main__":
    run(sys.argv[1] if len(sys.argv) > 1 else OUT)
