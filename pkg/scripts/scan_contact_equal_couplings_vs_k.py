#!/usr/bin/env python3
"""Per-side concurrences and probabilities versus incident momentum for the
contact model at equal couplings g = 1.5: same resonance structure as the
exchange model, but the reflected and transmitted detections separate."""

import sys
from pathlib import Path

from entscat.cli import main

OUT = Path(__file__).resolve().parent.parent / "out"


def run(out_dir=OUT):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / "contact_cp_vs_k.csv"
    code = main([
        "scan", "--model", "heis", "--gA", "1.5", "--gB", "1.5",
        "--axis", "k=0.05:10:200", "--out", str(path),
    ])
    if code != 0:
        raise SystemExit(code)
    return [path]


if __name__ == "__main__":
    run(sys.argv[1] if len(sys.argv) > 1 else OUT)
