#!/usr/bin/env python3
"""Regenerate the frozen golden documents under tests/golden/.

Run after any deliberate canonicalization or schema change, then re-check
the generator values against the brute-force oracles before committing.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from genusfield.cli import evaluate, render_json
from genusfield.config import DEFAULT_CONFIG

GOLDEN_DS = (65, 33, 41, 615, 5, 15)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--outdir",
        default=Path(__file__).resolve().parent.parent / "tests" / "golden",
        type=Path,
    )
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for d in GOLDEN_DS:
        doc, code = evaluate(d, 3, DEFAULT_CONFIG)
        assert code == 0, (d, code)
        path = args.outdir / f"d{d}.json"
        path.write_text(render_json(doc))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
