#!/usr/bin/env python3
"""Regenerate the golden artifacts: preset certificates and diagram charts.

Run from the repository root after any intentional format change, then review
the diff before committing.
"""

from pathlib import Path

from ramsey43.certificate import certify, encode_certificate
from ramsey43.checks import render_diagram
from ramsey43.coloring import BLUE, RED, PRESETS, build, preset

ROOT = Path(__file__).resolve().parent.parent

DIAGRAMS = {
    "cyc43-blue-1.txt": ("cyc43", BLUE, [1]),
    "cyc43-blue-1-2.txt": ("cyc43", BLUE, [1, 2]),
    "cyc43-red-1-2.txt": ("cyc43", RED, [1, 2]),
    "variant-a-blue-4-5.txt": ("variant-a", BLUE, [4, 5]),
    "variant-a-blue-11-32.txt": ("variant-a", BLUE, [11, 32]),
}


def main() -> None:
    certs = ROOT / "certs"
    certs.mkdir(exist_ok=True)
    for name in sorted(PRESETS):
        path = certs / f"{name}.cert"
        path.write_text(encode_certificate(certify(preset(name))), newline="")
        print(f"wrote {path}")

    diagrams = ROOT / "docs" / "diagrams"
    diagrams.mkdir(parents=True, exist_ok=True)
    for filename, (preset_name, color, rows) in DIAGRAMS.items():
        path = diagrams / filename
        path.write_text(render_diagram(build(preset(preset_name)), color, rows),
                        newline="")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
