"""Render the Pauli coefficient landscape of a feature map.

Every two-qubit feature state is fully described by 16 real numbers, the
coefficients of its density matrix in the Pauli basis.  Sweeping the input
point over a grid turns each coefficient into a 2-d image.  This script
renders all 16 panels for one encoding and writes them as CSV grids and
grayscale PGM images, which makes the structure of the encoding visible
at a glance: separable encodings concentrate weight on single-qubit axes,
entangling ones light up the two-letter panels.

Run:  python3 demos/coefficient_heatmaps.py [encoding] [outdir]
"""

import sys
from pathlib import Path

import qkmap as qk


def main():
    encoding_id = sys.argv[1] if len(sys.argv) > 1 else "ef1"
    outdir = Path(sys.argv[2] if len(sys.argv) > 2 else "heatmaps")
    outdir.mkdir(parents=True, exist_ok=True)

    spec = qk.builtin(encoding_id)
    resolution = 101
    print(f"encoding {encoding_id}: sweeping {resolution}x{resolution} grid "
          f"over [-1, 1]^2 for all 16 Pauli axes")
    grids = qk.coefficient_grids(spec, range(16), (-1.0, 1.0), resolution)

    for index, grid in zip(range(16), grids):
        label = qk.pauli_label(index)
        qk.grid_to_csv(grid, outdir / f"{label}.csv")
        qk.grid_to_pgm(grid, outdir / f"{label}.pgm")
        lo, hi = grid.min(), grid.max()
        bar = "#" * int(40 * (hi - lo) / 0.5)
        print(f"  {label}: range [{lo:+.3f}, {hi:+.3f}] {bar}")

    print(f"wrote 16 CSV grids and 16 PGM images to {outdir}/")
    print("flat panels (II is always exactly 0.25) render as uniform gray")


if __name__ == "__main__":
    main()
