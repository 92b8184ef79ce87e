#!/usr/bin/env python3
"""Show the explicit witness constructions side by side with their tableaux.

Prints the stamped pair and the projected grid for a sample of permutation
tableaux of size n, the full-tableau pair for (m, n), and one erase-cell
reduction chain from the full grid down to a bare cross.

Example:
    python scripts/witness_gallery.py --n 5 --full 3 5
"""

import argparse
from itertools import product

from shufflesc import (
    Tableau,
    Transformation,
    erase_cell_letter,
    s_projection,
    tableau_step,
    witness_full,
    witness_permutation,
)


def show(pair, title):
    print(title)
    print(f"  grade {pair.grade}")
    print(f"  left  = {pair.left}")
    print(f"  right = {pair.right}")
    for line in s_projection(pair).render().splitlines():
        print(f"  {line}")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=5, help="permutation tableau size")
    parser.add_argument("--full", type=int, nargs=2, default=(3, 5), metavar=("M", "N"))
    args = parser.parse_args()

    n = args.n
    identity = Transformation.identity(n)
    show(witness_permutation(identity), f"diagonal (identity, n={n})")
    rotated = Transformation([(i + 1) % n for i in range(n)])
    show(witness_permutation(rotated), f"rotation by one (n={n})")

    m, fn = args.full
    show(witness_full(m, fn), f"full {m}x{fn} tableau")

    # erase-cell chain: full grid down to the cross through (0, 0)
    size = 3
    current = Tableau(size, size, set(product(range(size), range(size))))
    print(f"erase-cell chain on the {size}x{size} grid (keep row 0 and column 0):")
    print(current.render())
    for i, j in sorted(set(product(range(size), range(size)))):
        if i == 0 or j == 0:
            continue
        letter = erase_cell_letter(current, i, j, 0, 0)
        current = tableau_step(current, letter)
        print(f"-- erase ({i},{j}) via rows {i}->0, columns {j}->0 -->")
        print(current.render())


if __name__ == "__main__":
    main()
