#!/usr/bin/env python3
"""Measure how the bare-variable lexicographic history resists translation.

The history [x1, ..., xn] has size linear in n but splits every model into
its own equivalence class, so any equivalent level (or natural) order must
carry about 2^n members.  This script prints the measured gap per n.
"""

import argparse

from doxastic.analysis import blowup_experiment, format_blowup_table


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=10, help="largest variable count")
    args = parser.parse_args()
    print(format_blowup_table(blowup_experiment(args.max_n)))


if __name__ == "__main__":
    main()
