#!/usr/bin/env python3
"""Exploratory scans for questions without a known closed form.

Prints, for each small order, the maximum EUS over unicyclic graphs of a
given girth, the minimum EUS over connected graphs with p pendants, and the
maximum over chemical (max degree 4) unicyclic graphs. Nothing here is
checked against a target; the output is raw data.
"""

import argparse

from euslab.graph6 import emit_graph6
from euslab.search import EnumFilter, ScanError, extremal_scan


def show(label, n, filt, direction, workers):
    try:
        rep = extremal_scan(n, filt, direction=direction, workers=workers)
    except ScanError as exc:
        print(f"{label:28s} n={n}  --  ({exc})")
        return
    wits = " ".join(emit_graph6(w) for w in rep.witnesses)
    print(f"{label:28s} n={n}  {rep.optimum:14.9f}  {len(rep.witnesses)} class(es): {wits}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()

    for n in range(3, args.max_n + 1):
        for g in range(3, n + 1):
            show(f"max unicyclic girth={g}", n, EnumFilter(unicyclic=True, girth=g), "max", args.workers)
    for n in range(3, min(args.max_n, 7) + 1):
        for p in range(0, n - 1):
            show(f"min connected pendants={p}", n, EnumFilter(connected=True, pendant_count=p), "min",
                 args.workers)
    for n in range(3, args.max_n + 1):
        show("max chemical unicyclic", n, EnumFilter(unicyclic=True, max_degree=4), "max", args.workers)


if __name__ == "__main__":
    main()
