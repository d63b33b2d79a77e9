#!/usr/bin/env python3
"""Run every exhaustive check up to a given order and write a JSON report."""

import argparse
import sys

from euslab.report import ReportDocument
from euslab.verify import Status, run_all


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--out", default="verify_report.json")
    args = ap.parse_args()

    verdicts = run_all(args.max_n, args.workers)
    doc = ReportDocument(
        command=sys.argv,
        verdicts=[v.to_dict() for v in verdicts],
        timings={v.claim: v.elapsed for v in verdicts},
    )
    with open(args.out, "w") as fh:
        fh.write(doc.to_json())
    counts = {s: sum(v.status is s for v in verdicts) for s in Status}
    for v in verdicts:
        if v.status is Status.REFUTED:
            print(f"REFUTED {v.claim}: {v.reason}")
    print(", ".join(f"{n} {s.value}" for s, n in counts.items()), f"-> {args.out}")
    return 1 if counts[Status.REFUTED] else 0


if __name__ == "__main__":
    sys.exit(main())
