"""Survey the moduli-space dimension over pairwise-coprime triples.

Evaluates both the exact and the floating route for every triple with
a3 <= --max-a3 and prints a histogram of dimensions, the worst float
residual and the triples (if any) where the two routes disagree.

    python3 scripts/survey_moduli_dimension.py --max-a3 120 --min-a1 2
"""

import argparse
import collections
import json
import math
import time

from wdcert.moduli import dimension_exact, dimension_float


def triples(max_a3: int, min_a1: int):
    for a3 in range(3, max_a3 + 1):
        for a2 in range(2, a3):
            if math.gcd(a2, a3) != 1:
                continue
            for a1 in range(min_a1, a2):
                if math.gcd(a1, a2) == 1 and math.gcd(a1, a3) == 1:
                    yield a1, a2, a3


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-a3", type=int, default=200)
    parser.add_argument("--min-a1", type=int, default=1, choices=(1, 2))
    parser.add_argument("--json", action="store_true", help="print a JSON summary instead of text")
    args = parser.parse_args(argv)

    start = time.perf_counter()
    histogram = collections.Counter()
    worst, worst_at = 0.0, None
    disagreements = []
    for fibers in triples(args.max_a3, args.min_a1):
        exact = dimension_exact(fibers)
        approx = dimension_float(fibers)
        residual = abs(approx - round(approx))
        if residual > worst:
            worst, worst_at = residual, fibers
        if exact.denominator != 1 or round(approx) != exact:
            disagreements.append(fibers)
        histogram[exact] += 1
    summary = {
        "max_a3": args.max_a3,
        "min_a1": args.min_a1,
        "triples": sum(histogram.values()),
        "dimensions": {str(d): histogram[d] for d in sorted(histogram)},
        "worst_residual": worst,
        "worst_at": worst_at,
        "disagreements": disagreements[:20],
        "seconds": round(time.perf_counter() - start, 2),
    }
    if args.json:
        print(json.dumps(summary, indent=2, sort_keys=True))
    else:
        print(f"{summary['triples']} triples with a1 >= {args.min_a1}, a3 <= {args.max_a3} "
              f"({summary['seconds']}s)")
        for dim, count in summary["dimensions"].items():
            print(f"  dimension {dim:>4}: {count}")
        print(f"worst float residual {worst:.2e} at {worst_at}")
        print(f"disagreements: {len(disagreements)}")
    return 1 if disagreements else 0


if __name__ == "__main__":
    raise SystemExit(main())
