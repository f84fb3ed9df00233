"""Search for chains of torus knots whose iterated doubles certify as independent.

For each coprime start pair (p, q) with q <= --max-q, grow the least chain
of --length members and certify it; print one line per start pair, or
write every certificate to --out as a JSON object keyed by "p,q".

    python3 scripts/search_families.py --max-q 9 --length 4 --depth 2
"""

import argparse
import json
import math
from pathlib import Path

from wdcert.criterion import certify_independence
from wdcert.family import FamilyMember, generate_family


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-q", type=int, default=9)
    parser.add_argument("--length", type=int, default=4)
    parser.add_argument("--depth", type=int, default=1, help="doubling depth r for every member")
    parser.add_argument("--out", type=Path, help="write all certificates here")
    args = parser.parse_args(argv)

    certificates = {}
    failures = 0
    for q in range(3, args.max_q + 1):
        for p in range(2, q):
            if math.gcd(p, q) != 1:
                continue
            pairs = generate_family((p, q), args.length)
            cert = certify_independence([FamilyMember(a, b, r=args.depth) for a, b in pairs])
            certificates[f"{p},{q}"] = cert.to_json()
            failures += not cert.independent
            chain = " -> ".join(f"T({a},{b})" for a, b in pairs)
            print(f"{cert.verdict:<28} {chain}")
    if args.out:
        args.out.write_text(json.dumps(certificates, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    print(f"{len(certificates)} chains, {failures} not certified")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
