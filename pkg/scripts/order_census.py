"""Census of order classifications over a sweep of lens spaces.

For every L(alpha, beta) with odd alpha <= N and odd beta (one
representative per class as stored, no mirror folding), classify the
order of the class and tally which certificate decided it.  The
unresolved pairs are listed so they can be inspected by hand.

Usage: python scripts/order_census.py --alpha-max 99
"""

import argparse
import sys
from collections import Counter
from math import gcd

from cobkit.cli import dec
from cobkit.lens import LensSpace, classify_order


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alpha-max", type=int, default=99)
    parser.add_argument(
        "--show-unknown", action="store_true", help="list every unresolved pair"
    )
    args = parser.parse_args(argv)

    tally = Counter()
    reasons = Counter()
    unknown = []
    total = 0
    for alpha in range(3, args.alpha_max + 1, 2):
        for beta in range(1, alpha, 2):
            if gcd(alpha, beta) != 1:
                continue
            total += 1
            report = classify_order(LensSpace(alpha, beta))
            tally[report.order] += 1
            if report.order == "inf":
                kind = (
                    "bound certificate"
                    if "expansion" not in report.certificate.reason
                    else "positive expansion"
                )
                reasons[kind] += 1
            elif report.order == "?":
                unknown.append((alpha, beta, report.bounds))

    print(f"classes scanned: {total} (odd alpha <= {args.alpha_max})")
    for label in ("inf", "<=2", "0", "?"):
        if tally[label]:
            print(f"  order {label:>4}: {tally[label]}")
    for kind, count in sorted(reasons.items()):
        print(f"    via {kind}: {count}")
    if unknown:
        print(f"unresolved: {len(unknown)}")
        if args.show_unknown:
            for alpha, beta, bounds in unknown:
                print(
                    f"  L({alpha},{beta})  m in [{dec(bounds.m_lower)}, "
                    f"{dec(bounds.mbar_upper)}]  R={bounds.rokhlin.value}"
                )
    return 0


if __name__ == "__main__":
    sys.exit(main())
