#!/usr/bin/env python3
"""Print the worked examples for the two preset curves.

Runs the library end to end on the Hermitian curve over GF(16) and the
norm-trace curve over GF(8), three points each: relative maximals, pure
gaps, the per-maximal nabla sets, and the two-point pairing for the
Hermitian pair case.
"""

import wsgap as w


def show(title, tuples):
    print(f"\n{title} ({len(tuples)}):")
    print("  " + ", ".join(str(t) for t in tuples))


def main():
    for label, params in [
        ("Hermitian curve, q=4 (a=4, b=5), m=3", w.hermitian_params(4, 3)),
        ("Norm-trace curve, ell=2, r=3 (a=4, b=7), m=3", w.norm_trace_params(2, 3, 3)),
    ]:
        print("=" * 72)
        print(f"{label}: genus {params.genus}")
        relmax = w.lambda_nonneg(params)
        show("strictly positive relative maximals", relmax)
        report = w.pure_gaps(params)
        show("pure gaps", report.pure_gaps)
        print(f"\ngaps: {report.stats['gap_count']} tuples in "
              f"[0, {2 * params.genus - 1}]^3")
        first = relmax[0]
        show(f"nabla set of {first}", w.nabla_bar_nonneg(params, first))

    print("=" * 72)
    pair = w.curve_params(4, 5, 2)
    table = w.sigma_pair(pair)
    print(f"Hermitian pair case (a=4, b=5, m=2): genus {pair.genus}")
    print(f"gap sequence at P1: {table.gaps_q1}")
    print(f"gap sequence at P2: {table.gaps_q2}")
    print(f"sigma: {table.sigma}")
    show("matched gap pairs", table.gamma_pairs)
    print(f"inversions: {len(table.inversions)} "
          f"(= number of pure gaps: {len(w.pure_gaps(pair).pure_gaps)})")


if __name__ == "__main__":
    main()
