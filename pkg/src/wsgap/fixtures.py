"""Reference values for the two preset curves, frozen as test fixtures.

Everything here is embedded data: the strictly positive relative
maximal elements, the pure-gap sets, the per-maximal nonnegative nabla
sets and the pure-gap witness choices for the Hermitian curve over
GF(16) at three points (a=4, b=5) and the norm-trace curve over GF(8)
at three points (a=4, b=7).  The conformance harness in ``verify``
replays the library against these sets with exact set equality.
"""

from __future__ import annotations

HERMITIAN_Q4 = (4, 5, 3, 16)      # (a, b, m, field_size)
NORM_TRACE_L2_R3 = (4, 7, 3, 8)

# gamma^1 .. gamma^10: the strictly positive relative maximals at
# (a=4, b=5, m=3), in ascending order.
RELATIVE_MAXIMALS_POSITIVE_453 = (
    (1, 1, 11), (1, 6, 6), (1, 11, 1), (2, 2, 7), (2, 7, 2),
    (3, 3, 3), (6, 1, 6), (6, 6, 1), (7, 2, 2), (11, 1, 1),
)

PURE_GAPS_453 = (
    (1, 1, 1), (2, 1, 1), (1, 1, 2), (1, 2, 1), (3, 1, 1), (1, 1, 3),
    (1, 3, 1), (2, 1, 2), (2, 2, 1), (1, 2, 2), (3, 1, 2), (2, 1, 3),
    (3, 2, 1), (1, 2, 3), (2, 3, 1), (1, 3, 2),
)

# The nonnegative nabla set of each gamma^k, keyed by the maximal itself.
_R11 = tuple(range(11))
_R7 = tuple(range(7))
_R6 = tuple(range(6))
_R3 = tuple(range(3))
_R2 = tuple(range(2))

NABLA_SETS_453 = {
    (1, 1, 11): tuple({(1, 0, s) for s in _R11} | {(0, 1, s) for s in _R11}
                      | {(0, 0, 11)}),
    (1, 6, 6): tuple({(1, r, s) for r in _R6 for s in _R6}
                     | {(0, 6, s) for s in _R6} | {(0, r, 6) for r in _R6}),
    (1, 11, 1): tuple({(1, r, 0) for r in _R11} | {(0, 11, 0)}
                      | {(0, r, 1) for r in _R11}),
    (2, 2, 7): tuple({(2, r, s) for r in _R2 for s in _R7}
                     | {(r, 2, s) for r in _R2 for s in _R7}
                     | {(r, s, 7) for r in _R2 for s in _R2}),
    (2, 7, 2): tuple({(2, r, s) for r in _R7 for s in _R2}
                     | {(s, r, 2) for s in _R2 for r in _R7}
                     | {(r, 7, s) for r in _R2 for s in _R2}),
    (3, 3, 3): tuple({(3, r, s) for r in _R3 for s in _R3}
                     | {(r, 3, s) for r in _R3 for s in _R3}
                     | {(r, s, 3) for r in _R3 for s in _R3}),
    (6, 1, 6): tuple({(6, 0, s) for s in _R6} | {(r, 1, s) for r in _R6 for s in _R6}
                     | {(r, 0, 6) for r in _R6}),
    (6, 6, 1): tuple({(6, s, 0) for s in _R6} | {(r, 6, 0) for r in _R6}
                     | {(r, s, 1) for r in _R6 for s in _R6}),
    (7, 2, 2): tuple({(7, r, s) for r in _R2 for s in _R2}
                     | {(r, 2, s) for r in _R7 for s in _R2}
                     | {(r, s, 2) for r in _R7 for s in _R2}),
    (11, 1, 1): tuple({(11, 0, 0)} | {(s, 1, 0) for s in _R11}
                      | {(s, 0, 1) for s in _R11}),
}

# Witness triples (one relative maximal per coordinate) for each pure
# gap at (4, 5, 3): the first valid choice per coordinate in sorted
# order of the maximals.
PURE_GAP_WITNESSES_453 = {
    (1, 1, 1): ((1, 6, 6), (6, 1, 6), (6, 6, 1)),
    (2, 1, 1): ((2, 2, 7), (6, 1, 6), (6, 6, 1)),
    (1, 1, 2): ((1, 6, 6), (6, 1, 6), (2, 7, 2)),
    (1, 2, 1): ((1, 6, 6), (2, 2, 7), (6, 6, 1)),
    (3, 1, 1): ((3, 3, 3), (6, 1, 6), (6, 6, 1)),
    (1, 1, 3): ((1, 6, 6), (6, 1, 6), (3, 3, 3)),
    (1, 3, 1): ((1, 6, 6), (3, 3, 3), (6, 6, 1)),
    (2, 1, 2): ((2, 2, 7), (6, 1, 6), (7, 2, 2)),
    (2, 2, 1): ((2, 7, 2), (7, 2, 2), (6, 6, 1)),
    (1, 2, 2): ((1, 6, 6), (2, 2, 7), (2, 7, 2)),
    (3, 1, 2): ((3, 3, 3), (6, 1, 6), (7, 2, 2)),
    (2, 1, 3): ((2, 2, 7), (6, 1, 6), (3, 3, 3)),
    (3, 2, 1): ((3, 3, 3), (7, 2, 2), (6, 6, 1)),
    (1, 2, 3): ((1, 6, 6), (2, 2, 7), (3, 3, 3)),
    (2, 3, 1): ((2, 7, 2), (3, 3, 3), (6, 6, 1)),
    (1, 3, 2): ((1, 6, 6), (3, 3, 3), (2, 7, 2)),
}

RELATIVE_MAXIMALS_POSITIVE_473 = (
    (17, 1, 1), (10, 1, 8), (3, 1, 15), (13, 2, 2), (6, 2, 9),
    (9, 3, 3), (2, 3, 10), (5, 4, 4), (1, 5, 5), (10, 8, 1),
    (3, 8, 8), (6, 9, 2), (2, 10, 3), (3, 15, 1),
)

PURE_GAPS_473 = (
    (1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 1, 4), (1, 2, 1), (1, 2, 2),
    (1, 2, 3), (1, 2, 4), (1, 3, 1), (1, 3, 2), (1, 3, 3), (1, 3, 4),
    (1, 4, 1), (1, 4, 2), (1, 4, 3), (2, 1, 1), (2, 1, 2), (2, 1, 3),
    (2, 1, 4), (2, 1, 8), (2, 1, 9), (2, 2, 1), (2, 2, 2), (2, 2, 3),
    (2, 2, 4), (2, 2, 8), (2, 3, 1), (2, 3, 2), (2, 4, 1), (2, 4, 2),
    (2, 8, 1), (2, 8, 2), (2, 9, 1), (3, 1, 1), (3, 1, 2), (3, 1, 3),
    (3, 1, 4), (3, 2, 1), (3, 2, 2), (3, 2, 3), (3, 2, 4), (3, 3, 1),
    (3, 3, 2), (3, 4, 1), (3, 4, 2), (5, 1, 1), (5, 1, 2), (5, 1, 3),
    (5, 2, 1), (5, 2, 2), (5, 2, 3), (5, 3, 1), (5, 3, 2), (6, 1, 1),
    (6, 1, 2), (6, 1, 3), (6, 2, 1), (6, 3, 1), (9, 1, 1), (9, 1, 2),
    (9, 2, 1),
)
