"""Worked examples with published parameters.

Each entry is a :class:`~normtrace.specfile.CodeSpec` plus the parameters
it is expected to reproduce.
"""

from __future__ import annotations

from dataclasses import dataclass

from normtrace.specfile import CodeSpec


@dataclass(frozen=True)
class Example:
    name: str
    spec: CodeSpec
    n: int
    k: int
    d: int | None  # None where no distance was published


def _spec(q, r, u, pairs=(), family=None):
    return CodeSpec(q, r, u, family, tuple(sorted(set(pairs), key=lambda ab: (ab[1], ab[0]))))


STAIRCASE_F9 = Example(
    "[27,10,15] staircase over F_9",
    _spec(3, 2, 4, [(i, j) for i in (0, 1) for j in range(3)] + [(2, 0), (2, 1), (3, 0), (4, 0)]),
    27, 10, 15,
)

STAIRCASE_F16 = Example(
    "[32,12,12] staircase over F_16",
    _spec(2, 4, 3, [(0, j) for j in range(6)] + [(i, j) for i in (1, 2) for j in range(3)]),
    32, 12, 12,
)

DEGREE4_F9 = Example("degree <= 4 set over F_9", _spec(3, 2, 4, family="degree:4"), 27, 12, None)

BOX_F16 = Example("6x4 box over F_16, u=5", _spec(2, 4, 5, family="box:6x4"), 48, 24, None)

# (monomials, dimension, minimum distance) on x^2 = y^3 + y over F_9, n = 15
_LENGTH15_TABLE = [
    ([(0, 0), (0, 1)], 2, 13),
    ([(0, 0), (0, 1), (1, 0)], 3, 12),
    ([(0, 0), (0, 1), (0, 2), (1, 0)], 4, 11),
    ([(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)], 5, 10),
    ([(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)], 6, 9),
    ([(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0)], 7, 8),
    ([(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1)], 8, 7),
    ([(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0)], 9, 6),
    ([(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (3, 0)], 10, 5),
    ([(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1)], 11, 4),
    ([(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (4, 0)], 12, 3),
]
LENGTH15_ROWS = [Example(f"length-15 code k={k}", _spec(3, 2, 2, pairs), 15, k, d) for pairs, k, d in _LENGTH15_TABLE]

ONEPOINT_23 = Example("one-point s=23 over F_9", _spec(3, 2, 4, family="onepoint:23"), 27, 21, 4)
AUGMENTED_23 = Example("one-point s=23 plus x^7 y", _spec(3, 2, 4, [(7, 1)], family="onepoint:23"), 27, 22, 4)
ONEPOINT_21 = Example("one-point s=21 over F_9", _spec(3, 2, 4, family="onepoint:21"), 27, 19, 6)
AUGMENTED_21 = Example("one-point s=21 plus x^6 y", _spec(3, 2, 4, [(6, 1)], family="onepoint:21"), 27, 20, 6)

_EXTRA_1539 = [(44, 9), (45, 9), (46, 8), (47, 7), (48, 7), (49, 6), (50, 5), (50, 6), (51, 5),
               (52, 4), (53, 3), (54, 3), (55, 2), (56, 1)]
ONEPOINT_1539 = Example("one-point s=1539 over F_81", _spec(3, 4, 40, family="onepoint:1539"), 2187, 1033, 648)
AUGMENTED_1539 = Example("one-point s=1539 plus 14 monomials", _spec(3, 4, 40, _EXTRA_1539, family="onepoint:1539"), 2187, 1047, 648)

HERMITIAN_F4 = Example("Hermitian F_4, a <= 2, b <= 1", _spec(2, 2, 3, family="box:3x2"), 8, 6, None)

POINT_COUNT_CASES = [(2, 2, 1), (2, 2, 3), (3, 2, 1), (3, 2, 2), (3, 2, 4), (2, 4, 1), (2, 4, 3), (2, 4, 5), (4, 2, 5), (2, 3, 7)]

ALL_EXAMPLES = [STAIRCASE_F9, STAIRCASE_F16, DEGREE4_F9, BOX_F16, *LENGTH15_ROWS,
                ONEPOINT_23, AUGMENTED_23, ONEPOINT_21, AUGMENTED_21, ONEPOINT_1539, AUGMENTED_1539, HERMITIAN_F4]
