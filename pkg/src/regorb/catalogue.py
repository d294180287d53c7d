"""Catalogue rows and reference counts.

A row fixes the shape of the construction: V = GF(p)^d with d = e * a * b,
where e = r^m is the dimension of the faithful core representation over
GF(q), q = p^a, and b is the multiplicity of the tensor factor.  ROWS holds
the desk-scale rows this package classifies end to end.

TABLE3 maps a row to its reference census: label -> (number of counted
groups, largest counted order).  The empty label means the reference fuses
all core types; explicit labels split the census by type.  Rows absent
from TABLE3 have an empty census.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gfp import factorize


@dataclass(frozen=True)
class RowParams:
    row: int
    e: int
    p: int
    a: int = 1
    b: int = 1

    @property
    def d(self) -> int:
        return self.e * self.a * self.b

    @property
    def q(self) -> int:
        return self.p**self.a

    @property
    def r(self) -> int:
        fac = factorize(self.e)
        assert len(fac) == 1, "core dimension must be a prime power"
        return next(iter(fac))

    @property
    def m(self) -> int:
        return factorize(self.e)[self.r]

    def modes(self) -> list[str]:
        if self.r != 2:
            return ["odd"]
        if (self.q - 1) % 4 == 0:
            # scalars supply an order-4 element, so the two sign types fuse
            # into one class handled by a single pass around C4 * E
            return ["symplectic"]
        return ["plus", "minus"]


# (e, p, a) per catalogue row with b = 1; d = e * a
_ROWS_B1 = {
    1: (16, 3, 1), 2: (16, 5, 1),
    3: (9, 2, 2), 4: (9, 7, 1), 5: (9, 13, 1), 6: (9, 2, 4), 7: (9, 19, 1),
    8: (9, 5, 2),
    9: (8, 3, 1), 10: (8, 5, 1), 11: (8, 7, 1), 12: (8, 3, 2), 13: (8, 11, 1),
    14: (8, 13, 1), 15: (8, 17, 1), 16: (8, 19, 1), 17: (8, 5, 2), 18: (8, 3, 3),
    19: (4, 3, 1), 20: (4, 5, 1), 21: (4, 7, 1), 22: (4, 3, 2), 23: (4, 11, 1),
    24: (4, 13, 1), 25: (4, 17, 1), 26: (4, 19, 1), 27: (4, 23, 1), 28: (4, 5, 2),
    29: (4, 3, 3), 30: (4, 29, 1), 31: (4, 31, 1), 32: (4, 37, 1), 33: (4, 41, 1),
    34: (4, 43, 1), 35: (4, 47, 1), 36: (4, 7, 2), 37: (4, 53, 1), 38: (4, 59, 1),
    39: (4, 61, 1), 40: (4, 67, 1), 41: (4, 71, 1), 42: (4, 73, 1), 43: (4, 3, 4),
    44: (4, 11, 2), 45: (4, 5, 3), 46: (4, 13, 2), 47: (4, 3, 5),
    48: (3, 2, 2), 49: (3, 7, 1), 50: (3, 13, 1), 51: (3, 2, 4), 52: (3, 19, 1),
    53: (3, 5, 2), 54: (3, 7, 2), 55: (3, 2, 6), 56: (3, 11, 2), 57: (3, 13, 2),
    58: (3, 2, 8), 59: (3, 17, 2), 60: (3, 7, 3), 61: (3, 19, 2),
    62: (2, 3, 1), 63: (2, 5, 1), 64: (2, 7, 1), 65: (2, 3, 2), 66: (2, 11, 1),
    67: (2, 13, 1), 68: (2, 17, 1), 69: (2, 19, 1), 70: (2, 23, 1), 71: (2, 5, 2),
    72: (2, 3, 3), 73: (2, 29, 1), 74: (2, 7, 2), 75: (2, 3, 4), 76: (2, 11, 2),
    77: (2, 5, 3), 78: (2, 13, 2), 79: (2, 3, 5), 80: (2, 17, 2), 81: (2, 7, 3),
    82: (2, 19, 2), 83: (2, 23, 2), 84: (2, 5, 4), 85: (2, 3, 6), 86: (2, 29, 2),
    87: (2, 31, 2), 88: (2, 11, 3), 89: (2, 37, 2), 90: (2, 41, 2), 91: (2, 43, 2),
    92: (2, 3, 7), 93: (2, 13, 3), 94: (2, 47, 2), 95: (2, 7, 4), 96: (2, 53, 2),
    97: (2, 5, 5), 98: (2, 59, 2), 99: (2, 61, 2), 100: (2, 67, 2),
    101: (2, 17, 3), 102: (2, 71, 2), 103: (2, 73, 2),
}

# (e, p, a, b) per catalogue row with b > 1; d = e * a * b
_ROWS_BB = {
    104: (2, 3, 1, 2), 105: (2, 5, 1, 2), 106: (2, 7, 1, 2), 107: (2, 11, 1, 2),
    108: (2, 13, 1, 2), 109: (2, 17, 1, 2), 110: (2, 3, 2, 2), 111: (2, 3, 1, 3),
    112: (2, 5, 1, 3), 113: (2, 3, 1, 4),
    114: (3, 7, 1, 2), 115: (3, 2, 2, 2), 116: (3, 2, 2, 3),
    117: (4, 3, 1, 2), 118: (4, 5, 1, 2), 119: (4, 7, 1, 2), 120: (4, 11, 1, 2),
    121: (4, 3, 1, 3), 122: (4, 3, 1, 4), 123: (4, 3, 2, 2),
    124: (8, 3, 1, 2), 125: (8, 5, 1, 2), 126: (8, 3, 1, 3),
    127: (9, 2, 2, 2),
}

ROWS: dict[int, RowParams] = {
    **{n: RowParams(n, e=e, p=p, a=a) for n, (e, p, a) in _ROWS_B1.items()},
    **{n: RowParams(n, e=e, p=p, a=a, b=b) for n, (e, p, a, b) in _ROWS_BB.items()},
}

# Rows the package classifies end to end under the default bounds.  The rest
# of the catalogue carries parameters only, so requests against it can be
# refused with the right reason instead of "unknown row".
DESK_ROWS = frozenset({19, 48, 49, 50, 52, 62, 63, 64, 65, 66, 67, 68, 69, 104, 117})


# label -> (num, max |G|); "" fuses all types of the row
TABLE3: dict[int, dict[str, tuple[int, int]]] = {
    1: {"minus": (12, 15925248)},
    3: {"": (40, 559872)},
    9: {"plus": (27, 18432), "minus": (71, 165888)},
    10: {"": (22, 331776)},
    19: {"plus": (14, 2304), "minus": (9, 640)},
    20: {"": (24, 4608)},
    21: {"plus": (17, 6912)},
    22: {"": (72, 18432)},
    23: {"plus": (4, 11520)},
    24: {"": (5, 13824)},
    25: {"": (4, 18432)},
    28: {"": (3, 55296)},
    48: {"": (7, 1296)},
    49: {"": (4, 1296)},
    50: {"": (2, 2592)},
    51: {"": (8, 12960)},
    52: {"": (1, 3888)},
    53: {"": (10, 10368)},
    62: {"": (2, 48)},
    63: {"": (2, 96)},
    64: {"": (2, 144)},
    65: {"": (13, 384)},
    66: {"": (2, 240)},
    67: {"": (2, 288)},
    68: {"": (3, 384)},
    69: {"": (2, 432)},
    71: {"": (16, 1152)},
    72: {"": (2, 1872)},
    74: {"": (7, 2304)},
    75: {"": (10, 7680)},
    117: {"": (9, 2304)},
}


def census_matches(row: int, census: dict[str, tuple[int, int]]) -> bool:
    """Whether a computed census meets the row's reference lines.

    Reference lines carrying a type label must be met by the pass of the
    same name; unlabeled lines may be met by any single remaining pass.
    Passes that counted anything beyond the reference lines fail.
    """
    expected = reference_counts(row)
    got = {k: tuple(v) for k, v in census.items()}
    blanks: list[tuple[int, int]] = []
    for label, want in expected.items():
        if not label:
            if want != (0, 0):
                blanks.append(want)
        elif got.pop(label, (0, 0)) != want:
            return False
    for want in blanks:
        hit = next((k for k, v in got.items() if v == want), None)
        if hit is None:
            return False
        got.pop(hit)
    return not got


def reference_counts(row: int) -> dict[str, tuple[int, int]]:
    return dict(TABLE3.get(row, {"": (0, 0)}))
