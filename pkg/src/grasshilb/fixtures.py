"""Frozen reference numerators for small leaf counts.

Variables are 1-indexed z1..zn.  These are the numerators of the
multigraded series over the denominator prod_{i<j} (1 - z_i z_j); the
n = 5 entry is the 12-term polynomial every implemented method must
reproduce exactly.
"""

from __future__ import annotations

from .polyring import IntPolynomial

_GOLDEN_TERMS = {
    2: {(0, 0): 1},
    3: {(0, 0, 0): 1},
    4: {(0, 0, 0, 0): 1, (1, 1, 1, 1): -1},
    5: {
        (0, 0, 0, 0, 0): 1,
        (1, 1, 1, 1, 0): -1,
        (1, 1, 1, 0, 1): -1,
        (1, 1, 0, 1, 1): -1,
        (1, 0, 1, 1, 1): -1,
        (0, 1, 1, 1, 1): -1,
        (2, 1, 1, 1, 1): 1,
        (1, 2, 1, 1, 1): 1,
        (1, 1, 2, 1, 1): 1,
        (1, 1, 1, 2, 1): 1,
        (1, 1, 1, 1, 2): 1,
        (2, 2, 2, 2, 2): -1,
    },
}


def golden_numerator(n):
    """The frozen reference numerator for n in 2..5."""
    if n not in _GOLDEN_TERMS:
        raise KeyError("no reference numerator for n=%d" % n)
    return IntPolynomial(n, _GOLDEN_TERMS[n])


GOLDEN_RANGE = tuple(sorted(_GOLDEN_TERMS))
