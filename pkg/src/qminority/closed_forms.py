"""Hand-expanded payoff formulas for the standard scenarios.

These expressions are written out in full and share no helpers with the
engines, so tests and the reproduction command can cross-check engine output
against them term for term.  Scenario vocabulary matches the preset names:
tcqg-* are the three-player games (coalition {A,B} with parameter p, solitary
C with q), fcqg-* the four-player ones (solitary C with q, solitary D with l;
the independent classical setups use p, q, r, l for A, B, C, D).
"""

from __future__ import annotations

import math
from collections.abc import Sequence


def tcqg_ghz_payoff_a(p: float, q: float, a: float) -> float:
    """Player A for the c1|000> + c2|111> state, a = c1*c2."""
    return p + q - 2 * p * q + 4 * a * math.sqrt(p * (1 - p) * q * (1 - q))


def tcqg_ghz_payoff_a_gradient(p: float, q: float, a: float) -> tuple[float, float]:
    """(d/dp, d/dq) of player A's payoff, interior points only."""
    dp = 1 - 2 * q + 2 * a * math.sqrt(q * (1 - q) / (p * (1 - p))) * (1 - 2 * p)
    dq = 1 - 2 * p + 2 * a * math.sqrt(p * (1 - p) / (q * (1 - q))) * (1 - 2 * q)
    return dp, dq


def tcqg_flip_payoff_a(p: float, q: float, a: float) -> float:
    """Player A for the c1|001> + c2|110> state."""
    return 1 - p - q + 2 * p * q + 4 * a * math.sqrt(p * (1 - p) * q * (1 - q))


def tcqg_flip_payoff_a_gradient(p: float, q: float, a: float) -> tuple[float, float]:
    root = math.sqrt(p * (1 - p) * q * (1 - q))
    dp = -1 + 2 * q + 2 * a * q * (1 - q) * (1 - 2 * p) / root
    dq = -1 + 2 * p + 2 * a * p * (1 - p) * (1 - 2 * q) / root
    return dp, dq


def fcqg_ghz_payoff_a(p: float, q: float, l: float, a: float) -> float:
    """Player A for the c1|0000> + c2|1111> state."""
    return q + l + 8 * a * math.sqrt(p * (1 - p) * q * (1 - q) * l * (1 - l)) - 2 * l * q


def fcqg_ghz_payoff_a_gradient(
    p: float, q: float, l: float, a: float
) -> tuple[float, float, float]:
    root = math.sqrt(p * (1 - p) * q * (1 - q) * l * (1 - l))
    dp = 4 * a * ((1 - p) * q * (1 - q) * l * (1 - l) - p * q * (1 - q) * l * (1 - l)) / root
    dq = 1 + 4 * a * (p * (1 - p) * (1 - q) * l * (1 - l) - p * q * (1 - p) * l * (1 - l)) / root - 2 * l
    dl = 1 + 4 * a * (p * (1 - p) * q * (1 - q) * (1 - l) - p * q * (1 - p) * (1 - q) * l) / root - 2 * q
    return dp, dq, dl


def fcqg_ghz_payoff_c(p: float, q: float, l: float, a: float) -> float:
    """Player C for the c1|0000> + c2|1111> state."""
    root = math.sqrt(p * (1 - p) * q * (1 - q) * l * (1 - l))
    return -8 * a * root + 4 * p * q - 4 * l * p + 2 * l * q - 3 * q + l


def fcqg_ghz_payoff_d(p: float, q: float, l: float, a: float) -> float:
    """Player D for the c1|0000> + c2|1111> state.

    This is the player-C expression with the two solitary parameters q and l
    exchanged; it is the unique form consistent with the zero-sum payoff table.
    """
    return fcqg_ghz_payoff_c(p, l, q, a)


def fcqg_0001_payoff_a(p: float, q: float, l: float, a: float) -> float:
    """Player A for the c1|0001> + c2|1101> state."""
    return (1 - q - l + 2 * q * l) * (1 + 4 * a * math.sqrt(p * (1 - p)))


def cpo4_payoff_a(x: Sequence[float], p: float, q: float, r: float, s: float) -> float:
    """Player A, four independent classical players, general initial probabilities x.

    The last parameter is player D's; it is named s here only because `l`
    shadows too easily in the fully expanded brackets below.
    """
    l = s
    return (
        (x[0] + x[15]) * (2*p*r + 2*p*l + 2*q*p - 2*q*l - 2*r*l - 2*q*r + l + r + q - 3*p)
        + (x[1] + x[14]) * (2*p*q + 2*p*r + 2*q*l - 2*p*l - 2*q*r + 2*r*l - p - q - l - r + 1)
        + (x[2] + x[13]) * (2*p*q + 2*q*r + 2*p*l + 2*r*l - 2*p*r - 2*q*l - p - q - l - r + 1)
        + (x[3] + x[12]) * (2*q*r + 2*q*l + 2*p*q - 2*p*r - 2*p*l - 2*r*l - 3*q + r + p + l)
        + (x[4] + x[11]) * (2*p*r + 2*p*l + 2*q*r + 2*q*l - 2*q*p - 2*r*l - p - q - r - l + 1)
        + (x[5] + x[10]) * (2*p*r + 2*q*r + 2*r*l - 2*q*p - 2*q*l - 2*p*l + l + p + q - 3*r)
        + (x[6] + x[9]) * (2*p*l + 2*q*l + 2*r*l - 2*q*p - 2*q*r - 2*p*r + q + r + p - 3*l)
        + (x[7] + x[8]) * (-2*p*q - 2*q*l - 2*r*l - 2*p*r - 2*p*l - 2*q*r + 3*p + 3*q + 3*r + 3*l - 3)
    )


def cpo4_payoff_c_cooperative(x: Sequence[float], p: float, q: float, r: float, s: float) -> float:
    """Player C on the cooperative support (x4 through x11 all zero)."""
    l = s
    return (
        (x[0] + x[15]) * (2*p*r + 2*q*r + 2*r*l - 2*q*p - 2*p*l - 2*q*l + p + q + l - 3*r)
        + (x[1] + x[14]) * (2*p*r + 2*p*l + 2*q*r + 2*q*l - 2*q*p - 2*r*l - p - q - r - l + 1)
        + (x[2] + x[13]) * (-2*q*p - 2*p*r - 2*q*r - 2*p*l - 2*q*l - 2*r*l + 3*r + 3*p + 3*q + 3*l - 3)
        + (x[3] + x[12]) * (2*p*l + 2*q*l + 2*r*l - 2*q*p - 2*p*r - 2*q*r + p + q + r - 3*l)
    )


def cpo4_payoff_a_mixed(x: Sequence[float], p: float, q: float, r: float, s: float) -> float:
    """Player A on the mixed support (x1, x2, x4, x7, x8, x11, x13, x14 zero)."""
    l = s
    return (
        (x[0] + x[15]) * (2*p*r + 2*q*p + 2*p*l - 2*q*l - 2*r*l - 2*q*r + l + r + q - 3*p)
        + (x[3] + x[12]) * (2*q*r + 2*q*l + 2*q*p - 2*p*r - 2*p*l - 2*r*l - 3*q + r + p + l)
        + (x[5] + x[10]) * (2*p*r + 2*q*r + 2*r*l - 2*q*p - 2*q*l - 2*p*l + l + p + q - 3*r)
        + (x[6] + x[9]) * (2*p*l + 2*q*l + 2*r*l - 2*q*p - 2*q*r - 2*p*r + q + r + p - 3*l)
    )


def cpo4_payoff_c_mixed(x: Sequence[float], p: float, q: float, r: float, s: float) -> float:
    """Player C on the mixed support (x1, x2, x4, x7, x8, x11, x13, x14 zero)."""
    l = s
    return (
        (x[0] + x[15]) * (2*p*r + 2*q*r + 2*r*l - 2*q*p - 2*p*l - 2*q*l + p + q + l - 3*r)
        + (x[3] + x[12]) * (2*p*l + 2*q*l + 2*r*l - 2*q*p - 2*p*r - 2*q*r + p + q + r - 3*l)
        + (x[5] + x[10]) * (2*p*r + 2*p*l + 2*q*p - 2*q*r - 2*r*l - 2*q*l + r + q + l - 3*p)
        + (x[6] + x[9]) * (2*q*r + 2*q*l + 2*q*p - 2*p*r - 2*p*l - 2*r*l + p + r + l - 3*q)
    )


def uniform8_payoff_a(p: float, q: float) -> float:
    """Players A and B when the first and last four basis outcomes carry 1/8 each.

    Independent of the other two players' parameters; players C and D score
    the negative of this.
    """
    return 2 * p * q - p - q + 0.5


def product_payoff_a(p: float, q: float, r: float, s: float) -> float:
    """Player A when the initial state is the all-zeros product state."""
    l = s
    return 2*p*r + 2*p*l + 2*q*p - 2*q*l - 2*r*l - 2*q*r + l + r + q - 3*p


def product_payoff_c(p: float, q: float, r: float, s: float) -> float:
    """Player C when the initial state is the all-zeros product state."""
    l = s
    return 2*p*r + 2*q*r + 2*r*l - 2*q*p - 2*p*l - 2*q*l + p + q + l - 3*r


# Frozen index pattern of the 16-by-16 mixing matrix: entry (j, k) names which
# initial probability appears there.  Used as an entry-for-entry cross-check
# of lambda_matrix; the pattern equals j XOR k but is spelled out on purpose.
LAMBDA_INDEX_PATTERN: tuple[tuple[int, ...], ...] = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15),
    (1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14),
    (2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9, 14, 15, 12, 13),
    (3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8, 15, 14, 13, 12),
    (4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15, 8, 9, 10, 11),
    (5, 4, 7, 6, 1, 0, 3, 2, 13, 12, 15, 14, 9, 8, 11, 10),
    (6, 7, 4, 5, 2, 3, 0, 1, 14, 15, 12, 13, 10, 11, 8, 9),
    (7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12, 11, 10, 9, 8),
    (8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3, 4, 5, 6, 7),
    (9, 8, 11, 10, 13, 12, 15, 14, 1, 0, 3, 2, 5, 4, 7, 6),
    (10, 11, 8, 9, 14, 15, 12, 13, 2, 3, 0, 1, 6, 7, 4, 5),
    (11, 10, 9, 8, 15, 14, 13, 12, 3, 2, 1, 0, 7, 6, 5, 4),
    (12, 13, 14, 15, 8, 9, 10, 11, 4, 5, 6, 7, 0, 1, 2, 3),
    (13, 12, 15, 14, 9, 8, 11, 10, 5, 4, 7, 6, 1, 0, 3, 2),
    (14, 15, 12, 13, 10, 11, 8, 9, 6, 7, 4, 5, 2, 3, 0, 1),
    (15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0),
)
