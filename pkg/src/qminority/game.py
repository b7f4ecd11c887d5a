"""Players, coalitions, the minority payoff rule, and expected-payoff accounting.

Bit convention used everywhere in this package: player 0 ("A") is the most
significant bit of an outcome index, so with four players index 7 = 0111 means
A chose 0 while B, C and D chose 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionError, DomainError, InvalidSpecError

PLAYER_NAMES = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def player_bit(index: int, player: int, n_players: int) -> int:
    """Bit of `player` in outcome `index`; player 0 is the most significant."""
    return (index >> (n_players - 1 - player)) & 1


class CoalitionSemantics(Enum):
    """How a multi-player group turns one parameter into joint moves.

    CORRELATED: the group acts as a block, flipping all of its qubits together.
    SHARED_PARAMETER: every member acts alone but with the group's parameter.
    INDEPENDENT: no coalitions; only singleton groups are allowed.
    """

    CORRELATED = "correlated"
    SHARED_PARAMETER = "shared_parameter"
    INDEPENDENT = "independent"


@dataclass(frozen=True, eq=False)
class PayoffTable:
    """Per-outcome, per-player payoffs in pennies; every outcome sums to zero."""

    n_players: int
    values: np.ndarray  # shape (2**n_players, n_players), integer pennies

    def __post_init__(self):
        values = np.array(self.values, dtype=np.int64)
        size = 1 << self.n_players
        if values.shape != (size, self.n_players):
            raise DimensionError(
                f"payoff table must have shape ({size}, {self.n_players}), "
                f"got {values.shape}"
            )
        if np.any(values.sum(axis=1) != 0):
            raise InvalidSpecError("payoff table must be zero-sum on every outcome")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def size(self) -> int:
        return 1 << self.n_players

    def __eq__(self, other):
        if not isinstance(other, PayoffTable):
            return NotImplemented
        return self.n_players == other.n_players and np.array_equal(
            self.values, other.values
        )


def minority_payoff_table(n_players: int) -> PayoffTable:
    """Payoff table of the minority rule.

    If exactly one player's bit differs from the common bit of all the others,
    that player pays one penny to each other player: -(n-1) for the loser and
    +1 for everyone else.  Any other split, including all-equal, pays zero all
    around.  For more than four players this reads "a lone strict minority of
    size one pays", which reduces to the three- and four-player rules.
    """
    if n_players < 3:
        raise InvalidSpecError(f"the minority game needs at least 3 players, got {n_players}")
    size = 1 << n_players
    values = np.zeros((size, n_players), dtype=np.int64)
    for outcome in range(size):
        ones = outcome.bit_count()
        if ones == 1 or ones == n_players - 1:
            losing_bit = 1 if ones == 1 else 0
            for p in range(n_players):
                if player_bit(outcome, p, n_players) == losing_bit:
                    values[outcome, p] = -(n_players - 1)
                else:
                    values[outcome, p] = 1
    return PayoffTable(n_players, values)


def player_payoff_coefficients(table: PayoffTable, player: int) -> np.ndarray:
    """That player's per-outcome payoff vector (one entry per basis outcome)."""
    if not 0 <= player < table.n_players:
        raise DomainError(f"player index {player} out of range for {table.n_players} players")
    return table.values[:, player].astype(float)


@dataclass(frozen=True, eq=False)
class OutcomeWeights:
    """Nonnegative weight per basis outcome.

    A probability distribution when `normalized`; the superposed-operator
    engine also produces raw squared-coefficient weights that may sum to more
    than one, flagged with normalized=False.
    """

    values: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 1:
            raise DimensionError("outcome weights must be a flat vector")
        if np.any(values < 0):
            raise DomainError("outcome weights must be nonnegative")
        if self.normalized and abs(values.sum() - 1.0) > 1e-12:
            raise DomainError(
                f"weights flagged normalized but sum to {values.sum()!r}"
            )
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def total(self) -> float:
        return float(self.values.sum())


def expected_payoffs(table: PayoffTable, weights) -> np.ndarray:
    """Weight-weighted per-player payoffs.

    Weights are used exactly as given; no renormalization is applied, so
    unnormalized weight vectors scale the payoffs accordingly.
    """
    w = np.asarray(getattr(weights, "values", weights), dtype=float)
    if w.shape != (table.size,):
        raise DimensionError(f"expected {table.size} weights, got shape {w.shape}")
    if np.any(w < 0):
        raise DomainError("outcome weights must be nonnegative")
    return w @ table.values


@dataclass(frozen=True, eq=False)
class GameSpec:
    """A minority game plus the grouping of players into strategy groups.

    `groups` partitions the player indices; each group carries exactly one
    strategy parameter, in group order.
    """

    n_players: int
    groups: tuple[tuple[int, ...], ...]
    semantics: CoalitionSemantics
    table: PayoffTable

    def __post_init__(self):
        groups = tuple(tuple(int(p) for p in g) for g in self.groups)
        object.__setattr__(self, "groups", groups)
        members = [p for g in groups for p in g]
        if any(len(g) == 0 for g in groups) or sorted(members) != list(range(self.n_players)):
            raise InvalidSpecError(
                "groups must partition the player indices into nonempty disjoint sets"
            )
        if self.semantics is CoalitionSemantics.INDEPENDENT and any(
            len(g) > 1 for g in groups
        ):
            raise InvalidSpecError("independent semantics requires singleton groups")
        if self.table.n_players != self.n_players:
            raise DimensionError("payoff table player count does not match the spec")

    @property
    def size(self) -> int:
        return 1 << self.n_players

    @property
    def n_groups(self) -> int:
        return len(self.groups)

    @property
    def group_names(self) -> tuple[str, ...]:
        return tuple("".join(PLAYER_NAMES[p] for p in g) for g in self.groups)

    @property
    def player_names(self) -> tuple[str, ...]:
        return tuple(PLAYER_NAMES[: self.n_players])

    @classmethod
    def independent(cls, n_players: int) -> "GameSpec":
        """Every player on their own, one parameter each."""
        return cls(
            n_players,
            tuple((i,) for i in range(n_players)),
            CoalitionSemantics.INDEPENDENT,
            minority_payoff_table(n_players),
        )

    @classmethod
    def leading_pair(
        cls,
        n_players: int,
        semantics: CoalitionSemantics = CoalitionSemantics.CORRELATED,
    ) -> "GameSpec":
        """Players A and B as one coalition, everyone else solo."""
        groups = ((0, 1),) + tuple((i,) for i in range(2, n_players))
        return cls(n_players, groups, semantics, minority_payoff_table(n_players))

    def __eq__(self, other):
        if not isinstance(other, GameSpec):
            return NotImplemented
        return (
            self.n_players == other.n_players
            and self.groups == other.groups
            and self.semantics is other.semantics
            and self.table == other.table
        )
