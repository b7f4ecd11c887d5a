"""Classical-probability semantics: flip-mask distribution -> outcome distribution -> payoffs.

Each group plays identity with its parameter's probability and a joint bit
flip otherwise, so the initial probabilities x mix into outcome probabilities
Q by an XOR convolution.  Only the diagonal x of the initial state matters
here (bit flips permute the computational basis), so the engine takes a
probability vector rather than a state; `states.probabilities` adapts one.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .errors import DimensionError, DomainError
from .game import GameSpec, OutcomeWeights, expected_payoffs
from .kernel import mask_weights, xor_convolve

SUM_TOL = 1e-9


def flip_mask_weights(spec: GameSpec, profile: Sequence[float]) -> np.ndarray:
    """Probability of every joint flip mask; entries sum to one."""
    return mask_weights(spec, profile, amplitude=False)


def lambda_matrix(x: Sequence[float]) -> np.ndarray:
    """The mixing matrix L with L[j, k] = x[j XOR k].

    Row 0 is x itself and the matrix is symmetric.  The engine never needs it
    (the convolution below is direct); it exists as a checkable artifact of
    the matrix form of the outcome relation.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size == 0 or x.size & (x.size - 1):
        raise DimensionError("length must be a power of two")
    j = np.arange(x.size)
    return x[j[:, None] ^ j[None, :]]


def cpo_outcome_distribution(x: Sequence[float], pi: Sequence[float]) -> OutcomeWeights:
    """Q[j] = sum over masks k of x[j XOR k] * pi[k].

    Both inputs must be probability vectors of the same power-of-two length;
    the result is again a probability distribution.
    """
    x = np.asarray(x, dtype=float)
    pi = np.asarray(pi, dtype=float)
    if x.shape != pi.shape:
        raise DimensionError(f"mismatched lengths: {x.shape} vs {pi.shape}")
    for name, v in (("initial probabilities", x), ("mask probabilities", pi)):
        if np.any(v < 0) or abs(float(v.sum()) - 1.0) > SUM_TOL:
            raise DomainError(f"{name} must be a probability vector")
    return OutcomeWeights(xor_convolve(x, pi), normalized=True)


def cpo_payoffs(spec: GameSpec, x: Sequence[float], profile: Sequence[float]) -> np.ndarray:
    """Expected payoffs per player for initial probabilities x under the profile."""
    q = cpo_outcome_distribution(x, flip_mask_weights(spec, profile))
    return expected_payoffs(spec.table, q)
