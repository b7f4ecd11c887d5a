"""XOR-convolution kernel shared by both engines.

Both strategy semantics act by flipping bit masks.  The classical engine
convolves outcome probabilities with mask probabilities; the superposed
engine convolves amplitudes with square-root mask weights.  One weighting
rule serves both, switched by the `amplitude` flag.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from .errors import DimensionError, DomainError
from .game import CoalitionSemantics, GameSpec, player_bit


def validate_profile(spec: GameSpec, profile: Sequence[float]) -> tuple[float, ...]:
    """Check length against the spec's groups and every parameter against [0, 1]."""
    values = tuple(float(v) for v in profile)
    if len(values) != spec.n_groups:
        raise DimensionError(
            f"spec has {spec.n_groups} strategy groups, profile carries {len(values)} parameters"
        )
    for name, v in zip(spec.group_names, values):
        if not (0.0 <= v <= 1.0) or math.isnan(v):
            raise DomainError(f"parameter {name}={v!r} outside [0, 1]")
    return values


def mask_weights(spec: GameSpec, profile: Sequence[float], amplitude: bool = False) -> np.ndarray:
    """Weight of every joint flip mask under the profile.

    Per group: the parameter if the group's mask bits are all 0, one minus the
    parameter if all 1.  Correlated groups zero out masks that split them;
    shared-parameter and independent groups contribute one factor per member.
    With `amplitude` the square root of each group factor is taken instead.
    Probability weights always sum to one.
    """
    values = validate_profile(spec, profile)
    n = spec.n_players
    out = np.zeros(spec.size)
    for mask in range(spec.size):
        weight = 1.0
        for members, theta in zip(spec.groups, values):
            bits = [player_bit(mask, p, n) for p in members]
            if spec.semantics is CoalitionSemantics.CORRELATED:
                if not any(bits):
                    factor = theta
                elif all(bits):
                    factor = 1.0 - theta
                else:
                    weight = 0.0
                    break
            else:
                factor = 1.0
                for b in bits:
                    factor *= (1.0 - theta) if b else theta
            weight *= math.sqrt(factor) if amplitude else factor
        out[mask] = weight
    return out


def xor_convolve(a: Sequence[float], b: Sequence[float]) -> np.ndarray:
    """c[m] = sum over k of a[m XOR k] * b[k], without building the index matrix."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 1 or a.shape != b.shape or a.size == 0 or a.size & (a.size - 1):
        raise DimensionError("xor_convolve needs two equal-length power-of-two vectors")
    idx = np.arange(a.size)
    out = np.zeros(a.size)
    for k, w in enumerate(b):
        if w != 0.0:
            out += w * a[idx ^ k]
    return out
