"""Shared helpers: independent blade-product oracles and tiny conveniences."""

from __future__ import annotations

from itertools import permutations
from math import factorial

import numpy as np

from cliffspin import Multivector, Signature, parse


def mv(text: str, sig: Signature) -> Multivector:
    return parse(text, sig)


def mask_indices(mask: int) -> list[int]:
    """1-based generator indices of a blade mask, ascending."""
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def naive_blade_product(a: int, b: int, sig: Signature) -> tuple[int, float]:
    """Swap-simulation oracle for the Clifford product of basis blades.

    Concatenates the generator lists, bubble-sorts with a sign flip per
    adjacent swap, and contracts equal neighbours with their metric square.
    Deliberately avoids the bit-count shortcut used by the library.
    """
    seq = mask_indices(a) + mask_indices(b)
    sign = 1.0
    changed = True
    while changed:
        changed = False
        for k in range(len(seq) - 1):
            if seq[k] > seq[k + 1]:
                seq[k], seq[k + 1] = seq[k + 1], seq[k]
                sign = -sign
                changed = True
    k = 0
    while k < len(seq) - 1:
        if seq[k] == seq[k + 1]:
            sign *= sig.metric(seq[k])
            del seq[k : k + 2]
            k = 0
        else:
            k += 1
    mask = 0
    for i in seq:
        mask |= 1 << (i - 1)
    return mask, sign


def _fold_generators(order: list[int], sig: Signature) -> tuple[int, float]:
    """Clifford product of a generator sequence via the naive oracle."""
    mask, sign = 0, 1.0
    for g in order:
        step_mask, step_sign = naive_blade_product(mask, 1 << (g - 1), sig)
        mask, sign = step_mask, sign * step_sign
    return mask, sign


def alternation_wedge(a: int, b: int, sig: Signature) -> np.ndarray:
    """Exterior product of blades a, b via alternation of the indices.

    Averages sign(perm) times the Clifford product of the permuted generator
    sequence over all permutations; repeated indices cancel to zero.  Returns
    the dense coefficient vector of the result.
    """
    out = np.zeros(sig.dim)
    idx = mask_indices(a) + mask_indices(b)
    m = len(idx)
    if m == 0:
        out[0] = 1.0
        return out
    for perm in permutations(range(m)):
        inversions = sum(
            1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j]
        )
        perm_sign = -1.0 if inversions & 1 else 1.0
        mask, sign = _fold_generators([idx[k] for k in perm], sig)
        out[mask] += perm_sign * sign
    return out / factorial(m)


def random_multivector(rng: np.random.Generator, sig: Signature, scale: float = 1.0) -> Multivector:
    return Multivector(sig, rng.uniform(-scale, scale, sig.dim))


ALL_SIGNATURES_N4 = [Signature(0, 4), Signature(4, 0), Signature(1, 3), Signature(2, 2), Signature(3, 1)]
ALL_SIGNATURES_LOW = [
    Signature(2, 0), Signature(1, 1), Signature(0, 2),
    Signature(3, 0), Signature(2, 1), Signature(1, 2), Signature(0, 3),
]
