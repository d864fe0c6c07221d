"""Pure-Python (NumPy) kernels: fallback used when the compiled extension is absent.

Must stay drop-in compatible with ``sarlab._core``:

* ``phase_walk_hits`` consumes exactly the same splitmix64 outputs as the
  compiled version, so both backends return identical counts;
* ``sk_log_prob_up`` enumerates the same 2**n states; only the floating-point
  summation order differs (blockwise here, Gray-code streaming there), so
  results agree to ~1e-13.
"""

from __future__ import annotations

import math

import numpy as np

from .rng import GOLDEN, _DOUBLE_SCALE, _mix64_array, u64_stream

_BLOCK_STATES = 1 << 16
_BLOCK_TRIALS = 1 << 15


def _dense_couplings(couplings: np.ndarray, n: int) -> np.ndarray:
    full = np.zeros((n, n))
    iu = np.triu_indices(n, 1)
    full[iu] = couplings
    return full + full.T


def sk_log_prob_up(couplings: np.ndarray, n: int, h: float) -> float:
    """log p[all-up] = -E[all-up] - log Z over all 2**n spin states.

    Enumerates states in index order, in blocks, with a streaming
    log-sum-exp so memory stays O(block) for any n.
    """
    couplings = np.ascontiguousarray(couplings, dtype=np.float64)
    full = _dense_couplings(couplings, n)
    e_up = -float(couplings.sum()) - h * n

    m = -math.inf
    acc = 0.0
    cols = np.arange(n, dtype=np.int64)
    total = 1 << n
    for lo in range(0, total, _BLOCK_STATES):
        hi = min(total, lo + _BLOCK_STATES)
        idx = np.arange(lo, hi, dtype=np.int64)
        spins = (((idx[:, None] >> cols) & 1) * 2 - 1).astype(np.float64)
        quad = np.einsum("si,si->s", spins @ full, spins)
        x = 0.5 * quad + h * spins.sum(axis=1)  # = -E per state
        bm = float(x.max())
        if bm > m:
            acc = acc * math.exp(m - bm) if acc > 0.0 else 0.0
            acc += float(np.exp(x - bm).sum())
            m = bm
        else:
            acc += float(np.exp(x - m).sum())
    log_z = m + math.log(acc)
    return -e_up - log_z


def phase_walk_hits(p_err: float, steps: int, trials: int, seed: int) -> int:
    """Count noisy phase-accumulation walks that end on the true product phase.

    Trial t uses the child stream seeded with output t of ``seed``; step j
    consumes that stream's outputs 3j (intended multiplier, top 2 bits),
    3j+1 (error uniform) and 3j+2 (wrong-offset uniform). Phases are
    exponents k of i**k, so multiplication is addition mod 4.
    """
    hits = 0
    draws = 3 * steps
    golden = np.uint64(GOLDEN)
    for lo in range(0, trials, _BLOCK_TRIALS):
        hi = min(trials, lo + _BLOCK_TRIALS)
        child = u64_stream(seed, hi - lo, start=lo)
        pos = np.arange(1, draws + 1, dtype=np.uint64)
        out = _mix64_array(child[:, None] + pos[None, :] * golden)
        mult = (out[:, 0::3] >> np.uint64(62)).astype(np.int64)
        u = (out[:, 1::3] >> np.uint64(11)).astype(np.float64) * _DOUBLE_SCALE
        wrong = 1 + np.floor(
            3.0 * (out[:, 2::3] >> np.uint64(11)).astype(np.float64) * _DOUBLE_SCALE
        ).astype(np.int64)
        offset = np.where(u < p_err, wrong, 0)
        register = (mult + offset).sum(axis=1) & 3
        truth = mult.sum(axis=1) & 3
        hits += int((register == truth).sum())
    return hits
