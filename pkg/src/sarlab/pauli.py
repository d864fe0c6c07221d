"""Phase-tracked operator-string algebra and its noisy-agent success theory.

Strings are a global phase in {+1, +i, -1, -i} times a word over {I, X, Y, Z}.
Products factor into independent per-site rules plus accumulation of the
global phase, which makes the task's difficulty scale cleanly with length.

Phases are represented internally as exponents k of i**k (integers mod 4),
so phase accumulation is addition mod 4 and the hot paths never touch
complex arithmetic.

The theory half models an agent that multiplies two length-n strings while
making independent mistakes: each per-site reduction is wrong with
probability ``p_sigma``, and each update of the running phase register is
wrong with probability ``p_phi`` (uniformly one of the three wrong group
elements). The register is then a random walk on the 4-element phase group
whose n-step success probability has the closed form

    P(n) = 1/4 + 3/4 * ((3 - 4*p_phi) / 3)**n,

and the full-string success rate is (1 - p_sigma)**n * P(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._kernels import phase_walk_hits
from .errors import ParameterError, SizeError, ValidationError

PHASE_TOKENS = ("+1", "+i", "-1", "-i")
LETTERS = "IXYZ"

MATRIX_ORACLE_MAX_SITES = 6  # 2**6 x 2**6 dense complex is the guard

_SITE_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# Single-site products: (p, q) -> (phase exponent k of i**k, resulting letter).
_SINGLE = {
    ("I", "I"): (0, "I"), ("I", "X"): (0, "X"), ("I", "Y"): (0, "Y"), ("I", "Z"): (0, "Z"),
    ("X", "I"): (0, "X"), ("X", "X"): (0, "I"), ("X", "Y"): (1, "Z"), ("X", "Z"): (3, "Y"),
    ("Y", "I"): (0, "Y"), ("Y", "X"): (3, "Z"), ("Y", "Y"): (0, "I"), ("Y", "Z"): (1, "X"),
    ("Z", "I"): (0, "Z"), ("Z", "X"): (1, "Y"), ("Z", "Y"): (3, "X"), ("Z", "Z"): (0, "I"),
}


@dataclass(frozen=True)
class PauliString:
    """A global phase (exponent of i) and a nonempty word over I, X, Y, Z."""

    phase_exp: int
    ops: str

    def __post_init__(self):
        if self.phase_exp not in (0, 1, 2, 3):
            raise ValidationError(f"phase exponent must be 0..3, got {self.phase_exp}")
        if not self.ops:
            raise ValidationError("operator word must be nonempty")
        for pos, ch in enumerate(self.ops):
            if ch not in LETTERS:
                raise ValidationError(f"invalid operator {ch!r} at position {pos}")

    @property
    def phase(self) -> complex:
        return 1j ** self.phase_exp

    @property
    def phase_token(self) -> str:
        return PHASE_TOKENS[self.phase_exp]

    def __len__(self) -> int:
        return len(self.ops)

    def __str__(self) -> str:
        return f"{self.phase_token} {self.ops}"

    @classmethod
    def from_text(cls, text: str) -> "PauliString":
        """Parse the canonical rendering: phase token, one space, letters."""
        parts = text.strip().split()
        if len(parts) != 2 or parts[0] not in PHASE_TOKENS:
            raise ValidationError(f"not a canonical operator string: {text!r}")
        return cls(PHASE_TOKENS.index(parts[0]), parts[1])


def mul_single(p: str, q: str) -> tuple[int, str]:
    """Single-site product p*q as (phase exponent, resulting letter)."""
    try:
        return _SINGLE[(p, q)]
    except KeyError:
        raise ValidationError(f"invalid single-site operands {p!r}, {q!r}") from None


def mul_strings(a: PauliString, b: PauliString) -> PauliString:
    """Sitewise product with accumulated global phase."""
    if len(a.ops) != len(b.ops):
        raise ValidationError(f"length mismatch: {len(a.ops)} vs {len(b.ops)}")
    k = a.phase_exp + b.phase_exp
    out = []
    for p, q in zip(a.ops, b.ops):
        dk, r = _SINGLE[(p, q)]
        k += dk
        out.append(r)
    return PauliString(k % 4, "".join(out))


def matrix_oracle(s: PauliString) -> np.ndarray:
    """Dense matrix of the string: phase times the site-matrix tensor product.

    Test-support route: multiplying two strings' matrices must equal the
    matrix of ``mul_strings``. Guarded to small site counts.
    """
    if len(s.ops) > MATRIX_ORACLE_MAX_SITES:
        raise SizeError(f"matrix oracle limited to {MATRIX_ORACLE_MAX_SITES} sites, got {len(s.ops)}")
    out = np.array([[s.phase]], dtype=complex)
    for ch in s.ops:
        out = np.kron(out, _SITE_MATRICES[ch])
    return out


@dataclass(frozen=True)
class PauliNoiseParams:
    """Per-step error probabilities of the noisy agent.

    Both fields are ERROR probabilities: ``p_sigma`` is the chance a
    single-site reduction is wrong, ``p_phi`` the chance a single phase
    update lands on a wrong group element.
    """

    p_sigma: float
    p_phi: float

    def __post_init__(self):
        for name in ("p_sigma", "p_phi"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ParameterError(f"{name} must be in [0, 1], got {v}")


def _check_probability(p, name: str) -> None:
    if not 0 <= p <= 1:
        raise ParameterError(f"{name} must be in [0, 1], got {p}")


def _check_positive_int(n, name: str) -> None:
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"{name} must be a positive integer, got {n!r}")


def phase_kernel(p_phi) -> np.ndarray:
    """One-step transition matrix of the noisy phase register (intended
    multiplier factored out): stay with probability 1-p, each of the three
    wrong states with probability p/3.

    Accepts a ``Fraction`` for exact rational arithmetic; floats otherwise.
    """
    _check_probability(p_phi, "p_phi")
    if isinstance(p_phi, Fraction):
        stay = 1 - p_phi
        move = p_phi / 3
        k = np.full((4, 4), move, dtype=object)
        for i in range(4):
            k[i, i] = stay
        return k
    k = np.full((4, 4), p_phi / 3.0)
    np.fill_diagonal(k, 1.0 - p_phi)
    return k


def shift_matrix(phase_exp: int) -> np.ndarray:
    """Permutation matrix of left multiplication by i**phase_exp on the
    state order (+1, +i, -1, -i)."""
    if phase_exp not in (0, 1, 2, 3):
        raise ParameterError(f"phase exponent must be 0..3, got {phase_exp}")
    s = np.zeros((4, 4), dtype=np.int64)
    for j in range(4):
        s[(phase_exp + j) % 4, j] = 1
    return s


@dataclass(frozen=True)
class PhaseChain:
    """The phase register's Markov chain: kernel plus the four shift matrices."""

    kernel: np.ndarray
    shifts: tuple

    @classmethod
    def build(cls, p_phi) -> "PhaseChain":
        return cls(phase_kernel(p_phi), tuple(shift_matrix(k) for k in range(4)))


def _mat_power(m: np.ndarray, n: int) -> np.ndarray:
    if m.dtype == object:
        # exact Fraction arithmetic survives np.dot on object arrays
        out = np.array([[Fraction(int(i == j)) for j in range(4)] for i in range(4)], dtype=object)
    else:
        out = np.eye(4)
    base = m
    while n:
        if n & 1:
            out = np.dot(out, base)
        base = np.dot(base, base)
        n >>= 1
    return out


def phase_chain_success(p_phi: float, n: int) -> float:
    """Closed-form probability that the register ends on the true phase
    after n noisy updates: 1/4 + 3/4 * ((3 - 4*p_phi)/3)**n."""
    _check_probability(p_phi, "p_phi")
    _check_positive_int(n, "n")
    return 0.25 + 0.75 * ((3.0 - 4.0 * p_phi) / 3.0) ** n


def phase_chain_success_kernel(p_phi, n: int, phase_exp: int = 0):
    """Same quantity evaluated the long way: e_target' S_target K**n e_start.

    ``phase_exp`` is the exponent of the true accumulated phase; the result
    is independent of it (shifts commute with the kernel). Exact when
    ``p_phi`` is a ``Fraction``. Verification route for the closed form.
    """
    _check_positive_int(n, "n")
    kn = _mat_power(phase_kernel(p_phi), n)
    moved = np.dot(shift_matrix(phase_exp), kn)
    return moved[phase_exp, 0]


def phase_chain_simulate(p_phi: float, n: int, trials: int, seed: int) -> float:
    """Monte Carlo estimate of the phase-register success probability.

    Draws a fresh intended multiplier each step and compares the noisy
    register against the true product. Per-trial streams are derived from
    (seed, trial index), so the result is independent of execution order.
    """
    _check_probability(p_phi, "p_phi")
    _check_positive_int(n, "n")
    _check_positive_int(trials, "trials")
    return phase_walk_hits(float(p_phi), n, trials, seed) / trials


def pauli_sar_theory(params: PauliNoiseParams, n: int) -> float:
    """Predicted whole-string success rate of the noisy agent:
    all n site reductions correct and the final phase register correct."""
    _check_positive_int(n, "n")
    return (1.0 - params.p_sigma) ** n * phase_chain_success(params.p_phi, n)
