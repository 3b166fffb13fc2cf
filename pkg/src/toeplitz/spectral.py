"""Transfer-matrix cocycles and finite sections of Jacobi operators.

The operator acts on l2 by

    (J psi)(k) = p(w(k)) psi(k-1) + q(w(k)) psi(k) + p(w(k+1)) psi(k+1)

with letter-dependent coefficients p (nonzero, off-diagonal) and q
(diagonal); p constant at 1 is the Schroedinger case.  Solutions of
J psi = E psi propagate through the one-step matrices

    M(k) = [[(E - q(w(k+1))) / p(w(k+2)),  -p(w(k+1)) / p(w(k+2))],
            [1, 0]]

whose ordered products form the cocycle; the factor at position k reads
the letters at k+1 and k+2.  Finite sections are truncations to positions
0..N-1 of the one-sided representative word with zero boundary conditions:
real symmetric tridiagonal matrices whose spectra approximate the operator
spectrum.  Cantor structure or measure-zero claims are never asserted here;
only cover-length trends are reported.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .coding import Alphabet, Coding
from .words import DEFAULT_BUDGET, word_prefix

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class CoefficientMap:
    """Letter-indexed Jacobi coefficients: off-diagonal p, diagonal q."""

    alphabet: Alphabet
    p_values: tuple[Number, ...]
    q_values: tuple[Number, ...]

    def __post_init__(self):
        if len(self.p_values) != len(self.alphabet) or \
                len(self.q_values) != len(self.alphabet):
            raise ValueError("need one (p, q) pair per letter")
        if any(v == 0 for v in self.p_values):
            raise ValueError("off-diagonal values p must be nonzero")

    @classmethod
    def constant(cls, alphabet: Alphabet, p: Number = 1,
                 q: Number = 0) -> "CoefficientMap":
        n = len(alphabet)
        return cls(alphabet, (p,) * n, (q,) * n)

    @classmethod
    def from_names(cls, alphabet: Alphabet, q: dict, p: Optional[dict] = None
                   ) -> "CoefficientMap":
        qv = tuple(q[l.name] for l in alphabet)
        pv = tuple((p or {}).get(l.name, 1) for l in alphabet)
        return cls(alphabet, pv, qv)

    def p(self, letter_id: int) -> Number:
        return self.p_values[letter_id]

    def q(self, letter_id: int) -> Number:
        return self.q_values[letter_id]

    @property
    def degenerate(self) -> bool:
        """All letters share one (p, q) pair: the induced system is periodic."""
        return len(set(zip(self.p_values, self.q_values))) == 1


def _warn_if_degenerate(coeff: CoefficientMap) -> None:
    if coeff.degenerate:
        warnings.warn(
            "all letters map to identical (p, q); the induced coefficient "
            "system is periodic and spectral conclusions for aperiodic "
            "operators do not apply",
            stacklevel=3,
        )


@dataclass(frozen=True)
class TransferMatrix:
    """2x2 real matrix; entries may be exact Fractions or floats."""

    a: Number
    b: Number
    c: Number
    d: Number

    @classmethod
    def identity(cls) -> "TransferMatrix":
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: "TransferMatrix") -> "TransferMatrix":
        return TransferMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> Number:
        return self.a * self.d - self.b * self.c

    def operator_norm(self) -> float:
        """Largest singular value."""
        f = float(self.a) ** 2 + float(self.b) ** 2 \
            + float(self.c) ** 2 + float(self.d) ** 2
        det = float(self.det())
        gap = max(f * f - 4 * det * det, 0.0)
        return math.sqrt((f + math.sqrt(gap)) / 2)

    def max_abs(self) -> float:
        return max(abs(float(v)) for v in (self.a, self.b, self.c, self.d))


def _div(a: Number, b: Number) -> Number:
    # keep int/int exact instead of decaying to float
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return Fraction(a) / Fraction(b)
    return a / b


def step_matrix(coeff: CoefficientMap, E: Number, first: int,
                second: int) -> TransferMatrix:
    """The one-step matrix of a window whose letters are (first, second).

    Its determinant is p(first)/p(second), exactly in rational mode.
    """
    p1, p2 = coeff.p(first), coeff.p(second)
    q1 = coeff.q(first)
    return TransferMatrix(_div(E - q1, p2), _div(-p1, p2), 1, 0)


def transfer_cocycle(c: Coding, coeff: CoefficientMap, E: Number, n: int,
                     budget: int = DEFAULT_BUDGET) -> TransferMatrix:
    """Ordered product of the first n one-step matrices along the word.

    Exact when `coeff` values and E are Fractions; identity for n = 0.
    """
    if n < 0:
        raise IndexError("cocycle step count must be >= 0")
    _warn_if_degenerate(coeff)
    word = word_prefix(c, n + 2, budget)
    out = TransferMatrix.identity()
    for k in range(n):
        out = step_matrix(coeff, E, word[k + 1], word[k + 2]) @ out
    return out


@dataclass(frozen=True)
class LyapunovEstimate:
    energy: float
    steps: int
    value: float
    samples: tuple[tuple[int, float], ...]  # (n, estimate) at n/4, n/2, n


RENORM_EVERY = 32


def lyapunov_estimate(c: Coding, coeff: CoefficientMap, E: Number, n: int,
                      budget: int = DEFAULT_BUDGET) -> LyapunovEstimate:
    """(1/n) log ||cocycle(n)|| with periodic renormalization.

    The running product is rescaled by its largest entry every few steps
    and the log accumulated separately, so n ~ 2^16 stays inside float
    range without changing the average.
    """
    if n < 1:
        raise IndexError("lyapunov estimates need n >= 1")
    _warn_if_degenerate(coeff)
    word = word_prefix(c, n + 2, budget)
    checkpoints = sorted({max(1, n // 4), max(1, n // 2), n})
    samples = []
    running = TransferMatrix.identity()
    log_scale = 0.0
    e_float = float(E)
    for k in range(n):
        first, second = word[k + 1], word[k + 2]
        p1, p2 = float(coeff.p(first)), float(coeff.p(second))
        q1 = float(coeff.q(first))
        running = TransferMatrix(
            (e_float - q1) / p2, -p1 / p2, 1.0, 0.0
        ) @ running
        if (k + 1) % RENORM_EVERY == 0:
            scale = running.max_abs()
            if scale > 0:
                running = TransferMatrix(
                    running.a / scale, running.b / scale,
                    running.c / scale, running.d / scale,
                )
                log_scale += math.log(scale)
        if k + 1 in checkpoints:
            norm = running.operator_norm()
            value = (log_scale + math.log(max(norm, 1e-300))) / (k + 1)
            samples.append((k + 1, value))
    return LyapunovEstimate(e_float, n, samples[-1][1], tuple(samples))


@dataclass(frozen=True)
class SpectrumApproximation:
    """Sorted eigenvalues of the N x N finite section."""

    level: int
    eigenvalues: tuple[float, ...]

    def cover(self, delta: float) -> tuple[tuple[float, float], ...]:
        """Union of [ev - delta, ev + delta], merged into disjoint intervals."""
        intervals: list[tuple[float, float]] = []
        for ev in self.eigenvalues:
            lo, hi = ev - delta, ev + delta
            if intervals and lo <= intervals[-1][1]:
                intervals[-1] = (intervals[-1][0], max(intervals[-1][1], hi))
            else:
                intervals.append((lo, hi))
        return tuple(intervals)

    def cover_length(self, delta: float) -> float:
        return sum(hi - lo for lo, hi in self.cover(delta))


def finite_section(c: Coding, coeff: CoefficientMap, size: int,
                   budget: int = DEFAULT_BUDGET) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and off-diagonal of the truncation to positions 0..size-1.

    The coupling between sites k and k+1 is p at the letter of position
    k + 1, matching the operator's row structure.
    """
    if size < 2:
        raise IndexError("finite sections need size >= 2")
    word = word_prefix(c, size + 1, budget)
    diag = np.array([float(coeff.q(word[k])) for k in range(size)])
    off = np.array([float(coeff.p(word[k + 1])) for k in range(size - 1)])
    return diag, off


def finite_section_spectrum(c: Coding, coeff: CoefficientMap, size: int,
                            budget: int = DEFAULT_BUDGET) -> SpectrumApproximation:
    """Eigenvalues of the finite section, sorted ascending.

    The matrix is real symmetric tridiagonal; a dense symmetric
    eigensolver is exact enough at desk scales (N <= a few thousand).
    """
    _warn_if_degenerate(coeff)
    diag, off = finite_section(c, coeff, size, budget)
    matrix = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    eigenvalues = np.linalg.eigvalsh(matrix)
    return SpectrumApproximation(size, tuple(float(v) for v in eigenvalues))


def spectral_bounds(coeff: CoefficientMap) -> tuple[float, float]:
    """Gershgorin-style enclosure [min q - 2 max|p|, max q + 2 max|p|]."""
    qs = [float(v) for v in coeff.q_values]
    top = 2 * max(abs(float(v)) for v in coeff.p_values)
    return min(qs) - top, max(qs) + top


def energy_grid(lo: float, hi: float, steps: int) -> list[float]:
    if steps < 2:
        return [lo]
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


def lyapunov_over_grid(c: Coding, coeff: CoefficientMap,
                       energies: Sequence[float], n: int,
                       budget: int = DEFAULT_BUDGET,
                       jobs: int = 1) -> list[LyapunovEstimate]:
    from .parallel import run_map

    return run_map(
        lambda E: lyapunov_estimate(c, coeff, E, n, budget), list(energies), jobs
    )
