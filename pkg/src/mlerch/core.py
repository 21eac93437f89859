"""Shared domain types and elementary coefficient functions."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Tuple, Union

Real = Union[int, float, Fraction]


class MlerchError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(MlerchError, ValueError):
    """Invalid function parameters or arguments."""


class RegionError(MlerchError):
    """The point lies outside the region where the requested method applies."""


class PoleProximityError(MlerchError):
    """The point lies on (or within tolerance of) a singular hyperplane."""

    def __init__(self, message: str, hyperplane: "Hyperplane | None" = None):
        super().__init__(message)
        self.hyperplane = hyperplane


class ConditioningError(MlerchError):
    """A divisor in the recursion is below the conditioning floor."""


class AccuracyError(MlerchError):
    """The requested accuracy could not be certified."""

    def __init__(self, message: str, achieved_bound: float = math.inf, best_value: "complex | None" = None):
        super().__init__(message)
        self.achieved_bound = achieved_bound
        self.best_value = best_value


class OffHyperplaneError(MlerchError):
    """A residue was requested at a point not on the hyperplane."""


class UnsupportedError(MlerchError):
    """The requested computation is outside what the package implements."""


def _check_unit_interval(name: str, values: Sequence[Real]) -> None:
    for v in values:
        if isinstance(v, complex) or not (0 <= v < 1):
            raise ParameterError(f"{name} entries must be real numbers in [0, 1), got {v!r}")


def _as_real(x: Real) -> Real:
    # keep exact rationals exact, everything else becomes float
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    return float(x)


@dataclass(frozen=True)
class TwistParams:
    """Parameters (lambda_1..lambda_r; alpha_1..alpha_r) of a multiple Lerch function.

    Entries may be floats or :class:`fractions.Fraction`; fractions keep the
    cumulative twists ``mus`` exact, which matters for deciding whether a
    partial twist sum is an integer.
    """

    lambdas: Tuple[Real, ...]
    alphas: Tuple[Real, ...]

    def __post_init__(self):
        lambdas = tuple(_as_real(x) for x in self.lambdas)
        alphas = tuple(_as_real(x) for x in self.alphas)
        if not lambdas:
            raise ParameterError("depth must be at least 1")
        if len(lambdas) != len(alphas):
            raise ParameterError(
                f"got {len(lambdas)} lambdas but {len(alphas)} alphas"
            )
        _check_unit_interval("lambdas", lambdas)
        _check_unit_interval("alphas", alphas)
        object.__setattr__(self, "lambdas", lambdas)
        object.__setattr__(self, "alphas", alphas)

    @classmethod
    def hurwitz(cls, alphas: Sequence[Real]) -> "TwistParams":
        return cls((0,) * len(alphas), tuple(alphas))

    @property
    def depth(self) -> int:
        return len(self.lambdas)

    @property
    def mus(self) -> Tuple[Real, ...]:
        out = []
        acc: Real = 0
        for lam in self.lambdas:
            acc = acc + lam
            out.append(acc)
        return tuple(out)

    @property
    def is_hurwitz(self) -> bool:
        return all(lam == 0 for lam in self.lambdas)


@dataclass(frozen=True)
class EvalPoint:
    """A point of C^r kept as ``base + shift`` with integer shifts.

    Recursion only ever adds integers to coordinates, so keeping the shifts
    separate gives collision-free memo keys.
    """

    base: Tuple[complex, ...]
    shift: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        base = tuple(complex(b) for b in self.base)
        shift = tuple(int(k) for k in self.shift) or (0,) * len(base)
        if len(shift) != len(base):
            raise ParameterError("shift must have one entry per coordinate")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "shift", shift)

    @classmethod
    def of(cls, *coords: complex) -> "EvalPoint":
        return cls(tuple(coords))

    @property
    def depth(self) -> int:
        return len(self.base)

    @property
    def values(self) -> Tuple[complex, ...]:
        return tuple(b + k for b, k in zip(self.base, self.shift))

    def shifted(self, index: int, amount: int) -> "EvalPoint":
        shift = list(self.shift)
        shift[index] += amount
        return EvalPoint(self.base, tuple(shift))

    def partial_sums(self) -> Tuple[complex, ...]:
        out = []
        acc = 0j
        for v in self.values:
            acc += v
            out.append(acc)
        return tuple(out)


@dataclass(frozen=True)
class Hyperplane:
    """H_{i,k} = {s : s_1 + ... + s_i = i - k}."""

    i: int
    k: int

    def __post_init__(self):
        if self.i < 1 or self.k < 0:
            raise ParameterError(f"invalid hyperplane H_{{{self.i},{self.k}}}")

    def __str__(self) -> str:
        return f"H_{{{self.i},{self.k}}}"


@dataclass(frozen=True)
class RegionIndex:
    """Names the open set U_r(m) = {Re(s_1+...+s_i) > i - m for all i}."""

    m: int

    def contains(self, s: EvalPoint) -> bool:
        return all(
            p.real > i - self.m for i, p in enumerate(s.partial_sums(), start=1)
        )


def pochhammer(s: complex, k: int) -> complex:
    """Normalized Pochhammer symbol s(s+1)...(s+k)/(k+1)!, equal to 1 at k = -1."""
    if k < -1:
        raise ParameterError("k must be >= -1")
    out = 1
    for j in range(k + 1):
        out = out * (s + j) / (j + 1)
    return out


def unit_twist(a: Real) -> complex:
    """e(a) = exp(2 pi i a); exact at multiples of 1/4."""
    frac = Fraction(a) % 1 if isinstance(a, (Fraction, int)) else Fraction(float(a) % 1.0)
    quarter = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j, Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}
    if frac in quarter:
        return quarter[frac]
    return cmath.exp(2j * math.pi * float(frac))


def region_index(s: EvalPoint) -> int:
    """Smallest m >= 0 with s in U_r(m)."""
    m = 0
    for i, p in enumerate(s.partial_sums(), start=1):
        m = max(m, math.floor(i - p.real) + 1)
    return m


def hyperplane_offset(s: EvalPoint, h: Hyperplane) -> complex:
    """s_1 + ... + s_i - (i - k); zero exactly on H_{i,k}."""
    if h.i > s.depth:
        raise ParameterError(f"{h} needs depth >= {h.i}, point has depth {s.depth}")
    return s.partial_sums()[h.i - 1] - (h.i - h.k)
