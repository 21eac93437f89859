"""Exact Bernoulli polynomials, their rational zeros, and Apostol-type polynomials.

Coefficient lists are little-endian: ``coeffs[j]`` multiplies ``t**j``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .core import ParameterError

Scalar = Union[Fraction, complex, float, int]

_lock = threading.Lock()
_numbers: List[Fraction] = [Fraction(1)]


def bernoulli_numbers(n: int) -> Tuple[Fraction, ...]:
    """B_0..B_n with B_1 = -1/2, cached process-wide."""
    if n < 0:
        raise ParameterError("n must be >= 0")
    if len(_numbers) <= n:
        with _lock:
            # sum_{j<m} C(m+1, j) B_j + (m+1) B_m = 0
            for m in range(len(_numbers), n + 1):
                acc = sum(math.comb(m + 1, j) * _numbers[j] for j in range(m))
                _numbers.append(-acc / (m + 1))
    return tuple(_numbers[: n + 1])


@dataclass(frozen=True)
class BernoulliPoly:
    n: int
    coeffs: Tuple[Fraction, ...]

    def __call__(self, t: Scalar) -> Scalar:
        return horner(self.coeffs, t)

    def derivative(self) -> Tuple[Fraction, ...]:
        return poly_derivative(self.coeffs)


def bernoulli_polys(N: int) -> List[BernoulliPoly]:
    """B_0(t) .. B_N(t), with B_n(t) = sum_j C(n, j) B_j t^(n-j)."""
    nums = bernoulli_numbers(N)
    out = []
    for n in range(N + 1):
        coeffs = tuple(math.comb(n, j) * nums[n - j] for j in range(n + 1))
        out.append(BernoulliPoly(n, coeffs))
    return out


def bernoulli_poly(n: int) -> BernoulliPoly:
    return bernoulli_polys(n)[n]


def horner(coeffs: Sequence[Scalar], t: Scalar) -> Scalar:
    acc: Scalar = 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def bernoulli_eval(n: int, t: Scalar) -> Scalar:
    """B_n(t); exact when ``t`` is an int or Fraction."""
    if n < 0:
        raise ParameterError("n must be >= 0")
    if isinstance(t, int):
        t = Fraction(t)
    return horner(bernoulli_poly(n).coeffs, t)


# --- small exact polynomial toolkit -------------------------------------


def _trim(p: Sequence[Fraction]) -> List[Fraction]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_derivative(p: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    return tuple(j * p[j] for j in range(1, len(p)))


def poly_affine(p: Sequence[Fraction], a: Fraction, b: Fraction) -> Tuple[Fraction, ...]:
    """Coefficients of p(a*t + b)."""
    out = [Fraction(0)] * len(p)
    power = [Fraction(1)]  # (a t + b)^j
    for j, c in enumerate(p):
        for i, e in enumerate(power):
            out[i] += c * e
        nxt = [Fraction(0)] * (len(power) + 1)
        for i, e in enumerate(power):
            nxt[i] += e * b
            nxt[i + 1] += e * a
        power = nxt
    return tuple(out)


def poly_divmod(p: Sequence[Fraction], q: Sequence[Fraction]):
    p, q = _trim(p), _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    rem = list(p)
    while len(rem) >= len(q):
        c = rem[-1] / q[-1]
        shift = len(rem) - len(q)
        quot[shift] = c
        for i, e in enumerate(q):
            rem[shift + i] -= c * e
        rem.pop()
        rem = _trim(rem)
    return quot, rem


def poly_gcd(p: Sequence[Fraction], q: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Monic gcd over Q."""
    a, b = _trim(p), _trim(q)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return ()
    lead = a[-1]
    return tuple(c / lead for c in a)


def _homogeneous_eval(ints: Sequence[int], num: int, den: int) -> int:
    """den**deg * p(num/den) for an integer coefficient list."""
    acc = ints[-1]
    scale = 1
    for c in reversed(ints[:-1]):
        scale *= den
        acc = acc * num + c * scale
    return acc


def rational_roots(p: Sequence[Fraction]) -> List[Fraction]:
    """All rational roots of p, by exhaustive rational-root-theorem candidates."""
    from sympy import divisors

    p = _trim(p)
    roots: List[Fraction] = []
    while p and p[0] == 0:
        roots.append(Fraction(0))
        p = p[1:]
    if len(p) <= 1:
        return sorted(set(roots))
    den = math.lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    lead, const = abs(ints[-1]), abs(ints[0])
    # Cauchy bound on root modulus
    bound = 1 + max(Fraction(abs(c), lead) for c in ints[:-1])
    for q in divisors(lead):
        for num in divisors(const):
            if math.gcd(num, q) != 1 or Fraction(num, q) > bound:
                continue
            for cand in (num, -num):
                if _homogeneous_eval(ints, cand, q) == 0:
                    roots.append(Fraction(cand, q))
    return sorted(set(roots))


# --- zero index sets ------------------------------------------------------


@dataclass(frozen=True)
class ZeroIndexSet:
    """K = {n >= 1 : B_n(d) = 0} in one of four descriptive forms.

    ``kind`` is ``"empty"``, ``"odd>=3"``, ``"odd>=1"`` or ``"numeric"``; the
    numeric form lists indices whose |B_n(d)| fell below a threshold and never
    claims that they are true zeros.
    """

    kind: str
    indeterminate: Tuple[int, ...] = ()
    nmax: Optional[int] = None

    def __contains__(self, n: int) -> bool:
        if self.kind == "empty":
            return False
        if self.kind == "odd>=3":
            return n >= 3 and n % 2 == 1
        if self.kind == "odd>=1":
            return n >= 1 and n % 2 == 1
        return n in self.indeterminate

    @property
    def exact(self) -> bool:
        return self.kind != "numeric"

    def enumerate(self, bound: int) -> List[int]:
        return [n for n in range(1, bound + 1) if n in self]

    def describe(self) -> str:
        return {
            "empty": "{}",
            "odd>=3": "{n odd, n >= 3}",
            "odd>=1": "{n odd, n >= 1}",
        }.get(self.kind, f"indeterminate {list(self.indeterminate)} (n <= {self.nmax})")


def as_exact(d) -> Optional[Fraction]:
    """Exact rational for ``d`` if it has one we are willing to trust.

    Fractions and ints pass through; floats qualify when they are short dyadic
    rationals (denominator at most 2**20), e.g. 0.5 or 0.25.
    """
    if isinstance(d, Fraction):
        return d
    if isinstance(d, int):
        return Fraction(d)
    if isinstance(d, complex):
        if d.imag != 0:
            return None
        d = d.real
    f = Fraction(float(d))
    return f if f.denominator <= 2 ** 20 else None


def zero_index_set(d, nmax: Optional[int] = None) -> ZeroIndexSet:
    """Exact K for rational d in (-1, 1), by Inkeri's classification."""
    exact = as_exact(d)
    if exact is None:
        raise ParameterError(f"{d!r} is not an exact rational; use zero_index_set_numeric")
    if not (-1 < exact < 1):
        raise ParameterError(f"d must lie in (-1, 1), got {exact}")
    if exact == 0:
        return ZeroIndexSet("odd>=3")
    if exact == Fraction(1, 2):
        return ZeroIndexSet("odd>=1")
    return ZeroIndexSet("empty")


def zero_index_set_numeric(d, nmax: int, threshold: float = 1e-12) -> ZeroIndexSet:
    """K for a real d that may be irrational; falls back to the exact path when possible."""
    if as_exact(d) is not None:
        return zero_index_set(d)
    if nmax < 1:
        raise ParameterError("nmax must be >= 1")
    x = float(d)
    polys = bernoulli_polys(nmax)
    small = tuple(
        n for n in range(1, nmax + 1) if abs(horner([float(c) for c in polys[n].coeffs], x)) < threshold
    )
    return ZeroIndexSet("numeric", small, nmax)


# --- Apostol-type polynomials -----------------------------------------------


def apostol_polys(N: int, a: Scalar, c: Scalar) -> List[Scalar]:
    """P_0(a,c)..P_N(a,c) from e^{ax}/(e^x - c) = sum P_n(a,c) x^n/n!."""
    if c == 1:
        raise ParameterError("c = 1 makes the generating series undefined")
    if isinstance(a, int):
        a = Fraction(a)
    if isinstance(c, int):
        c = Fraction(c)
    out: List[Scalar] = []
    for n in range(N + 1):
        acc = a ** n - sum(math.comb(n, j) * out[j] for j in range(n))
        out.append(acc / (1 - c))
    return out


@dataclass(frozen=True)
class ApostolPoly:
    """P_n(a, c) as a polynomial in ``a`` for fixed c."""

    n: int
    c: Scalar
    coeffs: Tuple[Scalar, ...]

    def __call__(self, a: Scalar) -> Scalar:
        return horner(self.coeffs, a)


def apostol_poly(n: int, c: Scalar) -> ApostolPoly:
    if c == 1:
        raise ParameterError("c = 1 makes the generating series undefined")
    if isinstance(c, int):
        c = Fraction(c)
    polys: List[List[Scalar]] = []
    for m in range(n + 1):
        acc: List[Scalar] = [0] * (m + 1)
        acc[m] = 1
        for j, pj in enumerate(polys):
            w = math.comb(m, j)
            for i, e in enumerate(pj):
                acc[i] -= w * e
        polys.append([e / (1 - c) for e in acc])
    return ApostolPoly(n, c, tuple(polys[n]))
