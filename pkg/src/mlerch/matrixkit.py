"""Truncated upper-triangular matrices behind the residue formula.

With V_r(s) the column (zeta_r(s_1 + n, s_2, ...))_{n >= 0}, the shift identity
for multiple Hurwitz zeta functions reads A2(d; s_1-1) V_{r-1} = A1(s_1-1) V_r,
and B(d; t) = A1(t)^{-1} A2(d; t) has the explicit Bernoulli-polynomial entries
built here.  Residues along H_{i,k} are (0, k) entries of products of B's.

All constructors work over any scalar type; with int/Fraction inputs every
entry is an exact Fraction, which is what zero/nonzero decisions rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .bernoulli import as_exact, bernoulli_eval
from .core import (
    EvalPoint,
    Hyperplane,
    OffHyperplaneError,
    ParameterError,
    PoleProximityError,
    TwistParams,
    UnsupportedError,
    pochhammer,
)
from .evaluator import EvalResult, TruncationPolicy, eval_continued

Scalar = Union[Fraction, float, complex]
KINDS = ("A1", "A2", "B", "Delta", "M")


def _scalar(x) -> Scalar:
    if isinstance(x, (Fraction, float, complex)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return complex(x) if isinstance(x, complex) else float(x)


@dataclass(frozen=True)
class TruncatedMatrix:
    """Leading q x q block of an infinite upper-triangular matrix."""

    q: int
    entries: Tuple[Tuple[Scalar, ...], ...]
    kind: str = "product"

    def __post_init__(self):
        if len(self.entries) != self.q or any(len(row) != self.q for row in self.entries):
            raise ParameterError("entries must be a q x q array")
        for j, row in enumerate(self.entries):
            if any(row[c] != 0 for c in range(j)):
                raise ParameterError("matrix is not upper triangular")

    def __getitem__(self, jk: Tuple[int, int]) -> Scalar:
        j, k = jk
        return self.entries[j][k]

    def __matmul__(self, other: "TruncatedMatrix") -> "TruncatedMatrix":
        if self.q != other.q:
            raise ParameterError("truncation orders differ")
        q = self.q
        rows = []
        for j in range(q):
            row = []
            for k in range(q):
                acc: Scalar = 0
                for m in range(j, k + 1):
                    acc = acc + self.entries[j][m] * other.entries[m][k]
                row.append(acc if k >= j else 0)
            rows.append(tuple(row))
        return TruncatedMatrix(q, tuple(rows), "product")

    def __sub__(self, other: "TruncatedMatrix") -> "TruncatedMatrix":
        rows = tuple(
            tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)
        )
        return TruncatedMatrix(self.q, rows, "product")

    def max_abs(self) -> float:
        return max((abs(e) for row in self.entries for e in row), default=0.0)

    def first_row(self) -> Tuple[Scalar, ...]:
        return self.entries[0]


def _entry(kind: str, d: Scalar, t: Scalar, j: int, k: int) -> Scalar:
    """Entry (j, j + k) of the named matrix, k >= 0."""
    x = t + j
    if kind == "A1":
        return pochhammer(x, k)
    if kind == "A2":
        return d ** k * pochhammer(x, k - 1) if k else Fraction(1) if isinstance(x, Fraction) else 1.0
    if kind == "Delta":
        return x if k == 0 else 0
    if kind == "M":
        return x if k == 1 else 0
    if kind == "B":
        if k == 0:
            return 1 / x
        out = bernoulli_eval(k, d) / math.factorial(k)
        for u in range(1, k):
            out = out * (x + u)
        return out
    raise ParameterError(f"unknown matrix kind {kind!r}; expected one of {KINDS}")


def build_matrix(kind: str, d, t, q: int) -> TruncatedMatrix:
    """Leading q x q block of A1(t), A2(d; t), B(d; t), Delta(t) or M(t)."""
    if q < 1:
        raise ParameterError("q must be >= 1")
    d, t = _scalar(d), _scalar(t)
    if kind == "B":
        for j in range(q):
            if t + j == 0:
                raise PoleProximityError(f"B(d; t) has a singular diagonal at t = {t}")
    zero = Fraction(0) if isinstance(t, Fraction) and isinstance(d, Fraction) else 0.0
    rows = []
    for j in range(q):
        rows.append(tuple(zero if c < j else _entry(kind, d, t, j, c - j) for c in range(q)))
    return TruncatedMatrix(q, tuple(rows), kind)


def verify_inverse_pair(d, t, q: int) -> float:
    """max |A1(t) B(d; t) - A2(d; t)| over the leading q x q block; 0 exactly for rational input."""
    prod = build_matrix("A1", d, t, q) @ build_matrix("B", d, t, q)
    diff = prod - build_matrix("A2", d, t, q)
    return diff.max_abs()


def chain_first_row(alphas: Sequence, t_values: Sequence, q: int) -> Tuple[Scalar, ...]:
    """First row of prod_{d=1}^{i-1} B(alpha_{d+1} - alpha_d; t_d), truncated at q."""
    alphas = [_scalar(a) for a in alphas]
    if len(alphas) < len(t_values) + 1:
        raise ParameterError("need one more alpha than t value")
    row: Optional[List[Scalar]] = None
    for n, t in enumerate(t_values):
        mat = build_matrix("B", alphas[n + 1] - alphas[n], t, q)
        if row is None:
            row = list(mat.first_row())
            continue
        row = [sum((row[m] * mat[m, k] for m in range(k + 1)), start=0 * row[0]) for k in range(q)]
    if row is None:
        raise ParameterError("need at least one t value")
    return tuple(row)


def first_row_chain(alphas: Sequence, i: int, t_values: Sequence, k: int, q: Optional[int] = None) -> Scalar:
    """(0, k) entry of prod_{d=1}^{i-1} B(alpha_{d+1} - alpha_d; t_d).

    Upper-triangularity makes the entry independent of the truncation order
    once q > k, so q defaults to k + 1.
    """
    if i < 2:
        raise ParameterError("i must be >= 2")
    if len(t_values) != i - 1:
        raise ParameterError(f"expected {i - 1} t values, got {len(t_values)}")
    if k < 0:
        raise ParameterError("k must be >= 0")
    q = k + 1 if q is None else q
    if q <= k:
        raise ParameterError("q must exceed k")
    return chain_first_row(alphas[:i], [_scalar(t) for t in t_values], q)[k]


def two_prod_oracle(x, y, alpha, beta, gamma, k: int) -> Scalar:
    """a_{0,k} of B(beta - alpha; x) B(gamma - beta; y) from its closed form."""
    x, y = _scalar(x), _scalar(y)
    if x == 0 or y + k == 0:
        raise PoleProximityError("x = 0 or y = -k makes the closed form singular")
    d1 = _scalar(beta) - _scalar(alpha)
    d2 = _scalar(gamma) - _scalar(beta)
    acc: Scalar = 0
    for i in range(k + 1):
        acc = acc + (pochhammer(x, i - 1) * pochhammer(y + i + 1, k - i - 1)
                     * bernoulli_eval(i, d1) * bernoulli_eval(k - i, d2))
    return acc / (x * (y + k))


def _exact_or_complex(z: complex) -> Scalar:
    if z.imag == 0:
        exact = as_exact(z.real)
        if exact is not None:
            return exact
    return z


def residue_hurwitz(alphas, h: Hyperplane, point, policy: Optional[TruncationPolicy] = None) -> EvalResult:
    """Residue of zeta_r(s; alpha) along h, restricted to ``point`` on h.

    ``point`` is an EvalPoint or a plain sequence; a sequence of ints and
    Fractions keeps the hyperplane test and the B-chain exact.
    """
    policy = policy or TruncationPolicy()
    if isinstance(alphas, TwistParams):
        if not alphas.is_hurwitz:
            raise UnsupportedError("residues are implemented for multiple Hurwitz zeta functions only")
        params = alphas
    else:
        params = TwistParams.hurwitz(alphas)
    if isinstance(point, EvalPoint):
        coords = [_exact_or_complex(v) for v in point.values]
    else:
        coords = [Fraction(v) if isinstance(v, int) else v for v in point]
        coords = [v if isinstance(v, Fraction) else _exact_or_complex(complex(v)) for v in coords]
    r = params.depth
    if len(coords) != r:
        raise ParameterError(f"point has {len(coords)} coordinates, expected {r}")
    if h.i > r:
        raise ParameterError(f"{h} does not exist in depth {r}")
    sums = []
    acc: Scalar = 0
    for v in coords:
        acc = acc + v
        sums.append(acc)
    off = sums[h.i - 1] - (h.i - h.k)
    if abs(off) > policy.pole_tolerance:
        raise OffHyperplaneError(f"point is {float(abs(off)):.3g} away from {h}")
    diag = {}
    if h.i == 1:
        if h.k != 0:
            # analytic across H_{1,k} for k >= 1
            return EvalResult(0j, 0.0, 0, {"note": "not a polar hyperplane"})
        chain: Scalar = Fraction(1)
    else:
        t_values = [sums[n] - (n + 1) for n in range(h.i - 1)]
        chain = first_row_chain(params.alphas, h.i, t_values, h.k)
    if isinstance(chain, Fraction):
        diag["exact_chain"] = str(chain)
    if h.i == r:
        return EvalResult(complex(chain), 0.0, 0, diag)
    rest = TwistParams.hurwitz(params.alphas[h.i:])
    factor = eval_continued(rest, EvalPoint(tuple(complex(v) for v in coords[h.i:])), policy)
    diag.update(factor.diagnostics)
    c = complex(chain)
    return EvalResult(c * factor.value, abs(c) * factor.error_bound, factor.region_index, diag)
