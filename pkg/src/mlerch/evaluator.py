"""Evaluation of multiple Lerch zeta functions.

Inside the region of absolute convergence the nested series is summed
directly: an explicit head over indices <= N plus tails in which every index
exceeds N.  A tail is itself a multiple Lerch function with all alpha_i
shifted by N, and it is evaluated with the shift identities below, whose
k-series then converge like N**-k.

Outside that region the shift identities

    (1 - e(l1)) L_r(s) = e(l1) sum_{k>=-1} (s1)_k d^{k+1} L_{r-1}(mu2, ..; s1+s2+k+1, ..)
                         - sum_{k>=0} (s1)_k L_r(s1+k+1, ..)

and, when l1 = 0,

    (s1-1) L_r(s) = sum_{k>=-1} (s1-1)_k d^{k+1} L_{r-1}(s1+s2+k, ..)
                    - sum_{k>=1} (s1-1)_k L_r(s1+k, ..)

(d = alpha_2 - alpha_1) are solved for the left-hand value.  Every depth-r
term on the right has its first coordinate shifted by at least one, so the
recursion walks up a column of shifted values until the direct method
applies.  For l1 = 0 the column stores (s1+j-1) L_r(s1+j, ..) rather than
L_r itself: the factor (s1-1)_k contains (s1+k-1), so poles of the column
entries on s1+j = 1 cancel exactly instead of producing 0 * inf.
"""

from __future__ import annotations

import cmath
import math
import sys
from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

from .bernoulli import bernoulli_numbers
from .core import (
    AccuracyError,
    ConditioningError,
    EvalPoint,
    Hyperplane,
    ParameterError,
    PoleProximityError,
    RegionError,
    TwistParams,
    pochhammer,
    region_index,
    unit_twist,
)

_ULP = 2.0 ** -52
_SNAP = 1e-12

PointLike = Union[EvalPoint, Sequence[complex], complex]


@dataclass(frozen=True)
class TruncationPolicy:
    eps: float = 1e-10
    direct_cutoff_margin: float = 0.5
    max_terms: int = 10_000_000
    max_k: int = 200
    pole_tolerance: float = 1e-8
    conditioning_floor: float = 1e-8
    head_terms: int = 32

    def __post_init__(self):
        for name in ("eps", "direct_cutoff_margin", "max_terms", "max_k",
                     "pole_tolerance", "conditioning_floor", "head_terms"):
            if not getattr(self, name) > 0:
                raise ParameterError(f"policy field {name} must be positive")


@dataclass
class EvalResult:
    value: complex
    error_bound: float
    region_index: int
    diagnostics: Dict[str, int] = field(default_factory=dict)


# A function in the recursion: twists, alphas, and a common integer offset
# added to every alpha (offset > 0 marks a tail function).
@dataclass(frozen=True)
class _Fn:
    lambdas: tuple
    alphas: tuple
    offset: int = 0

    @property
    def depth(self) -> int:
        return len(self.lambdas)

    def a(self, i: int) -> float:
        return float(self.alphas[i]) + self.offset

    def sub(self) -> "_Fn":
        mu2 = _mod1(self.lambdas[0] + self.lambdas[1])
        return _Fn((mu2,) + self.lambdas[2:], self.alphas[1:], self.offset)

    def prefix(self, j: int, offset: int) -> "_Fn":
        return _Fn(self.lambdas[:j], self.alphas[:j], offset)


def _mod1(x):
    if isinstance(x, Fraction):
        return x % 1
    y = float(x) % 1.0
    return 0.0 if (y < _SNAP or 1.0 - y < _SNAP) else y


def _twist(lam, n: int = 1) -> complex:
    if isinstance(lam, Fraction):
        return unit_twist(lam * n)
    return unit_twist(float(lam) * n % 1.0)


def _cpow(base: float, s: complex) -> complex:
    """base**(-s) for a positive real base."""
    return cmath.exp(-s * math.log(base))


def _bound(fn: _Fn, sigmas: Sequence[float], nmin: int) -> float:
    """Upper bound for sum over n_1 >= nmin, n_1 > ... > n_r >= 1 of |terms|.

    Inner sums over n_i < n_1 are bounded independently: by a convergent
    constant when sigma_i > 1, otherwise by n_1 * (n_1 + a)^max(0, -sigma_i).
    """
    r = fn.depth
    c = 1.0
    p = 0
    q = 0.0
    for i in range(1, r):
        sig = sigmas[i]
        if sig > 1:
            a = fn.a(i)
            c *= (1 + a) ** -sig + (1 + a) ** (1 - sig) / (sig - 1)
        else:
            p += 1
            if sig < 0:
                q -= sig
    tau = sigmas[0] - p - q
    if tau <= 1:
        return math.inf
    x0 = nmin + fn.a(0)
    try:
        return c * 2.0 ** q * (x0 ** -tau + x0 ** (1 - tau) / (tau - 1))
    except OverflowError:
        return math.inf


class _Engine:
    """One top-level evaluation: memo table, dependency graph and error accounting.

    Every node value is an affine combination of other node values, so the
    truncation error committed locally at a node reaches the root multiplied
    by the node's adjoint (the derivative of the root value with respect to
    it).  ``error_bound`` sums |adjoint| * local error over all nodes; unlike
    multiplying absolute coefficients level by level, this keeps the
    cancellation between the shifted terms of the identities.
    """

    def __init__(self, policy: TruncationPolicy, tol: float):
        self.policy = policy
        self.tol = tol
        self.memo: Dict[tuple, complex] = {}
        self.local: Dict[tuple, float] = {}
        self.edges: Dict[tuple, list] = {}
        self.order: list = []
        self.stats: Counter = Counter()
        self._level = 0

    # --- helpers ---------------------------------------------------------

    @staticmethod
    def point(base: tuple, j: int) -> tuple:
        return (base[0] + j,) + base[1:]

    def in_direct_region(self, s: tuple) -> bool:
        acc = 0.0
        for i, v in enumerate(s, start=1):
            acc += v.real
            if acc < i + self.policy.direct_cutoff_margin:
                return False
        return True

    def _node(self, key, compute) -> Tuple[complex, tuple]:
        hit = self.memo.get(key)
        if hit is not None:
            self.stats["cache_hits"] += 1
            return hit, key
        self._level += 1
        self.stats["max_depth"] = max(self.stats["max_depth"], self._level)
        try:
            value, err, edges = compute()
        finally:
            self._level -= 1
        self.stats["nodes"] += 1
        self.memo[key] = value
        self.local[key] = err
        self.edges[key] = edges
        self.order.append(key)
        return value, key

    def error_bound(self, root: tuple) -> float:
        """sum over nodes of |d root / d node| * local error."""
        adj: Dict[tuple, complex] = {root: 1.0}
        total = 0.0
        # children always finish before their parents, so reverse completion
        # order visits every parent before any of its children
        for key in reversed(self.order):
            a = adj.get(key)
            if a is None or a == 0:
                continue
            total += abs(a) * self.local[key]
            for child, c in self.edges[key]:
                adj[child] = adj.get(child, 0) + a * c
        return total

    def _series(self, k0: int, coef: Callable[[int], complex], child: Callable[[int], Tuple[complex, tuple]],
                term_bound: Callable[[int], float], ratio: Callable[[int], float]):
        """sum_{k>=k0} coef(k) * child(k), truncated once the tail bound is below tol.

        term_bound(k) bounds |coef(k) * child(k)|; ratio(K) bounds the ratio of
        consecutive term bounds for all k >= K.  Returns (sum, local error, edges).
        """
        total = 0j
        err = 0.0
        mag = 0.0
        edges = []
        k = k0
        max_k = self.policy.max_k
        while True:
            c = coef(k)
            if c != 0:
                v, key = child(k)
                total += c * v
                mag += abs(c * v)
                edges.append((key, c))
                self.stats["terms"] += 1
            nxt = k + 1
            if coef(nxt) == 0:
                # Pochhammer-type coefficients stay zero from here on
                break
            rho = ratio(nxt)
            tail = term_bound(nxt) / (1 - rho) if rho < 1 else math.inf
            if tail <= self.tol:
                err += tail
                break
            if nxt - k0 >= max_k:
                err += tail
                self.stats["truncated_at_cap"] += 1
                break
            k = nxt
        return total, err + 4 * _ULP * mag, edges

    # --- values ----------------------------------------------------------

    def value(self, fn: _Fn, base: tuple, j: int) -> Tuple[complex, tuple]:
        """L at (base_1 + j, base_2, ...) and its node key."""
        return self._node(("L", fn, base, j), lambda: self._value(fn, base, j))

    def _value(self, fn, base, j):
        s = self.point(base, j)
        if fn.offset == 0 and self.in_direct_region(s):
            v, key = self.direct(fn, base, j)
            return v, 0.0, [(key, 1)]
        if fn.offset > 0:
            b = _bound(fn, [v.real for v in s], fn.depth)
            if b <= self.tol:
                self.stats["leaves"] += 1
                return 0j, b, []
        if fn.lambdas[0] == 0:
            x = s[0] - 1
            if abs(x) < self.policy.pole_tolerance:
                raise PoleProximityError(
                    f"evaluation needs a depth-{fn.depth} value at s_1 = {s[0]}, on its pole s_1 = 1",
                    Hyperplane(1, 0),
                )
            w, key = self.wvalue(fn, base, j)
            return w / x, 0.0, [(key, 1 / x)]
        if fn.depth == 1:
            return self._lerch1_step(fn, base, j)
        return self._lerch_step(fn, base, j)

    def wvalue(self, fn: _Fn, base: tuple, j: int) -> Tuple[complex, tuple]:
        """(s_1 - 1) L for a function with lambda_1 = 0."""
        return self._node(("W", fn, base, j), lambda: self._wvalue(fn, base, j))

    def _wvalue(self, fn, base, j):
        s = self.point(base, j)
        x = s[0] - 1
        if fn.offset == 0 and self.in_direct_region(s):
            v, key = self.direct(fn, base, j)
            return x * v, 0.0, [(key, x)]
        if fn.offset > 0:
            b = abs(x) * _bound(fn, [v.real for v in s], fn.depth)
            if b <= self.tol:
                self.stats["leaves"] += 1
                return 0j, b, []
        if fn.depth == 1:
            return self._hurwitz1_step(fn, base, j)
        return self._hurwitz_step(fn, base, j)

    # --- shift identities --------------------------------------------------

    def _conditioned(self, den: complex, what: str) -> None:
        if abs(den) < self.policy.conditioning_floor:
            raise ConditioningError(f"|{what}| = {abs(den):.3g} is below the conditioning floor")

    def _lhs(self, fn: _Fn, base: tuple, j: int, x: complex, shift: int):
        """sum_{k>=-1} (x)_k d^{k+1} L_{r-1}(s1+s2+k+shift, s3, ..), s1 = base_1 + j.

        With shift = 0, x = s1 - 1 this is the l1 = 0 left side; with
        shift = 1, x = s1 it is the l1 != 0 one (without the e(l1) factor).
        A depth-1 inner function has its n = 1 term summed in closed form:
        sum_{k>=-1} (x)_k d^{k+1} X^{-(x+1)-k} = (X - d)^{-x} with X = 1 + a2.
        """
        sub = fn.sub()
        subbase = (base[0] + base[1],) + base[2:]
        d = fn.alphas[1] - fn.alphas[0]
        s = self.point(base, j)
        peel = sub.depth == 1
        a1, a2 = fn.a(0), fn.a(1)
        lam2 = _twist(sub.lambdas[0])
        closed = lam2 * _cpow(1 + a2, s[1]) * _cpow(1 + a1, x) if peel else 0j
        rest = [v.real for v in subbase[1:]]
        nmin = 2 if peel else sub.depth
        x0 = nmin + sub.a(0)

        def child(k):
            v, key = self.value(sub, subbase, j + k + shift)
            if peel:
                v -= lam2 * _cpow(1 + a2, subbase[0] + j + k + shift)
            return v, key

        def coef(k):
            return pochhammer(x, k) * (d ** (k + 1) if k + 1 else 1)

        def term_bound(k):
            sig = (subbase[0] + j + k + shift).real
            return abs(coef(k)) * _bound(sub, [sig] + rest, nmin)

        def ratio(K):
            return max(1.0, (abs(x) + K + 1) / (K + 2)) * abs(float(d)) / x0

        if d == 0:
            v, key = child(-1)
            return closed + v, 0.0, [(key, 1)]
        total, err, edges = self._series(-1, coef, child, term_bound, ratio)
        return closed + total, err, edges

    def _hurwitz_step(self, fn, base, j):
        s = self.point(base, j)
        x = s[0] - 1
        lhs, lhs_err, lhs_edges = self._lhs(fn, base, j, x, 0)
        rest = [v.real for v in s[1:]]
        x0 = fn.depth + fn.a(0)

        def child(k):
            return self.wvalue(fn, base, j + k)

        def term_bound(k):
            # |red_k(x) W(j+k)| = |(x)_k| |L(s1+k)|
            return abs(pochhammer(x, k)) * _bound(fn, [s[0].real + k] + rest, fn.depth)

        def ratio(K):
            return max(1.0, (abs(x) + K + 1) / (K + 2)) / x0

        tot, err, edges = self._series(1, _reduced(x), child, term_bound, ratio)
        return lhs - tot, lhs_err + err, lhs_edges + [(key, -c) for key, c in edges]

    def _lerch_step(self, fn, base, j):
        s = self.point(base, j)
        e1 = _twist(fn.lambdas[0])
        den = 1 - e1
        self._conditioned(den, "1 - e(lambda_1)")
        lhs, lhs_err, lhs_edges = self._lhs(fn, base, j, s[0], 1)
        rest = [v.real for v in s[1:]]
        x0 = fn.depth + fn.a(0)

        def coef(k):
            return pochhammer(s[0], k)

        def child(k):
            return self.value(fn, base, j + k + 1)

        def term_bound(k):
            return abs(coef(k)) * _bound(fn, [s[0].real + k + 1] + rest, fn.depth)

        def ratio(K):
            return max(1.0, (abs(s[0]) + K + 1) / (K + 2)) / x0

        tot, err, edges = self._series(0, coef, child, term_bound, ratio)
        edges = [(key, e1 * c / den) for key, c in lhs_edges] + [(key, -c / den) for key, c in edges]
        return (e1 * lhs - tot) / den, (lhs_err + err) / abs(den), edges

    def _hurwitz1_step(self, fn, base, j):
        # (s-1) zeta_1(s) = X^{1-s} + (s-1) X^{-s}
        #                   - sum_{k>=1} (s-1)_k [zeta_1(s+k) - X^{-s-k}],  X = 1 + a
        s = base[0] + j
        x = s - 1
        big = 1 + fn.a(0)
        head = _cpow(big, x) + x * _cpow(big, s)
        x0 = 2 + fn.a(0)

        def child(k):
            w, key = self.wvalue(fn, base, j + k)
            return w - (x + k) * _cpow(big, s + k), key

        def term_bound(k):
            return abs(pochhammer(x, k)) * _bound(fn, [s.real + k], 2)

        def ratio(K):
            return max(1.0, (abs(x) + K + 1) / (K + 2)) / x0

        tot, err, edges = self._series(1, _reduced(x), child, term_bound, ratio)
        return head - tot, err, [(key, -c) for key, c in edges]

    def _lerch1_step(self, fn, base, j):
        # (e - 1) L_1(s) = -e X^{-s} + sum_{k>=0} (s)_k [L_1(s+k+1) - e X^{-s-k-1}]
        s = base[0] + j
        e = _twist(fn.lambdas[0])
        den = e - 1
        self._conditioned(den, "1 - e(lambda_1)")
        big = 1 + fn.a(0)
        x0 = 2 + fn.a(0)

        def coef(k):
            return pochhammer(s, k)

        def child(k):
            v, key = self.value(fn, base, j + k + 1)
            return v - e * _cpow(big, s + k + 1), key

        def term_bound(k):
            return abs(coef(k)) * _bound(fn, [s.real + k + 1], 2)

        def ratio(K):
            return max(1.0, (abs(s) + K + 1) / (K + 2)) / x0

        tot, err, edges = self._series(0, coef, child, term_bound, ratio)
        return (tot - e * _cpow(big, s)) / den, err / abs(den), [(key, c / den) for key, c in edges]

    # --- direct summation ----------------------------------------------------

    def direct(self, fn: _Fn, base: tuple, j: int) -> Tuple[complex, tuple]:
        return self._node(("D", fn, base, j), lambda: self._direct(fn, base, j))

    def _direct(self, fn, base, j):
        s = self.point(base, j)
        r = fn.depth
        n_head = int(min(self.policy.head_terms, self.policy.max_terms))
        # heads[i][n]: sum over n >= n_{i+1} > ... > n_r >= 1 (levels 0-based),
        # with a first-order bound on the floating-point error of each entry
        below = [1.0 + 0j] * (n_head + 1)
        below_err = [0.0] * (n_head + 1)
        heads = [None] * r
        head_errs = [None] * r
        for i in range(r - 1, -1, -1):
            lam, a = fn.lambdas[i], fn.a(i)
            acc = [0j] * (n_head + 1)
            acc_err = [0.0] * (n_head + 1)
            for n in range(1, n_head + 1):
                f = _twist(lam, n) * _cpow(n + a, s[i])
                t = f * below[n - 1]
                acc[n] = acc[n - 1] + t
                rel = (abs(s[i]) * math.log(n + a) + 4) * _ULP
                acc_err[n] = (acc_err[n - 1] + abs(f) * below_err[n - 1]
                              + rel * abs(t) + _ULP * abs(acc[n]))
            heads[i], head_errs[i] = acc, acc_err
            below, below_err = acc, acc_err
        self.stats["terms"] += r * n_head
        total = heads[0][n_head]
        rounding = head_errs[0][n_head]
        edges = []
        mu = 0
        for depth in range(1, r + 1):
            mu = mu + fn.lambdas[depth - 1]
            head = heads[depth][n_head] if depth < r else 1.0
            tail_fn = fn.prefix(depth, fn.offset + n_head)
            v, key = self.value(tail_fn, base[:depth], j)
            c = head * _twist(mu, n_head)
            total += c * v
            edges.append((key, c))
            if depth < r:
                rounding += head_errs[depth][n_head] * abs(v)
        return total, rounding, edges


def _reduced(x: complex) -> Callable[[int], complex]:
    """k -> x (x+1) ... (x+k-1) / (k+1)!, i.e. (x)_k with the factor (x+k) removed."""
    def coef(k):
        out = 1 / (k + 1)
        for u in range(k):
            out = out * (x + u) / (u + 1)
        return out
    return coef


# --- public entry points --------------------------------------------------------


def _as_point(s: PointLike, depth: int) -> EvalPoint:
    if isinstance(s, EvalPoint):
        pt = s
    elif isinstance(s, (int, float, complex)):
        pt = EvalPoint((complex(s),))
    else:
        pt = EvalPoint(tuple(s))
    if pt.depth != depth:
        raise ParameterError(f"point has {pt.depth} coordinates, parameters have depth {depth}")
    return pt


def _fn_of(params: TwistParams) -> _Fn:
    return _Fn(tuple(params.lambdas), tuple(params.alphas), 0)


_Body = Callable[["_Engine", _Fn, tuple], Tuple[complex, tuple]]


def _shift_root(eng: "_Engine", fn: _Fn, base: tuple):
    return eng.value(fn, base, 0)


def _split_root(eng: "_Engine", fn: _Fn, base: tuple):
    # head + continued tails; valid at every point by analytic continuation
    return eng.direct(fn, base, 0)


# cheapest first; larger heads make every offset tail converge faster, at the
# price of more rounding in the head sums when Re(s) is negative
_CONTINUED_LADDER = (
    ("shift", _shift_root, 1), ("split", _split_root, 1),
    ("shift", _shift_root, 4), ("split", _split_root, 4),
    ("shift", _shift_root, 16), ("split", _split_root, 16),
)
_DIRECT_LADDER = (("split", _split_root, 1), ("split", _split_root, 4), ("split", _split_root, 16))


def _run(params: TwistParams, pt: EvalPoint, policy: TruncationPolicy,
         strategies: Sequence[Tuple[str, _Body]]) -> EvalResult:
    """Try each strategy with shrinking internal tolerance until eps is certified."""
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 20000))
    try:
        best: Optional[EvalResult] = None
        for name, body, head_scale in strategies:
            run_policy = replace(policy, head_terms=policy.head_terms * head_scale)
            tol = policy.eps * 1e-2
            prev = math.inf
            for _ in range(5):
                engine = _Engine(run_policy, tol)
                value, root = body(engine, _fn_of(params), pt.values)
                err = engine.error_bound(root)
                diag = dict(engine.stats)
                diag["strategy"] = name
                diag["head_terms"] = run_policy.head_terms
                diag["tolerance"] = tol
                result = EvalResult(value, err, region_index(pt), diag)
                if best is None or err < best.error_bound:
                    best = result
                if err <= policy.eps:
                    return result
                if not math.isfinite(err) or (best is not result and err > 0.5 * prev):
                    break
                prev = err
                tol = tol * max(policy.eps / err, 1e-4) * 0.1
        raise AccuracyError(
            f"achieved error bound {best.error_bound:.3g} exceeds eps = {policy.eps:.3g} "
            f"(best value {best.value:.12g})",
            best.error_bound,
            best.value,
        )
    finally:
        sys.setrecursionlimit(old_limit)


def eval_direct(params: TwistParams, s: PointLike, policy: Optional[TruncationPolicy] = None) -> EvalResult:
    """Direct summation inside U_r (with the policy's margin)."""
    policy = policy or TruncationPolicy()
    pt = _as_point(s, params.depth)
    probe = _Engine(policy, policy.eps)
    if not probe.in_direct_region(pt.values):
        raise RegionError(
            f"point {pt.values} is not in U_{params.depth} with margin "
            f"{policy.direct_cutoff_margin}; use eval_continued"
        )
    return _run(params, pt, policy, _DIRECT_LADDER)


def eval_continued(params: TwistParams, s: PointLike, policy: Optional[TruncationPolicy] = None) -> EvalResult:
    """L_r(lambda; alpha; s) anywhere off the polar hyperplanes."""
    from .classifier import check_pole_proximity

    policy = policy or TruncationPolicy()
    pt = _as_point(s, params.depth)
    check_pole_proximity(params, pt, policy.pole_tolerance)
    return _run(params, pt, policy, _CONTINUED_LADDER)


def eval_depth1(params: TwistParams, s: Union[complex, EvalPoint], policy: Optional[TruncationPolicy] = None) -> EvalResult:
    """Depth-1 Lerch / Hurwitz function at any s (s != 1 when lambda = 0)."""
    if params.depth != 1:
        raise ParameterError("eval_depth1 needs depth-1 parameters")
    return eval_continued(params, s, policy)


def euler_maclaurin_hurwitz(s: complex, a: float, eps: float = 1e-15) -> complex:
    """sum_{n>=0} (n + a)^{-s} continued by Euler-Maclaurin summation."""
    if a <= 0:
        raise ParameterError("a must be positive")
    s = complex(s)
    if abs(s - 1) == 0:
        raise PoleProximityError("s = 1 is the pole of the Hurwitz zeta function")

    def pw(base: float, e: complex) -> complex:
        return complex(base ** -e.real) if e.imag == 0 else _cpow(base, e)

    n_head = int(abs(s)) + 20
    terms = [pw(n + a, s) for n in range(n_head)]
    big = n_head + a
    terms += [pw(big, s - 1) / (s - 1), 0.5 * pw(big, s)]
    nums = bernoulli_numbers(80)
    rising = s  # s (s+1) ... (s+2j-2)
    for jj in range(1, 40):
        term = float(nums[2 * jj]) / math.factorial(2 * jj) * rising * pw(big, s + 2 * jj - 1)
        terms.append(term)
        if abs(term) <= eps * max(1.0, abs(sum(terms))) or rising == 0:
            break
        rising *= (s + 2 * jj - 1) * (s + 2 * jj)
    # exactly rounded sums: the head cancels heavily when Re(s) < 0
    return complex(math.fsum(z.real for z in terms), math.fsum(z.imag for z in terms))


def ramanujan_sum(s: complex, K: int = 60) -> complex:
    """sum_{k=0}^{K} (s-1)_k (zeta(s+k) - 1), which equals 1 for Re s > 1."""
    return sum(pochhammer(s - 1, k) * euler_maclaurin_hurwitz(s + k, 2.0) for k in range(K + 1))


def identity_residual(params: TwistParams, s: PointLike, max_k: int = 200,
                      policy: Optional[TruncationPolicy] = None) -> float:
    """|LHS - RHS| of the applicable shift identity, every term summed directly."""
    policy = policy or TruncationPolicy()
    pt = _as_point(s, params.depth)
    s = pt.values
    fn = _fn_of(params)
    r = params.depth
    eng = _Engine(policy, policy.eps * 1e-3)
    lam1 = params.lambdas[0]

    def direct(f, point):
        if not eng.in_direct_region(point):
            raise RegionError(f"identity term at {point} is not directly summable")
        return eng.direct(f, point, 0)[0]

    def summed(k0, term):
        total = 0j
        quiet = 0
        for k in range(k0, max_k + 1):
            t = term(k)
            total += t
            quiet = quiet + 1 if abs(t) < 1e-18 * max(1.0, abs(total)) else 0
            if quiet >= 3:
                break
        return total

    if r == 1:
        a = float(params.alphas[0])
        if lam1 == 0:
            lhs = summed(0, lambda k: pochhammer(s[0] - 1, k)
                         * (direct(fn, (s[0] + k,)) - _cpow(1 + a, s[0] + k)))
            rhs = _cpow(1 + a, s[0] - 1)
        else:
            e = _twist(lam1)
            lhs = (e - 1) * direct(fn, s) + e * _cpow(1 + a, s[0])
            rhs = summed(0, lambda k: pochhammer(s[0], k)
                         * (direct(fn, (s[0] + k + 1,)) - e * _cpow(1 + a, s[0] + k + 1)))
        return abs(lhs - rhs)

    sub = fn.sub()
    d = fn.alphas[1] - fn.alphas[0]

    def dpow(k):
        return d ** (k + 1) if k + 1 else 1

    if lam1 == 0:
        x = s[0] - 1
        lhs = summed(-1, lambda k: pochhammer(x, k) * dpow(k)
                     * direct(sub, (s[0] + s[1] + k,) + s[2:]) if (d != 0 or k == -1) else 0)
        rhs = summed(0, lambda k: pochhammer(x, k) * direct(fn, (s[0] + k,) + s[1:]))
    else:
        e1 = _twist(lam1)
        lhs = e1 * summed(-1, lambda k: pochhammer(s[0], k) * dpow(k)
                          * direct(sub, (s[0] + s[1] + k + 1,) + s[2:]) if (d != 0 or k == -1) else 0)
        rhs = (1 - e1) * direct(fn, s) + summed(
            0, lambda k: pochhammer(s[0], k) * direct(fn, (s[0] + k + 1,) + s[1:]))
    return abs(lhs - rhs)
