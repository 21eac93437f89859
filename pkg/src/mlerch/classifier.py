"""Singular hyperplanes of multiple Lerch and multiple Hurwitz zeta functions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .bernoulli import ZeroIndexSet, as_exact, zero_index_set, zero_index_set_numeric
from .core import EvalPoint, Hyperplane, PoleProximityError, TwistParams, hyperplane_offset

DISPLAY_BOUND = 20
NUMERIC_NMAX = 60


@dataclass(frozen=True)
class KSet:
    """A set of k >= k0, optionally restricted to or excluding a zero index set."""

    k0: int = 0
    mode: str = "all"  # "all" | "except" | "only"
    zeros: Optional[ZeroIndexSet] = None
    k1: Optional[int] = None  # inclusive upper bound, None for unbounded

    def __post_init__(self):
        if self.mode not in ("all", "except", "only"):
            raise ValueError(f"unknown k-set mode {self.mode!r}")
        if self.mode != "all" and self.zeros is None:
            raise ValueError("except/only k-sets need a zero index set")

    def __contains__(self, k: int) -> bool:
        if k < self.k0 or (self.k1 is not None and k > self.k1):
            return False
        if self.mode == "all":
            return True
        inside = k in self.zeros
        return inside if self.mode == "only" else not inside

    def enumerate(self, bound: int = DISPLAY_BOUND) -> List[int]:
        return [k for k in range(self.k0, bound + 1) if k in self]

    @property
    def empty(self) -> bool:
        if self.mode != "only":
            return False
        z = self.zeros
        return z.kind == "empty" or (z.kind == "numeric" and not any(k >= self.k0 for k in z.indeterminate))

    def describe(self) -> str:
        if self.k1 == self.k0:
            return f"k = {self.k0}"
        base = f"k >= {self.k0}" if self.k1 is None else f"{self.k0} <= k <= {self.k1}"
        if self.mode == "all":
            return base
        word = "in" if self.mode == "only" else "not in"
        return f"{base}, k {word} {self.zeros.describe()}"


@dataclass(frozen=True)
class Family:
    i: int
    kset: KSet
    certainty: str  # "proven-pole" | "possible" | "removable"
    indeterminate: bool = False

    def __contains__(self, h: Hyperplane) -> bool:
        return h.i == self.i and h.k in self.kset

    def to_dict(self, bound: int = DISPLAY_BOUND) -> dict:
        out = {
            "i": self.i,
            "k_set": self.kset.describe(),
            "k_values": self.kset.enumerate(bound),
            "certainty": self.certainty,
        }
        if self.indeterminate:
            out["indeterminate"] = True
        return out


@dataclass(frozen=True)
class SingularityReport:
    status: str  # "entire" | "possible-poles" | "exact-poles"
    families: Tuple[Family, ...] = ()
    integer_indices: Tuple[int, ...] = ()

    def certainty(self, h: Hyperplane) -> Optional[str]:
        """Certainty of the family containing ``h``, or None if ``h`` is not listed."""
        for fam in self.families:
            if h in fam:
                return fam.certainty
        return None

    def singular_families(self) -> List[Family]:
        return [f for f in self.families if f.certainty != "removable"]

    def to_dict(self, bound: int = DISPLAY_BOUND) -> dict:
        return {
            "status": self.status,
            "families": [f.to_dict(bound) for f in self.families],
            "integer_indices": list(self.integer_indices),
        }


def _is_integer(x, eps: float) -> bool:
    if isinstance(x, Fraction):
        return x.denominator == 1
    return abs(x - round(x)) <= eps


def classify_lerch(params: TwistParams, integer_test_eps: float = 1e-12) -> SingularityReport:
    """Hyperplanes that may carry poles, from the integer partial twist sums."""
    idx = tuple(i for i, mu in enumerate(params.mus, start=1) if _is_integer(mu, integer_test_eps))
    if not idx:
        return SingularityReport("entire", (), ())
    hurwitz = params.is_hurwitz
    fams: List[Family] = []
    first = 1
    if idx[0] == 1:
        fams.append(Family(1, _ONLY_ZERO, "proven-pole" if hurwitz else "possible"))
        first = 2
    for j in range(first, len(idx) + 1):
        i_j = idx[j - 1]
        fams.append(Family(i_j, KSet(max(0, i_j - j)), "possible"))
    return SingularityReport("possible-poles", tuple(fams), idx)


_ONLY_ZERO = KSet(0, k1=0)


def classify_hurwitz(alphas: Sequence, nmax: int = NUMERIC_NMAX) -> SingularityReport:
    """Exact polar set of the multiple Hurwitz zeta function."""
    params = TwistParams.hurwitz(alphas)
    r = params.depth
    fams: List[Family] = [Family(1, _ONLY_ZERO, "proven-pole")]
    if r >= 2:
        d = params.alphas[1] - params.alphas[0]
        exact = as_exact(d)
        zeros = zero_index_set(exact) if exact is not None else zero_index_set_numeric(d, nmax)
        numeric = not zeros.exact
        if zeros.kind == "empty":
            fams.append(Family(2, KSet(0), "proven-pole"))
        else:
            fams.append(Family(2, KSet(0, "except", zeros), "proven-pole", numeric))
            fams.append(Family(2, KSet(0, "only", zeros), "removable", numeric))
        for i in range(3, r + 1):
            fams.append(Family(i, KSet(0), "proven-pole"))
    return SingularityReport("exact-poles", tuple(fams), tuple(range(1, r + 1)))


def classify(params: TwistParams, integer_test_eps: float = 1e-12) -> SingularityReport:
    return classify_hurwitz(params.alphas) if params.is_hurwitz else classify_lerch(params, integer_test_eps)


def check_pole_proximity(params: TwistParams, s: EvalPoint, tol: float) -> None:
    """Raise PoleProximityError if ``s`` is within ``tol`` of a polar or possibly polar hyperplane."""
    report = classify(params)
    sums = s.partial_sums()
    for fam in report.singular_families():
        p = sums[fam.i - 1]
        k_real = fam.i - p.real
        k = round(k_real)
        if k < 0 or abs(p.imag) > tol or abs(k_real - k) > tol:
            continue
        if k in fam.kset:
            h = Hyperplane(fam.i, k)
            off = abs(hyperplane_offset(s, h))
            raise PoleProximityError(f"point is {off:.3g} from {h} ({fam.certainty})", h)
