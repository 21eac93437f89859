"""Command-line front end: ``mlerch eval|residue|singularities|bernoulli|verify|bench``."""

from __future__ import annotations

import argparse
import json
import math
import random
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, fields, replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import bernoulli as bern
from .classifier import classify
from .core import (
    AccuracyError,
    ConditioningError,
    EvalPoint,
    Hyperplane,
    MlerchError,
    OffHyperplaneError,
    ParameterError,
    PoleProximityError,
    TwistParams,
    UnsupportedError,
    pochhammer,
)
from .evaluator import (
    TruncationPolicy,
    euler_maclaurin_hurwitz,
    eval_continued,
    eval_depth1,
    eval_direct,
    identity_residual,
    ramanujan_sum,
)
from .matrixkit import first_row_chain, residue_hurwitz, two_prod_oracle, verify_inverse_pair

EXIT_OK, EXIT_USAGE, EXIT_POLE, EXIT_ACCURACY, EXIT_OFF_HYPERPLANE, EXIT_UNSUPPORTED = range(6)


class UsageError(Exception):
    pass


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, PoleProximityError):
        return EXIT_POLE
    if isinstance(exc, (AccuracyError, ConditioningError)):
        return EXIT_ACCURACY
    if isinstance(exc, OffHyperplaneError):
        return EXIT_OFF_HYPERPLANE
    if isinstance(exc, UnsupportedError):
        return EXIT_UNSUPPORTED
    return EXIT_USAGE


# --- parsing -----------------------------------------------------------------

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX = re.compile(rf"^(?P<re>[+-]?{_NUM})?(?:(?P<sign>[+-])(?P<im>{_NUM})?i|(?P<only>[+-]?{_NUM})?i)?$")
_FRACTION = re.compile(r"^[+-]?\d+/\d+$")


def parse_real(text: str):
    """A real number; ``p/q`` stays an exact Fraction, integers become Fractions too."""
    text = text.strip()
    try:
        if _FRACTION.match(text):
            return Fraction(text)
        if re.fullmatch(r"[+-]?\d+", text):
            return Fraction(int(text))
        return float(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a real number: {text!r}") from None


def parse_complex(text: str):
    """``a``, ``a+bi``, ``a-bi``, ``bi``; exact rationals allowed for real values."""
    text = text.strip()
    if _FRACTION.match(text) or re.fullmatch(r"[+-]?\d+", text):
        return parse_real(text)
    m = _COMPLEX.match(text)
    if not text or not m:
        raise UsageError(f"not a complex number: {text!r}")
    if m.group("sign"):
        im = float(m.group("im") or 1.0)
        return complex(float(m.group("re") or 0.0), -im if m.group("sign") == "-" else im)
    if text.endswith("i"):
        # a bare imaginary part: the real group may have swallowed its digits
        only = text[:-1]
        im = 1.0 if only in ("", "+") else -1.0 if only == "-" else float(only)
        return complex(0.0, im)
    return float(text)


def _split(text: str) -> List[str]:
    return [p for p in text.split(",") if p.strip()]


def parse_real_list(text: str) -> List:
    return [parse_real(p) for p in _split(text)]


def parse_complex_list(text: str) -> List:
    return [parse_complex(p) for p in _split(text)]


# --- configuration -------------------------------------------------------------


@dataclass(frozen=True)
class CliConfig:
    eps: float = 1e-10
    max_k: int = 200
    max_terms: int = 10_000_000
    pole_tolerance: float = 1e-8
    threads: int = 1
    output: str = "json"

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if f.name != "output" and not v > 0:
                raise UsageError(f"config value {f.name} must be positive, got {v}")
        if self.output not in ("json", "csv", "text"):
            raise UsageError(f"output must be json, csv or text, got {self.output!r}")

    def policy(self) -> TruncationPolicy:
        return TruncationPolicy(eps=self.eps, max_k=self.max_k, max_terms=self.max_terms,
                                pole_tolerance=self.pole_tolerance)


_CONFIG_TYPES = {f.name: f.type for f in fields(CliConfig)}


def _coerce(key: str, raw: str):
    default = getattr(CliConfig(), key)
    try:
        if isinstance(default, int):
            return int(float(raw)) if re.fullmatch(r"\d+(\.0*)?|\d+[eE]\+?\d+", raw) else int(raw)
        if isinstance(default, float):
            return float(raw)
    except ValueError:
        raise UsageError(f"bad value for {key}: {raw!r}") from None
    return raw


def load_config_file(path: str) -> Dict[str, object]:
    out: Dict[str, object] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    for n, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key=value")
        key, raw = (p.strip() for p in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _CONFIG_TYPES:
            raise UsageError(f"{path}:{n}: unknown config key {key!r}")
        out[key] = _coerce(key, raw)
    return out


def build_config(args: argparse.Namespace) -> CliConfig:
    values: Dict[str, object] = {}
    if getattr(args, "config", None):
        values.update(load_config_file(args.config))
    for name in _CONFIG_TYPES:
        v = getattr(args, name, None)
        if v is not None:
            values[name] = v
    return CliConfig(**values)


# --- output ----------------------------------------------------------------------


def _json_value(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _emit(doc: dict, output: str, stream=None) -> None:
    stream = stream or sys.stdout
    if output == "json":
        print(json.dumps(doc, default=str), file=stream)
        return
    flat = {}
    for k, v in doc.items():
        if k == "value" and isinstance(v, dict):
            flat["re"], flat["im"] = v["re"], v["im"]
        elif isinstance(v, (dict, list)):
            flat[k] = json.dumps(v, default=str)
        else:
            flat[k] = v
    if output == "csv":
        print(",".join(flat), file=stream)
        print(",".join(str(v) for v in flat.values()), file=stream)
    else:
        for k, v in flat.items():
            print(f"{k}: {v}", file=stream)


def _error_doc(exc: BaseException, base: dict) -> dict:
    doc = dict(base)
    doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
    hyper = getattr(exc, "hyperplane", None)
    if hyper is not None:
        doc["error"]["hyperplane"] = {"i": hyper.i, "k": hyper.k}
    bound = getattr(exc, "achieved_bound", None)
    if bound is not None and math.isfinite(bound):
        doc["error"]["achieved_bound"] = bound
    return doc


def _params_from(args) -> TwistParams:
    lambdas = parse_real_list(args.lambdas) if args.lambdas is not None else None
    alphas = parse_real_list(args.alphas)
    if lambdas is None:
        lambdas = [Fraction(0)] * len(alphas)
    depth = args.depth if args.depth is not None else len(alphas)
    if len(alphas) != depth or len(lambdas) != depth:
        raise UsageError(f"--depth {depth} needs {depth} lambdas and alphas")
    try:
        return TwistParams(tuple(lambdas), tuple(alphas))
    except ParameterError as exc:
        raise UsageError(str(exc)) from None


def _warnings(diag: dict, params: TwistParams) -> List[str]:
    out = []
    if diag.get("truncated_at_cap"):
        out.append(f"{diag['truncated_at_cap']} k-series reached max_k")
    if diag.get("strategy") == "split":
        out.append(f"certified by head/tail splitting with {diag.get('head_terms')} head terms")
    if any(isinstance(x, float) for x in params.lambdas) and not params.is_hurwitz:
        out.append("float twists: integer tests on partial twist sums use a tolerance")
    return out


# --- commands ------------------------------------------------------------------------


def cmd_eval(args, config: CliConfig) -> int:
    params = _params_from(args)
    s = parse_complex_list(args.s)
    base = {"input": {"depth": params.depth, "lambda": args.lambdas, "alpha": args.alphas, "s": args.s},
            "config": asdict(config)}
    if len(s) != params.depth:
        raise UsageError(f"--s needs {params.depth} coordinates")
    try:
        point = EvalPoint(tuple(complex(v) for v in s))
        fn = eval_direct if args.direct else eval_continued
        res = fn(params, point, config.policy())
    except MlerchError as exc:
        _emit(_error_doc(exc, base), config.output)
        return exit_code_for(exc)
    doc = {"value": _json_value(res.value), "error_bound": res.error_bound,
           "region_index": res.region_index, "warnings": _warnings(res.diagnostics, params)}
    doc.update(base)
    if args.diagnostics:
        doc["diagnostics"] = res.diagnostics
    _emit(doc, config.output)
    return EXIT_OK


def cmd_residue(args, config: CliConfig) -> int:
    params = _params_from(args)
    try:
        i, k = (int(p) for p in _split(args.hyperplane))
        h = Hyperplane(i, k)
    except (ValueError, ParameterError):
        raise UsageError("--hyperplane expects i,k with i >= 1, k >= 0") from None
    point = parse_complex_list(args.point)
    base = {"input": {"depth": params.depth, "lambda": args.lambdas, "alpha": args.alphas,
                      "point": args.point}, "config": asdict(config),
            "hyperplane": {"i": h.i, "k": h.k}}
    try:
        res = residue_hurwitz(params, h, point, config.policy())
    except MlerchError as exc:
        _emit(_error_doc(exc, base), config.output)
        return exit_code_for(exc)
    doc = {"value": _json_value(res.value), "error_bound": res.error_bound,
           "region_index": res.region_index, "warnings": []}
    if "exact_chain" in res.diagnostics:
        doc["exact_chain"] = res.diagnostics["exact_chain"]
    doc.update(base)
    _emit(doc, config.output)
    return EXIT_OK


def cmd_singularities(args, config: CliConfig) -> int:
    params = _params_from(args)
    report = classify(params)
    doc = report.to_dict(args.display_bound)
    _emit(doc, config.output)
    return EXIT_OK


def cmd_bernoulli(args, config: CliConfig) -> int:
    poly = bern.bernoulli_poly(args.n)
    doc = {"n": args.n, "coefficients": [str(c) for c in poly.coeffs]}
    if args.at is not None:
        doc["value"] = str(bern.bernoulli_eval(args.n, parse_real(args.at)))
    if args.roots:
        doc["rational_roots"] = [str(r) for r in bern.rational_roots(poly.coeffs)]
    if args.zero_set is not None:
        d = parse_real(args.zero_set)
        zs = bern.zero_index_set(d) if bern.as_exact(d) is not None else bern.zero_index_set_numeric(d, 60)
        doc["zero_index_set"] = {"description": zs.describe(), "exact": zs.exact, "members": zs.enumerate(20)}
    _emit(doc, config.output)
    return EXIT_OK


# --- verification suites -------------------------------------------------------------

Case = Tuple[str, int]  # (suite, case seed)


def _inkeri(n: int) -> set:
    if n == 1:
        return {Fraction(1, 2)}
    if n % 2 == 1:
        return {Fraction(0), Fraction(1, 2), Fraction(1)}
    return set()


def _rand_lambda(rng: random.Random):
    return rng.choice([Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), round(rng.uniform(0.05, 0.95), 6)])


def _check_identity(seed: int, max_depth: int, eps: float) -> Tuple[bool, str]:
    rng = random.Random(seed)
    r = rng.randint(2, max(2, max_depth))
    lam = [_rand_lambda(rng) for _ in range(r)]
    if rng.random() < 0.5:
        lam[0] = Fraction(0)
    alphas = [round(rng.uniform(0, 0.8), 6) for _ in range(r)]
    s = [complex(rng.uniform(2.5, 4.0), rng.uniform(-2, 2))]
    s += [complex(rng.uniform(1.0, 2.5), rng.uniform(-2, 2)) for _ in range(r - 1)]
    res = identity_residual(TwistParams(tuple(lam), tuple(alphas)), s)
    desc = f"r={r} lambda={[str(x) for x in lam]} alpha={alphas} s={s} residual={res:.3g}"
    return res <= eps, desc


def _check_overlap(seed: int, max_depth: int, eps: float) -> Tuple[bool, str]:
    rng = random.Random(seed)
    r = rng.randint(1, max_depth)
    lam = [_rand_lambda(rng) if rng.random() < 0.5 else Fraction(0) for _ in range(r)]
    alphas = [round(rng.uniform(0, 0.9), 6) for _ in range(r)]
    # every partial sum lands just inside U_r, where continuation still applies the identities
    sums = [i + rng.uniform(0.1, 0.45) for i in range(1, r + 1)]
    s = [complex(sums[0] - 0, rng.uniform(-1, 1))]
    s += [complex(sums[i] - sums[i - 1], rng.uniform(-1, 1)) for i in range(1, r)]
    params = TwistParams(tuple(lam), tuple(alphas))
    policy = TruncationPolicy(eps=eps)
    a = eval_direct(params, s, replace(policy, direct_cutoff_margin=0.05))
    b = eval_continued(params, s, policy)
    diff = abs(a.value - b.value)
    ok = diff <= a.error_bound + b.error_bound + 1e-13
    return ok, f"r={r} lambda={[str(x) for x in lam]} alpha={alphas} s={s} diff={diff:.3g}"


def _rand_rational(rng: random.Random, lo: int = -9, hi: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 9))


def _check_matrix(seed: int, max_depth: int, eps: float) -> Tuple[bool, str]:
    rng = random.Random(seed)
    while True:
        x, y = _rand_rational(rng), _rand_rational(rng)
        if x.denominator != 1 and y.denominator != 1:
            break
    a, b, g = (_rand_rational(rng, 0, 8) % 1 for _ in range(3))
    k = rng.randint(0, 10)
    d, t, q = _rand_rational(rng) % 1, x, rng.randint(1, 10)
    inv = verify_inverse_pair(d, t, q)
    lhs = two_prod_oracle(x, y, a, b, g, k)
    rhs = first_row_chain((a, b, g), 3, (x, y), k)
    stable = rhs == first_row_chain((a, b, g), 3, (x, y), k, q=k + 5)
    ok = inv == 0 and lhs == rhs and stable
    return ok, f"x={x} y={y} alphas={(a, b, g)} k={k} inverse-residual={inv} two-prod={'ok' if lhs == rhs else 'MISMATCH'}"


def check_bernoulli_degree(n: int) -> Tuple[bool, str]:
    """Exact identities for B_n: derivative, difference, symmetry, coprimality, rational roots."""
    polys = bern.bernoulli_polys(n + 1)
    p, prev, nxt = polys[n].coeffs, polys[n - 1].coeffs if n else (), polys[n + 1].coeffs
    problems = []
    if n and tuple(bern.poly_derivative(p)) != tuple(n * c for c in prev):
        problems.append("derivative")
    shifted = bern.poly_affine(p, Fraction(1), Fraction(1))
    diff = bern._trim([a - b for a, b in zip(shifted, p)])
    expect = bern._trim([Fraction(0)] * (n - 1) + [Fraction(n)]) if n else []
    if diff != expect:
        problems.append("difference")
    mirrored = bern.poly_affine(p, Fraction(-1), Fraction(1))
    if tuple(mirrored) != tuple((-1) ** n * c for c in p):
        problems.append("symmetry")
    if bern.poly_gcd(p, nxt) != (Fraction(1),):
        problems.append("gcd")
    if 1 <= n <= 30 and set(bern.rational_roots(p)) != _inkeri(n):
        problems.append("rational roots")
    return not problems, f"n={n} " + ("ok" if not problems else "failed: " + ", ".join(problems))


def _check_bernoulli(seed: int, max_depth: int, eps: float) -> Tuple[bool, str]:
    return check_bernoulli_degree(random.Random(seed).randint(0, 40))


RAMANUJAN_POINTS = (2, 3.5, 2 + 1.7j)


def check_ramanujan(s: complex) -> Tuple[bool, str]:
    oracle = abs(ramanujan_sum(s, 60) - 1)
    pkg = abs(sum(pochhammer(s - 1, k) * (eval_depth1(TwistParams.hurwitz((0,)), s + k,
                                                  TruncationPolicy(eps=1e-13)).value - 1)
                  for k in range(61)) - 1)
    return max(oracle, pkg) <= 1e-10, f"s={s} oracle-residual={oracle:.3g} evaluator-residual={pkg:.3g}"


SUITES: Dict[str, Callable[[int, int, float], Tuple[bool, str]]] = {
    "identity": _check_identity,
    "overlap": _check_overlap,
    "matrix": _check_matrix,
    "bernoulli": _check_bernoulli,
}


def _run_case(case: Tuple[str, int, int, float]) -> Tuple[str, int, bool, str]:
    suite, seed, max_depth, eps = case
    try:
        if suite == "ramanujan":
            ok, desc = check_ramanujan(RAMANUJAN_POINTS[seed])
        else:
            ok, desc = SUITES[suite](seed, max_depth, eps)
    except MlerchError as exc:
        ok, desc = False, f"{type(exc).__name__}: {exc}"
    return suite, seed, ok, desc


def verify_cases(suite: str, seed: int, cases: int, max_depth: int, eps: float) -> List[Tuple[str, int, int, float]]:
    if suite == "ramanujan":
        return [("ramanujan", i, max_depth, eps) for i in range(len(RAMANUJAN_POINTS))]
    names = list(SUITES) if suite == "all" else [suite]
    master = random.Random(seed)
    return [(names[i % len(names)], master.randrange(2 ** 32), max_depth, eps) for i in range(cases)]


def cmd_verify(args, config: CliConfig) -> int:
    if not 1 <= args.max_depth <= 4:
        raise UsageError("--max-depth must be between 1 and 4")
    eps = args.eps if args.eps is not None else 1e-8
    cases = verify_cases(args.suite, args.seed, args.cases, args.max_depth, eps)
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        results = list(pool.map(_run_case, cases))
    per_suite: Dict[str, List[int]] = {}
    failures = []
    for suite, seed, ok, desc in results:
        tally = per_suite.setdefault(suite, [0, 0])
        tally[0] += ok
        tally[1] += 1
        if not ok:
            failures.append((suite, seed, desc))
    passed = sum(t[0] for t in per_suite.values())
    if config.output == "json":
        print(json.dumps({"passed": passed, "total": len(results),
                          "suites": {k: {"passed": v[0], "total": v[1]} for k, v in per_suite.items()},
                          "failures": [{"suite": s, "seed": sd, "detail": d} for s, sd, d in failures]}))
    else:
        for name, (ok, total) in per_suite.items():
            print(f"{name}: {ok}/{total} passed")
        for suite, seed, desc in failures:
            print(f"FAIL {suite} seed={seed}: {desc}")
    print(f"{passed}/{len(results)} passed", file=sys.stderr if config.output == "json" else sys.stdout)
    return EXIT_OK if passed == len(results) else EXIT_ACCURACY


# --- benchmark -------------------------------------------------------------------------


def bench_points(depth: int) -> List[Tuple[complex, ...]]:
    inside = tuple([complex(2.5)] + [complex(1.2)] * (depth - 1))
    near = tuple([complex(1.3, 0.5)] + [complex(0.4, -0.2)] * (depth - 1))
    far = tuple([complex(-1.5, 1.0)] + [complex(0.3, 0.5)] * (depth - 1))
    return [inside, near, far]


def _time(fn: Callable[[], object]) -> Tuple[Optional[float], str]:
    t0 = time.perf_counter()
    try:
        fn()
    except MlerchError as exc:
        return None, type(exc).__name__
    return (time.perf_counter() - t0) * 1e3, ""


def cmd_bench(args, config: CliConfig) -> int:
    policy = config.policy()
    params = TwistParams.hurwitz((0,) * args.depth)
    rows = []
    for pt in bench_points(args.depth):
        direct_ms, dnote = _time(lambda: eval_direct(params, pt, policy))
        cont_ms, cnote = _time(lambda: eval_continued(params, pt, policy))
        em_ms, enote = (None, "depth>1") if args.depth != 1 else _time(
            lambda: euler_maclaurin_hurwitz(pt[0], 2.0, policy.eps))
        rows.append({"point": [str(z) for z in pt], "eval_direct_ms": direct_ms, "eval_continued_ms": cont_ms,
                     "euler_maclaurin_ms": em_ms, "notes": [f"{m}: {n}" for m, n in (("direct", dnote), ("continued", cnote), ("euler-mac", enote)) if n]})
    if config.output == "json":
        print(json.dumps({"depth": args.depth, "eps": policy.eps, "rows": rows}))
        return EXIT_OK

    def fmt(v):
        return "-" if v is None else f"{v:.1f}"

    print(f"depth={args.depth} eps={policy.eps:g}  (milliseconds)")
    print(f"{'point':<48} {'direct':>9} {'continued':>10} {'euler-mac':>10}  notes")
    for row in rows:
        print(f"{','.join(row['point']):<48} {fmt(row['eval_direct_ms']):>9} "
              f"{fmt(row['eval_continued_ms']):>10} {fmt(row['euler_maclaurin_ms']):>10}  {'; '.join(row['notes'])}")
    return EXIT_OK


# --- entry point -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file; flags override it")
    common.add_argument("--eps", type=float)
    common.add_argument("--max-k", dest="max_k", type=int)
    common.add_argument("--max-terms", dest="max_terms", type=int)
    common.add_argument("--pole-tolerance", dest="pole_tolerance", type=float)
    common.add_argument("--threads", type=int)
    common.add_argument("--output", choices=("json", "csv", "text"))

    fn_args = argparse.ArgumentParser(add_help=False)
    fn_args.add_argument("--depth", type=int)
    fn_args.add_argument("--lambda", dest="lambdas", help="comma-separated twists in [0,1); p/q is exact")
    fn_args.add_argument("--alpha", dest="alphas", required=True, help="comma-separated shifts in [0,1)")

    parser = _Parser(prog="mlerch", description="Multiple Lerch and Hurwitz zeta functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common, fn_args], help="evaluate L_r(lambda; alpha; s)")
    p.add_argument("--s", required=True, help="comma-separated complex coordinates, e.g. 2,1 or 0.5+14i")
    p.add_argument("--direct", action="store_true", help="direct summation only (needs a point in U_r)")
    p.add_argument("--diagnostics", action="store_true")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("residue", parents=[common, fn_args], help="residue along a polar hyperplane")
    p.add_argument("--hyperplane", required=True, help="i,k for s_1+...+s_i = i-k")
    p.add_argument("--point", required=True, help="comma-separated point on the hyperplane")
    p.set_defaults(handler=cmd_residue)

    p = sub.add_parser("singularities", parents=[common, fn_args], help="classify the polar hyperplanes")
    p.add_argument("--display-bound", dest="display_bound", type=int, default=20)
    p.set_defaults(handler=cmd_singularities)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli polynomial facts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--at", help="evaluate B_n at this real (p/q is exact)")
    p.add_argument("--roots", action="store_true", help="list rational roots")
    p.add_argument("--zero-set", dest="zero_set", help="zero index set K for this d")
    p.set_defaults(handler=cmd_bernoulli)

    p = sub.add_parser("verify", parents=[common], help="run the self-verification suites")
    p.add_argument("--suite", default="all", choices=("all", "ramanujan", *SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=40)
    p.add_argument("--max-depth", dest="max_depth", type=int, default=3)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time the evaluators on a standard grid")
    p.add_argument("--depth", type=int, default=3)
    p.set_defaults(handler=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in ("bench", "verify") and args.output is None:
            args.output = "text"
        config = build_config(args)
        return args.handler(args, config)
    except UsageError as exc:
        print(f"mlerch: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
