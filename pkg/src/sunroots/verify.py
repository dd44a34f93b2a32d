"""Named verification suites; each returns a JSON-ready :class:`Report`."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from sunroots import closed_forms, sequences
from sunroots.arith_functions import REGISTERED, ArithFnSpec, gbar, gell, psi, sigma
from sunroots.darcais import generate
from sunroots.delta_zeros import (
    DEFAULT_WIDTH,
    IsolatingInterval,
    RayPositivityCertificate,
    build_delta,
    closed_delta1,
    closed_delta2,
    delta2_lemma_agreement,
    delta_sign_at,
    largest_real_zero,
    verify_positive_beyond,
)

THREADS_ENV = "SUNROOTS_THREADS"


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def rational_json(x: Optional[Fraction]):
    if x is None:
        return None
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def interval_json(r: IsolatingInterval) -> dict:
    return {
        "lo": rational_json(r.lo),
        "hi": rational_json(r.hi),
        "exact": rational_json(r.exact),
    }


def certificate_json(cert: RayPositivityCertificate) -> dict:
    out = {"method": cert.method.value, "threshold": rational_json(cert.threshold), "valid": cert.valid}
    if cert.method.value == "shifted-nonnegative-coefficients":
        out["coefficients"] = len(cert.witness)
        out["zero_coefficients"] = sum(1 for c in cert.witness if c == 0)
    else:
        out["boxes"] = len(cert.witness)
    if cert.refutation is not None:
        out["refutation"] = interval_json(cert.refutation)
    return out


@dataclass
class Instance:
    n: int
    claim: str
    result: bool
    certificate: dict = field(default_factory=dict)


@dataclass
class Report:
    id: str
    instances: List[Instance] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.instances) and all(i.result for i in self.instances)

    def add(self, n: int, claim: str, result: bool, **certificate) -> None:
        self.instances.append(Instance(n, claim, bool(result), certificate))

    def to_json(self) -> dict:
        return {"id": self.id, "instances": [asdict(i) for i in self.instances], "pass": self.passed}


def parallel_map(fn: Callable, items: Sequence, threads: int = 1) -> list:
    """Order-preserving map; uses worker processes when ``threads > 1``."""
    if threads <= 1 or len(items) <= 1:
        return [fn(i) for i in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _zero_task(args) -> Tuple[int, IsolatingInterval]:
    spec, n, width = args
    seq = generate(ArithFnSpec.parse(spec), n + 1)
    return n, largest_real_zero(seq, n, width)


def _ray_task(args) -> Tuple[int, RayPositivityCertificate, int]:
    spec, n, a = args
    seq = generate(ArithFnSpec.parse(spec), n + 1)
    return n, verify_positive_beyond(seq, n, a), delta_sign_at(seq, n, a)


def largest_zeros(g: ArithFnSpec, ns: Iterable[int], width=DEFAULT_WIDTH, threads: int = 1):
    ns = list(ns)
    if threads <= 1:
        seq = generate(g, max(ns) + 1)
        return [(n, largest_real_zero(seq, n, width)) for n in ns]
    return parallel_map(_zero_task, [(g.name, n, width) for n in ns], threads)


def ray_certificates(g: ArithFnSpec, ns: Iterable[int], a, threads: int = 1):
    ns = list(ns)
    a = Fraction(a)
    if threads <= 1:
        seq = generate(g, max(ns) + 1)
        return [(n, verify_positive_beyond(seq, n, a), delta_sign_at(seq, n, a)) for n in ns]
    return parallel_map(_ray_task, [(g.name, n, a) for n in ns], threads)


# ---------------------------------------------------------------------------
# suites


def _monotone(report: Report, seq, n0: int, horizon: int, expected_from: int) -> None:
    r = sequences.monotone_root_verify(seq, n0, horizon)
    report.add(
        n0,
        f"log-concave on [{n0}, {horizon - 1}] and R({n0 - 1}) > R({n0})",
        r.induction_holds and r.agree,
        method="log-concavity with initial condition",
        logconcave_failures=r.logconcave_failures,
        initial_condition=r.initial_condition,
    )
    for n in range(expected_from, horizon):
        report.add(n, f"{seq.name}({n})^{n + 1} > {seq.name}({n + 1})^{n}",
                   sequences.root_decreasing_check(seq, n), method="exact integer comparison")


def verify_sun_p(horizon: int = 500, **_) -> Report:
    rep = Report("sun-p")
    p = sequences.partitions(horizon + 1)
    rep.add(5, "p(5)^6 < p(6)^5 (no monotonicity before n = 6)", sequences.root_compare(p, 5) < 0,
            method="exact integer comparison")
    _monotone(rep, p, 26, horizon, 6)
    return rep


def colored_expectation(k: int, n: int) -> Optional[int]:
    """Expected sign of p_k(n)^(n+1) - p_k(n+1)^n; None where nothing is claimed."""
    if k == 1:
        return 1 if n >= 6 else None
    if n == 1 and k == 2:
        return -1
    if n == 1 and k == 3:
        return 0
    return 1


def verify_color_k(ks: Sequence[int] = tuple(range(1, 11)), lo: int = 1, hi: int = 500, **_) -> Report:
    rep = Report("color-k")
    names = {1: ">", 0: "=", -1: "<"}
    for k in ks:
        seq = sequences.colored_partitions(k, hi + 1)
        for n in range(lo, hi + 1):
            want = colored_expectation(k, n)
            got = sequences.root_compare(seq, n)
            if want is None:
                continue
            rep.add(n, f"k={k}: p_k(n)^(n+1) {names[want]} p_k(n+1)^n", got == want,
                    k=k, observed=names[got], method="exact integer comparison")
    return rep


def verify_plane(horizon: int = 500, **_) -> Report:
    rep = Report("plane")
    pp = sequences.plane_partitions(horizon + 1)
    rep.add(5, "pp(5)^6 < pp(6)^5", sequences.root_compare(pp, 5) < 0, method="exact integer comparison")
    _monotone(rep, pp, 12, horizon, 6)
    return rep


def verify_over(horizon: int = 500, **_) -> Report:
    rep = Report("over")
    pb = sequences.overpartitions(horizon + 1)
    seq = generate(gbar(), 4)
    for n in (1, 2):
        rep.add(n, f"Delta_{n}^gbar(2) = 0", delta_sign_at(seq, n, 2) == 0, method="exact evaluation")
        rep.add(n, f"pbar({n})^{n + 1} = pbar({n + 1})^{n}", sequences.root_compare(pb, n) == 0,
                method="exact integer comparison")
    _monotone(rep, pb, 4, horizon, 3)
    return rep


def verify_sigma_zeros(lo: int = 6, hi: int = 40, threads: int = 1, width=DEFAULT_WIDTH, **_) -> Report:
    rep = Report("sigma-zeros-lt-1")
    for n, r in largest_zeros(sigma(1), range(lo, hi + 1), width, threads):
        rep.add(n, "largest zero of Delta_n^sigma < 1", r.hi < 1, interval=interval_json(r),
                method="Descartes bisection")
    return rep


def _ray_suite(rep: Report, g: ArithFnSpec, lo: int, hi: int, threads: int) -> Report:
    for n, cert, sign in ray_certificates(g, range(lo, hi + 1), 1, threads):
        rep.add(n, f"Delta_n^{g.name}(x) > 0 for x >= 1", cert.valid and sign > 0,
                **certificate_json(cert), sign_at_threshold=sign)
    return rep


def verify_sigma2_ray(lo: int = 6, hi: int = 25, threads: int = 1, **_) -> Report:
    return _ray_suite(Report("sigma2-ray"), sigma(2), lo, hi, threads)


def verify_gell_ray(lo: int = 8, hi: int = 25, ells: Sequence[int] = (3, 4), threads: int = 1, **_) -> Report:
    rep = Report("gell-ray")
    for ell in ells:
        _ray_suite(rep, gell(ell), lo, hi, threads)
    return rep


def verify_pochhammer(lo: int = 1, hi: int = 50, **_) -> Report:
    rep = Report("pochhammer")
    seq = generate(psi(0), hi + 1)
    for n in range(lo, hi + 1):
        rep.add(n, "P_n^psi0 = x(x+1)...(x+n-1)/n!", closed_forms.pochhammer_poly(n) == seq[n],
                method="exact polynomial equality")
        r = largest_real_zero(seq, n)
        rep.add(n, "largest zero of Delta_n^psi0 = 1", r.exact == 1, interval=interval_json(r))
    return rep


def verify_laguerre(lo: int = 1, hi: int = 50, **_) -> Report:
    rep = Report("laguerre")
    seq = generate(psi(1), hi + 1)
    for n in range(lo, hi + 1):
        rep.add(n, "P_n^psi1 = (x/n) L_{n-1}^(1)(-x)", closed_forms.laguerre_identity_check(n),
                method="exact polynomial equality")
        r = largest_real_zero(seq, n)
        bound = 1 if n >= 6 else 2
        top = r.exact if r.exact is not None else r.hi
        rep.add(n, f"largest zero of Delta_n^psi1 <= {bound}", top <= bound, interval=interval_json(r))
    return rep


def verify_delta2_lemma(**_) -> Report:
    rep = Report("delta2-lemma")
    for g in REGISTERED:
        seq = generate(g, 3)
        crit, observed = delta2_lemma_agreement(g)
        rep.add(2, f"{g.name}: g(3) <= g(2)^2 agrees with Delta_2 >= 0 on [g(2), oo)",
                crit == observed, criterion=crit, observed=observed)
        rep.add(1, f"{g.name}: closed Delta_1 equals expansion", closed_delta1(g) == build_delta(seq, 1).poly)
        rep.add(2, f"{g.name}: closed Delta_2 equals expansion", closed_delta2(g) == build_delta(seq, 2).poly)
    return rep


SUITES: Dict[str, Callable[..., Report]] = {
    "sun-p": verify_sun_p,
    "color-k": verify_color_k,
    "plane": verify_plane,
    "over": verify_over,
    "sigma-zeros-lt-1": verify_sigma_zeros,
    "sigma2-ray": verify_sigma2_ray,
    "gell-ray": verify_gell_ray,
    "pochhammer": verify_pochhammer,
    "laguerre": verify_laguerre,
    "delta2-lemma": verify_delta2_lemma,
}


def run(suite: str, **options) -> Report:
    try:
        fn = SUITES[suite]
    except KeyError:
        raise ValueError(f"unknown verification id {suite!r}; choose from {', '.join(SUITES)}") from None
    return fn(**options)
