"""Determinant identities between moving-surface matrices and resultants.

Each ``check_*`` function takes one surface and returns :class:`Check`
records; :func:`run_suite` draws a seeded stream of random surfaces,
skipping degenerate draws, and collects a :class:`SuiteReport`.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from .exactla import det, rank
from .implicitize import (
    build_combined_product,
    build_MT_product,
    build_Ttilde,
    kernel_tableau,
    tableau_degree,
)
from .exactla import poly_det
from .movmat import (
    build_MP,
    build_MP_I,
    build_MQd,
    build_MSd,
    build_MTd,
    valid_index_sets,
)
from .polycore import ParamSurface, homogenize
from .resultant import (
    complex_determinant,
    koszul_matrices,
    signed_minors,
    specialized_resultant_P,
    surface_resultant,
    valid_index_set,
)

IDENTITIES = ("thm-mt", "lemma-mt", "conj-61", "conj-62", "thm-mth", "remark-pm", "dim-formula")


@dataclass
class Check:
    name: str
    relation: str
    left: str
    right: str
    passed: bool
    sign: int | None = None
    trial: int | None = None
    informational: bool = False

    def line(self) -> str:
        tag = "INFO" if self.informational else ("PASS" if self.passed else "FAIL")
        if self.informational:
            tag += "-holds" if self.passed else "-fails"
        sign = "" if self.sign is None else f" sign={'+' if self.sign > 0 else '-'}"
        return f"[{tag}] {self.name}: {self.relation} | left={self.left} right={self.right}{sign}"


def _compare(name: str, relation: str, left, right, trial=None, informational=False) -> Check:
    """Equality up to sign; records which sign was realized."""
    left, right = Fraction(left), Fraction(right)
    if left == right:
        sign, ok = 1, True
    elif left == -right:
        sign, ok = -1, True
    else:
        sign, ok = None, False
    if ok and not left:
        sign = None
    return Check(name, relation, str(left), str(right), ok, sign, trial, informational)


def _exact(name: str, relation: str, left, right, trial=None) -> Check:
    return Check(name, relation, str(left), str(right), left == right, None, trial)


# single-instance checks --------------------------------------------------

def check_thm_mt(S: ParamSurface, d: int, I=None, trial=None) -> list[Check]:
    """``|MS^d| = +-|MP|^{(d+1)d/2} Res^{(d+1)d(d-1)/6}``.

    Triangular surfaces use ``MS^d_I`` and ``MP_I``; the relation with the two
    exponents swapped is reported alongside as an informational line.
    """
    res = surface_resultant(S)
    a, b = (d + 1) * d // 2, (d + 1) * d * (d - 1) // 6
    if S.is_tensor:
        ms, mp = det(build_MSd(S, d)), det(build_MP(S))
        return [_compare(f"thm-mt d={d}", f"|MS^{d}| = +-|MP|^{a} Res^{b}", ms, mp ** a * res ** b, trial)]
    I = I or valid_index_sets(S)[0]
    ms, mp = det(build_MSd(S, d, I)), det(build_MP_I(S, I))
    return [
        _compare(f"thm-mt d={d} I={I}", f"|MS^{d}_I| = +-|MP_I|^{a} Res_n^{b}", ms,
                 mp ** a * res ** b, trial),
        _compare(f"swapped-exponents d={d} I={I}", f"|MS^{d}_I| = +-|MP_I|^{b} Res_n^{a}", ms,
                 mp ** b * res ** a, trial, informational=True),
    ]


def check_lemma_mt(S: ParamSurface, d: int, I=None, trial=None) -> list[Check]:
    """``|MT^d| = +-|MP|^d Res^{d(d-1)/2}`` (with ``I`` for triangular surfaces)."""
    res = surface_resultant(S)
    b = d * (d - 1) // 2
    if S.is_tensor:
        mt, mp = det(build_MTd(S, d)), det(build_MP(S))
        return [_compare(f"lemma-mt d={d}", f"|MT^{d}| = +-|MP|^{d} Res^{b}", mt, mp ** d * res ** b, trial)]
    I = I or valid_index_sets(S)[0]
    mt, mp = det(build_MTd(S, d, I)), det(build_MP_I(S, I))
    return [_compare(f"lemma-mt d={d} I={I}", f"|MT^{d}_I| = +-|MP_I|^{d} Res_n^{b}", mt,
                     mp ** d * res ** b, trial)]


def check_conj61(S: ParamSurface, trial=None) -> list[Check]:
    if not S.is_tensor:
        raise ValueError("conj-61 concerns tensor-product surfaces")
    res = surface_resultant(S)
    ms, mp = det(build_MSd(S, 2)), det(build_MP(S))
    return [_compare("conj-61", "|MS^2| = +-|MP|^3 Res", ms, mp ** 3 * res, trial)]


def check_conj62(S: ParamSurface, all_index_sets: bool | None = None, trial=None) -> list[Check]:
    """``|MS^2_I| = +-|MP_I|^3 Res_n`` for the valid index sets.

    Every valid ``I`` is used when ``n = 1`` (or when asked), otherwise the
    first.  The swapped placement ``|MP_I| Res_n^3`` is reported alongside as
    informational; it agrees only when ``n = 1``.
    """
    if S.is_tensor:
        raise ValueError("conj-62 concerns triangular surfaces")
    res = surface_resultant(S)
    sets = valid_index_sets(S)
    if all_index_sets is None:
        all_index_sets = S.degrees[0] == 1
    if not all_index_sets:
        sets = sets[:1]
    out = []
    for I in sets:
        ms, mp = det(build_MSd(S, 2, I)), det(build_MP_I(S, I))
        out.append(_compare(f"conj-62 I={I}", "|MS^2_I| = +-|MP_I|^3 Res_n", ms, mp ** 3 * res, trial))
        out.append(_compare(f"swapped-exponents I={I}", "|MS^2_I| = +-|MP_I| Res_n^3", ms,
                            mp * res ** 3, trial, informational=True))
    return out


def check_thm_mth(S: ParamSurface, trial=None) -> list[Check]:
    """``Res * |M.T| = +-P^h`` and ``|T~| = +-|M.T|`` as polynomial identities."""
    K = kernel_tableau(S)
    deg = tableau_degree(K)
    Dt = poly_det(build_Ttilde(K), deg)
    prod = build_MT_product(K) if S.is_tensor else build_combined_product(K)
    Dm = poly_det(prod, deg)
    res = surface_resultant(S)
    P = specialized_resultant_P(S)
    Ph = homogenize(P, P.total_degree())
    lhs = Dm.scale(res)

    def poly_check(name, relation, left, right):
        sign = 1 if left == right else (-1 if left == -right else None)
        return Check(name, relation, str(left), str(right), sign is not None, sign, trial)

    return [
        poly_check("prop-formal", "|T~| = +-|M.T|", Dt, Dm),
        poly_check("thm-mth", "Res * |M.T| = +-P^h", lhs, Ph),
        _exact("deg P", "total degree of P = degree of |T~|", P.total_degree(), deg, trial),
    ]


def distinct_index_sets(K, count: int, seed: int = 0) -> list[list[int]]:
    """Up to ``count`` distinct valid column sets of D1, from seeded scan orders."""
    sets = [valid_index_set(K)]
    rng = random.Random(seed)
    q = K.D1.ncols
    attempts = 0
    while len(sets) < count and attempts < 50 * count:
        attempts += 1
        order = list(range(q))
        rng.shuffle(order)
        I = valid_index_set(K, order)
        if I not in sets:
            sets.append(I)
    return sets


def check_remark_pm(S: ParamSurface, d: int, nsets: int = 3, trial=None) -> list[Check]:
    """``m_{1,I} = (-1)^sigma det(complex) m_{0,I}`` for several ``I``; ``det(complex) = +-Res^{d-1}``."""
    K = koszul_matrices(*S.x[:3], d=d)
    ref = complex_determinant(K)
    res = surface_resultant(S)
    out = [
        _exact("D1*D0=0", "D1 . D0 = 0", (K.D1 @ K.D0).is_zero(), True, trial),
        _compare(f"complex d={d}", f"det(complex) = +-Res^{d - 1}", ref, res ** (d - 1), trial),
    ]
    for I in distinct_index_sets(K, nsets, seed=trial or 0):
        m1, m0, sigma = signed_minors(K, I)
        rhs = (-1) ** sigma * ref * m0
        short = f"I=#{sum(1 << i for i in I):x}"
        out.append(_exact(f"remark-pm d={d} {short}",
                          "m1_I = (-1)^sigma det(complex) m0_I", m1, rhs, trial))
        out.append(_exact(f"signed ratio d={d} {short}", "(-1)^sigma m1_I / m0_I = det(complex)",
                          (-1) ** sigma * m1 / m0, ref, trial))
    return out


def expected_nullity(S: ParamSurface, d: int) -> int:
    if S.is_tensor:
        m, n = S.degrees
        return (d + 1) * d * (d - 1) // 6 * m * n
    n = S.degrees[0]
    return n * (d + 1) * d * (d * n + d + 5 - n) // 12


def check_dim_formula(S: ParamSurface, d: int, trial=None) -> list[Check]:
    MQ = build_MQd(S, d)
    nullity = MQ.ncols - rank(MQ)
    return [_exact(f"dim-formula d={d}", "nullity(MQ^d) = dimension formula", nullity,
                   expected_nullity(S, d), trial)]


# random suites -----------------------------------------------------------

def is_degenerate(S: ParamSurface) -> bool:
    """Res(x1,x2,x3) = 0, or MP singular (tensor) / rank deficient (triangular)."""
    if not surface_resultant(S):
        return True
    MP = build_MP(S)
    if S.is_tensor:
        return not det(MP)
    return rank(MP) < MP.nrows


def instance_stream(kind: str, degrees: tuple, seed: int):
    """Yield ``(surface, resamples_so_far)`` for non-degenerate random surfaces."""
    rng = random.Random(seed)
    resamples = 0
    while True:
        S = ParamSurface.random(kind, degrees, rng)
        if is_degenerate(S):
            resamples += 1
            continue
        yield S, resamples


@dataclass
class SuiteReport:
    identity: str
    command: str
    parameters: dict
    instances: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    resamples: int = 0
    elapsed: float | None = None

    @property
    def gated(self) -> list[Check]:
        return [c for c in self.checks if not c.informational]

    @property
    def passed(self) -> bool:
        return bool(self.gated) and all(c.passed for c in self.gated)

    def to_text(self) -> str:
        lines = [f"command: {self.command}", f"identity: {self.identity}"]
        lines += [f"{k}: {v}" for k, v in self.parameters.items()]
        lines.append(f"instances: {len(self.instances)} (resampled {self.resamples})")
        for t, desc in enumerate(self.instances):
            lines.append(f"trial {t}: {desc}")
            lines += ["  " + c.line() for c in self.checks if c.trial == t]
        info = [c for c in self.checks if c.informational]
        if info:
            held = sum(c.passed for c in info)
            lines.append(f"informational: {held}/{len(info)} alternative relations hold")
        ok = sum(c.passed for c in self.gated)
        lines.append(f"summary: {ok}/{len(self.gated)} checks passed")
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        if self.elapsed is not None:
            lines.append(f"elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "command": self.command,
            "identity": self.identity,
            "parameters": self.parameters,
            "instances": self.instances,
            "resamples": self.resamples,
            "checks": [asdict(c) for c in self.checks],
            "passed": self.passed,
        }
        if self.elapsed is not None:
            data["elapsed"] = self.elapsed
        return json.dumps(data, indent=2) + "\n"


def checks_for(identity: str, S: ParamSurface, d: int, trial: int | None,
               all_index_sets: bool | None = None) -> list[Check]:
    if identity == "thm-mt":
        return check_thm_mt(S, d, trial=trial)
    if identity == "lemma-mt":
        return check_lemma_mt(S, d, trial=trial)
    if identity == "conj-61":
        return check_conj61(S, trial=trial)
    if identity == "conj-62":
        return check_conj62(S, all_index_sets, trial=trial)
    if identity == "thm-mth":
        return check_thm_mth(S, trial=trial)
    if identity == "remark-pm":
        return check_remark_pm(S, max(d, 2), trial=trial)
    if identity == "dim-formula":
        return check_dim_formula(S, d, trial=trial)
    raise ValueError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")


def run_suite(identity: str, kind: str, degrees: tuple, d: int = 2, trials: int = 10,
              seed: int = 0, command: str = "", surface: ParamSurface | None = None,
              all_index_sets: bool | None = None, timing: bool = False) -> SuiteReport:
    """Run one identity on a fixed surface or on ``trials`` seeded random surfaces."""
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")
    start = time.perf_counter()
    params = {"case": kind, "degrees": "x".join(map(str, degrees)), "d": d,
              "trials": trials if surface is None else 1, "seed": seed}
    report = SuiteReport(identity, command, params)
    if surface is not None:
        stream = iter([(surface, 0)])
        trials = 1
    else:
        stream = instance_stream(kind, degrees, seed)
    for t in range(trials):
        S, report.resamples = next(stream)
        report.instances.append(str(S))
        report.checks.extend(checks_for(identity, S, d, t, all_index_sets))
    if timing:
        report.elapsed = time.perf_counter() - start
    return report
