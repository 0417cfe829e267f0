"""Parameter-grid sweeps over the identity catalog and report emission.

A sweep enumerates a Cartesian parameter grid per case (points outside a
case's validity domain are reported ``not_applicable`` rather than
skipped), verifies every instance, and aggregates into a :class:`Report`
with a machine-readable JSON form and CSV/JSON table exports.  Identical
configurations produce identical result sets at any parallelism level:
results are canonically ordered by case id and parameters.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product

from .bernoulli import DEFAULT_TABLE, classical_bernoulli_numbers, gen_bernoulli_numbers_symbolic
from .identities import (
    CASE_DEFS,
    CASE_IDS,
    IdentityCase,
    SumSpec,
    VerificationResult,
    verify_case,
)
from .poly import Poly
from .textform import format_fraction, format_poly, parse_fraction

RESIDUAL_TRUNCATE_AT = 2000

# Fixed rational sample points for the axes that are not swept by the
# integer bounds.  Chosen small and denominator-diverse; every point set
# is part of the documented sweep contract.
EVAL_POINTS = (Fraction(0), Fraction(1, 3))
TRIPLE_XY_PAIRS = ((Fraction(1), Fraction(0)), (Fraction(1, 2), Fraction(1, 3)), (Fraction(-2), Fraction(1)))
T_POINTS = (Fraction(0), Fraction(1, 2), Fraction(-1, 3))
BETA_POINTS = (Fraction(0), Fraction(1, 2))
RATIO_X_POINTS = (Fraction(0), Fraction(1, 3), Fraction(-1, 2))


class UsageError(ValueError):
    """Invalid configuration or command usage."""


@dataclass
class SweepConfig:
    max_n: int = 3
    max_l: int = 3
    max_r: int = 2
    max_s: int = 2
    max_m: int = 4
    lambda_points: tuple[Fraction, ...] = (Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2))
    alpha_points: tuple[Fraction, ...] = (Fraction(1), Fraction(2), Fraction(1, 2))
    cases: tuple[str, ...] = CASE_IDS
    parallelism: int = 1

    def validate(self) -> None:
        for name in ("max_n", "max_l", "max_r", "max_s", "max_m"):
            if getattr(self, name) < 0:
                raise UsageError(f"{name} must be >= 0")
        if self.parallelism < 1:
            raise UsageError("parallelism must be >= 1")
        unknown = [c for c in self.cases if c not in CASE_DEFS]
        if unknown:
            raise UsageError(f"unknown case ids: {', '.join(unknown)}")
        needs_lambda = {"theorem_le1", "proof_replay", "app1"}
        if needs_lambda & set(self.cases) and not self.lambda_points:
            raise UsageError("lambda_points must be non-empty for the selected cases")
        needs_alpha = {"s1", "s2", "cor3a"}
        if needs_alpha & set(self.cases) and not self.alpha_points:
            raise UsageError("alpha_points must be non-empty for the selected cases")

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "max_l": self.max_l,
            "max_r": self.max_r,
            "max_s": self.max_s,
            "max_m": self.max_m,
            "lambda_points": [format_fraction(v) for v in self.lambda_points],
            "alpha_points": [format_fraction(v) for v in self.alpha_points],
            "cases": list(self.cases),
            "parallelism": self.parallelism,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SweepConfig":
        cfg = cls()
        try:
            kwargs = {}
            for name in ("max_n", "max_l", "max_r", "max_s", "max_m", "parallelism"):
                if name in data:
                    kwargs[name] = int(data[name])
            if "lambda_points" in data:
                kwargs["lambda_points"] = tuple(parse_fraction(str(v)) for v in data["lambda_points"])
            if "alpha_points" in data:
                kwargs["alpha_points"] = tuple(parse_fraction(str(v)) for v in data["alpha_points"])
            if "cases" in data:
                kwargs["cases"] = tuple(data["cases"])
            cfg = replace(cfg, **kwargs)
        except (TypeError, ValueError) as exc:
            raise UsageError(f"bad sweep config: {exc}") from exc
        cfg.validate()
        return cfg


def _case_grid(case_id: str, cfg: SweepConfig):
    """Yield the raw parameter grid for one case (domain filtering happens
    inside the verifier, which reports not_applicable)."""
    ns = range(cfg.max_n + 1)
    ls = range(cfg.max_l + 1)
    rs = range(cfg.max_r + 1)
    ss = range(cfg.max_s + 1)
    ms = range(1, cfg.max_m + 1)
    if case_id in ("t3", "s3", "agoh_leibniz"):
        for n, l, r in product(ns, ls, rs):
            yield SumSpec(n=n, l=l, r=r)
    elif case_id in ("t4", "tg4"):
        for n, l, r, m in product(ns, ls, rs, ms):
            yield SumSpec(n=n, l=l, r=r, m=m)
    elif case_id in ("t5", "ges1"):
        for n, r, m in product(ns, rs, ms):
            yield SumSpec(n=n, r=r, m=m)
    elif case_id == "rem1":
        for m, r, s in product(ms, rs, ss):
            yield SumSpec(m=m, r=r, s=s)
    elif case_id in ("p1", "k5", "k3"):
        for n in ns:
            yield SumSpec(n=n)
    elif case_id in ("e1", "e2", "neto_corrected", "vassilev"):
        for n, l in product(ns, ls):
            yield SumSpec(n=n, l=l)
    elif case_id == "t230":
        for n, l, m in product(ns, ls, ms):
            yield SumSpec(n=n, l=l, m=m)
    elif case_id in ("t24", "c1"):
        for n, m in product(ns, ms):
            yield SumSpec(n=n, m=m)
    elif case_id in ("theorem_le1", "proof_replay"):
        for n, l, r, s in product(ns, ls, rs, ss):
            for lam in cfg.lambda_points:
                yield SumSpec(n=n, l=l, r=r, s=s, lam=lam)
    elif case_id == "app1":
        for n, l, r, s in product(ns, ls, rs, ss):
            for lam in cfg.lambda_points:
                for x0 in EVAL_POINTS:
                    yield SumSpec(n=n, l=l, r=r, s=s, lam=lam, x=x0)
    elif case_id == "nielsen_f10":
        for n, l, r, m in product(ns, ls, rs, ms):
            for beta in BETA_POINTS:
                yield SumSpec(n=n, l=l, r=r, m=m, beta=beta)
    elif case_id in ("s1", "s2", "cor3a"):
        for n, l, r in product(ns, ls, rs):
            for alpha in cfg.alpha_points:
                for x, y in TRIPLE_XY_PAIRS:
                    yield SumSpec(n=n, l=l, r=r, alpha=alpha, x=x, y=y, z=alpha - x - y)
    elif case_id == "s4":
        for n, l, r, s in product(ns, ls, rs, ss):
            for x, y in TRIPLE_XY_PAIRS:
                yield SumSpec(n=n, l=l, r=r, s=s, x=x, y=y, z=s + 1 - x - y)
    elif case_id == "cor3b":
        for n, l, r in product(ns, ls, rs):
            for t in T_POINTS:
                yield SumSpec(n=n, l=l, r=r, t=t)
    elif case_id == "s20":
        for n, r in product(ns, rs):
            for t in T_POINTS:
                yield SumSpec(n=n, r=r, t=t)
    elif case_id == "cor1":
        for n, r in product(ns, rs):
            for x0 in RATIO_X_POINTS:
                yield SumSpec(n=n, r=r, x=x0)
    elif case_id == "fi2":
        for n, r in product(ns, rs):
            yield SumSpec(n=n, r=r)
    else:  # pragma: no cover - registry and grid table kept in sync
        raise UsageError(f"no grid defined for case {case_id!r}")


def enumerate_cases(cfg: SweepConfig) -> list[IdentityCase]:
    out = []
    for case_id in cfg.cases:
        for spec in _case_grid(case_id, cfg):
            out.append(IdentityCase(case_id, spec))
    return out


_PARAM_KEYS = (
    ("n", "n"),
    ("l", "l"),
    ("r", "r"),
    ("s", "s"),
    ("m", "m"),
    ("lam", "lambda"),
    ("x", "x"),
    ("y", "y"),
    ("z", "z"),
    ("t", "t"),
    ("beta", "beta"),
    ("alpha", "alpha"),
)


def params_to_dict(case: IdentityCase) -> dict:
    """Stable JSON encoding restricted to the case's own axes."""
    axes = set(CASE_DEFS[case.id].axes)
    if case.id in ("s1", "s4", "cor3a"):
        axes.add("z")
    out = {}
    for attr, key in _PARAM_KEYS:
        if attr not in axes and key not in axes:
            continue
        value = getattr(case.params, attr)
        if attr in ("n", "l", "r", "s", "m"):
            out[key] = value
        elif attr == "alpha":
            out[key] = "symbolic" if value is None else format_fraction(value)
        else:
            out[key] = format_fraction(value)
    return out


def params_from_dict(case_id: str, data: dict) -> SumSpec:
    kwargs = {}
    for attr, key in _PARAM_KEYS:
        if key not in data:
            continue
        value = data[key]
        if attr in ("n", "l", "r", "s", "m"):
            kwargs[attr] = int(value)
        elif attr == "alpha":
            kwargs[attr] = None if value == "symbolic" else parse_fraction(str(value))
        else:
            kwargs[attr] = parse_fraction(str(value))
    return SumSpec(**kwargs)


def residual_text(residual) -> str:
    if isinstance(residual, str):
        return residual
    if isinstance(residual, Poly):
        return format_poly(residual)
    return format_fraction(residual)


def result_to_dict(res: VerificationResult) -> dict:
    out = {
        "case": res.case.id,
        "params": params_to_dict(res.case),
        "status": res.status,
    }
    text = residual_text(res.residual)
    if len(text) > RESIDUAL_TRUNCATE_AT:
        out["residual"] = text[:RESIDUAL_TRUNCATE_AT]
        out["residual_truncated"] = True
        out["residual_sha256"] = hashlib.sha256(text.encode()).hexdigest()
    else:
        out["residual"] = text
    if res.readings is not None:
        out["readings"] = dict(res.readings)
        out["reading"] = res.reading
    if res.note:
        out["note"] = res.note
    out["elapsed_ms"] = round(res.elapsed * 1000, 3)
    return out


def result_from_dict(data: dict) -> VerificationResult:
    case = IdentityCase(data["case"], params_from_dict(data["case"], data["params"]))
    return VerificationResult(
        case=case,
        status=data["status"],
        residual=data["residual"],
        elapsed=data.get("elapsed_ms", 0.0) / 1000,
        readings=data.get("readings"),
        reading=data.get("reading"),
        note=data.get("note"),
    )


@dataclass
class Report:
    config: SweepConfig
    results: list[VerificationResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def summary(self) -> dict:
        counts = {"verified": 0, "counterexample": 0, "not_applicable": 0, "adjudicated": 0}
        for res in self.results:
            counts[res.status] += 1
            if res.readings is not None:
                counts["adjudicated"] += 1
        return counts

    @property
    def success(self) -> bool:
        return self.summary["counterexample"] == 0


def _sort_key(res: VerificationResult):
    return (res.case.id, json.dumps(params_to_dict(res.case), sort_keys=True))


def required_table_size(cfg: SweepConfig) -> int:
    return 2 * (cfg.max_n + cfg.max_l + cfg.max_r) + cfg.max_s + 6


def run_suite(cfg: SweepConfig) -> Report:
    """Enumerate, verify and aggregate; deterministic at any parallelism."""
    cfg.validate()
    cases = enumerate_cases(cfg)
    start = time.perf_counter()
    # Pre-grow shared tables so parallel workers only read.
    size = required_table_size(cfg)
    classical_bernoulli_numbers(2 * size)
    gen_bernoulli_numbers_symbolic(size)
    DEFAULT_TABLE.grow(size)
    if cfg.parallelism > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=cfg.parallelism) as pool:
            results = list(pool.map(verify_case, cases))
    else:
        results = [verify_case(c) for c in cases]
    results.sort(key=_sort_key)
    return Report(config=cfg, results=results, elapsed=time.perf_counter() - start)


def emit_json(report: Report) -> str:
    obj = {
        "config": report.config.to_dict(),
        "results": [result_to_dict(r) for r in report.results],
        "summary": report.summary,
        "elapsed_ms": round(report.elapsed * 1000, 3),
    }
    return json.dumps(obj, indent=2)


def parse_report(text: str) -> Report:
    """Inverse of :func:`emit_json` up to elapsed times."""
    data = json.loads(text)
    cfg = SweepConfig.from_dict(data["config"])
    results = [result_from_dict(r) for r in data["results"]]
    return Report(config=cfg, results=results, elapsed=data.get("elapsed_ms", 0.0) / 1000)


def emit_tables(kind: str, n_max: int, fmt: str = "csv") -> str:
    """Number-table export: rows (n, value) with exact text values."""
    if n_max < 0:
        raise UsageError("table size must be >= 0")
    if kind == "classical":
        values = [format_fraction(b) for b in classical_bernoulli_numbers(n_max)]
    elif kind == "generalized":
        values = [format_poly(b) for b in gen_bernoulli_numbers_symbolic(n_max)]
    else:
        raise UsageError(f"unknown table kind {kind!r}; expected classical or generalized")
    if fmt == "csv":
        return "".join(f"{n},{v}\n" for n, v in enumerate(values))
    if fmt == "json":
        return json.dumps([{"n": n, "value": v} for n, v in enumerate(values)], indent=2)
    raise UsageError(f"unknown table format {fmt!r}; expected csv or json")
