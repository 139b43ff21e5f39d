"""
Verification harness: evaluate identity instances, build reports, run suites.

A record is a plain dict with the keys

    family, params, instance, mode, lhs_value, rhs_value, residual, bound,
    pass, notes, terms

Rationals inside ``params`` are written "num/den" and decimal values are
strings, so that a report at fixed precision and seed is byte-identical
from run to run.
"""

from __future__ import annotations

import inspect
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .evaluator import EvaluationError
from .identities import FAMILIES, IdentityInstance, ParameterError, get_family, load_all

DEFAULT_PREC = 128
DEFAULT_TOL = "1e-20"

SUITES = {
    "exact-algebra": ("ALG-STUFFLE", "ALG-STAR", "ALG-CIRCLED", "LEMMA-5.4"),
    "polylog": ("THM-2.2", "THM-2.3", "EQ-b4", "THM-2.4", "LEMMA-2.6", "EQ-b8"),
    "bbb": ("BBB-4.1", "BBB-4.2", "BBB-4.3", "BBB-4.4", "BBB-a1", "BBB-a2"),
    "insertions": ("EQ-4.5", "EQ-4.6", "EQ-4.7", "EQ-4.8", "EQ-4.9", "EQ-4.10",
                 "LISTAR-HALF", "EQ-4.14", "REL-2bar"),
    "alternating": ("THM-3.1", "COR-3.2", "LEMMA-3.3", "THM-3.4", "COR-3.5", "COR-3.6"),
    "ky": ("THM-5.1", "THM-5.2", "COR-5.3", "LEMMA-5.4", "THM-5.5", "KY-EXAMPLE",
           "KY-DISPLAY", "KY-REDUCTION"),
    "posets": ("EQ-5.21", "REL-DEPTH3"),
}

A2_DIAGNOSTIC = ("BBB-a2 uses zeta(pbar) = sum_k (-1)^k / k^p, so zeta(1bar) = -log 2; "
                 "a systematic failure here points at the sign convention of the correction term")


class UnknownSuite(KeyError):
    pass


@dataclass(frozen=True)
class Config:
    prec: int = DEFAULT_PREC
    tol: str = DEFAULT_TOL  # decimal text, parsed exactly
    seed: int = 0
    timings: bool = False


def suite_names() -> list:
    return sorted(SUITES) + ["all"]


def suite_families(name: str) -> tuple:
    if name == "all":
        load_all()
        seen: dict = {}
        for fams in SUITES.values():
            for f in fams:
                seen[f] = None
        return tuple(seen)
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(suite_names())}") from None


def family_grid(name: str, seed: int = 0) -> list:
    fam = get_family(name)
    if fam.grid is None:
        return []
    if "seed" in inspect.signature(fam.grid).parameters:
        return fam.grid(seed=seed)
    return fam.grid()


# ---------------------------------------------------------------------------
# one instance


def _json_value(v):
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    return v


def _digits(prec: int) -> int:
    return max(10, int(prec * 0.30103))


def _fmt(x, prec: int) -> str:
    with mpmath.workprec(prec + 16):
        return mpmath.nstr(x, _digits(prec), min_fixed=-5, max_fixed=5)


def _as_rational(e):
    """The constant of an Expression with no atoms, else None."""
    if e.is_zero():
        return Fraction(0)
    if set(e.terms) == {()}:
        return e.terms[()]
    return None


def check_instance(inst: IdentityInstance, prec: int = DEFAULT_PREC, tol=DEFAULT_TOL) -> dict:
    tol = Fraction(tol)
    rec = {
        "family": inst.family,
        "params": {k: _json_value(v) for k, v in inst.params.items()},
        "instance": inst.instance_id(),
        "mode": inst.mode,
        "lhs_value": None,
        "rhs_value": None,
        "residual": None,
        "bound": None,
        "pass": False,
        "notes": list(inst.notes),
        "terms": len(inst.lhs.terms) + len(inst.rhs.terms),
    }
    if inst.mode == "exact":
        lc, rc = inst.lhs.canonical(), inst.rhs.canonical()
        ok = (lc - rc).is_zero()
        lq, rq = _as_rational(lc), _as_rational(rc)
        if lq is not None and rq is not None:
            rec.update(lhs_value=_json_value(lq), rhs_value=_json_value(rq),
                       residual=_json_value(lq - rq), bound="0", **{"pass": ok})
            return rec
        rec["pass"] = ok
        if not ok:
            rec["notes"].append("canonical forms differ")
    try:
        lv = inst.lhs.evaluate(prec)
        rv = inst.rhs.evaluate(prec)
        d = inst.difference().evaluate(prec)
    except (EvaluationError, ValueError, ZeroDivisionError) as exc:
        rec["notes"].append(f"evaluation error: {exc}")
        rec["pass"] = False
        return rec
    with mpmath.workprec(prec + 16):
        res = abs(d.value)
        numeric_ok = res + d.bound <= mpmath.mpf(tol.numerator) / tol.denominator
        if res > d.bound:
            rec["notes"].append("residual exceeds its certified error bound")
    rec["lhs_value"] = _fmt(lv.value, prec)
    rec["rhs_value"] = _fmt(rv.value, prec)
    rec["residual"] = mpmath.nstr(res, 6)
    rec["bound"] = mpmath.nstr(d.bound, 6)
    if inst.mode != "exact":
        rec["pass"] = bool(numeric_ok)
    if not rec["pass"] and inst.family == "BBB-a2":
        rec["notes"].append(A2_DIAGNOSTIC)
    return rec


def run_instance(family: str, params: dict, prec: int = DEFAULT_PREC, tol=DEFAULT_TOL,
                 timings: bool = False) -> dict:
    t0 = time.perf_counter()
    try:
        inst = get_family(family).make(**params)
    except (ParameterError, TypeError) as exc:
        raise ParameterError(f"{family}: {exc}") from exc
    rec = check_instance(inst, prec, tol)
    if timings:
        rec["seconds"] = round(time.perf_counter() - t0, 4)
    return rec


def _task(args):
    family, params, prec, tol, timings = args
    return run_instance(family, params, prec, tol, timings)


def run_families(families, config: Config = Config(), jobs: int = 1) -> list:
    tasks = []
    for fam in families:
        for params in family_grid(fam, config.seed):
            tasks.append((fam, params, config.prec, config.tol, config.timings))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_task, tasks, chunksize=4))
    else:
        records = [_task(t) for t in tasks]
    return sorted(records, key=lambda r: r["instance"])


def run_suite(name: str, config: Config = Config(), jobs: int = 1) -> dict:
    records = run_families(suite_families(name), config, jobs)
    return make_report(records, config, suite=name)


def make_report(records: list, config: Config, suite: str | None = None) -> dict:
    failed = [r["instance"] for r in records if not r["pass"]]
    return {
        "suite": suite,
        "prec": config.prec,
        "tol": str(config.tol),
        "seed": config.seed,
        "count": len(records),
        "passed": len(records) - len(failed),
        "failed": failed,
        "records": records,
    }


def dump_report(report: dict, path: str):
    with open(path, "w") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")


__all__ = ["Config", "SUITES", "UnknownSuite", "check_instance", "run_instance", "run_families",
           "run_suite", "make_report", "dump_report", "suite_names", "suite_families", "family_grid",
           "FAMILIES"]
