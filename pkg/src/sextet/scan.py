"""Run conjecture and identity checks over every hexagonal system up to a size."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional

from .hexsys import HexSystem, enumerate_polyhexes
from .polyx import (
    Polynomial,
    evaluate,
    is_log_concave,
    is_unimodal,
    log_concavity_violations,
    shift_compose,
)
from .realroots import hurwitz_report, is_real_rooted, roots_in_open_interval
from .resonance import (
    clar_covering_polynomial,
    is_thin,
    kekule_count,
    phi_polynomial,
    sextet_polynomial,
)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Context:
    """Per-system data shared by the checks; polynomials are filled lazily."""

    system: HexSystem
    orientation: str = "odd"
    _cache: dict = field(default_factory=dict)

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def kekule(self) -> int:
        return self._get("K", lambda: kekule_count(self.system))

    @property
    def kekulean(self) -> bool:
        return self.kekule > 0

    @property
    def thin(self) -> bool:
        return self._get("thin", lambda: is_thin(self.system))

    @property
    def sigma(self) -> Polynomial:
        return self._get("sigma", lambda: sextet_polynomial(self.system))

    @property
    def chi(self) -> Polynomial:
        return self._get("chi", lambda: clar_covering_polynomial(self.system))

    @property
    def phi(self) -> Polynomial:
        return self._get("phi", lambda: phi_polynomial(self.system, self.orientation))

    def phi_with(self, orientation: str) -> Polynomial:
        return self._get(("phi", orientation), lambda: phi_polynomial(self.system, orientation))


@dataclass(frozen=True)
class Check:
    id: str
    kind: str  # "conjecture", "observation", "identity", "theorem" or "info"
    fn: Callable[[Context], dict]
    needs_kekulean: bool = True


REGISTRY: dict[str, Check] = {}


def register(check_id: str, kind: str, needs_kekulean: bool = True):
    def deco(fn):
        REGISTRY[check_id] = Check(check_id, kind, fn, needs_kekulean)
        return fn

    return deco


def _verdict(ok: bool, **detail) -> dict:
    out = {"status": PASS if ok else FAIL}
    if detail and not ok:
        out["detail"] = detail
    return out


def _skip(reason: str) -> dict:
    return {"status": SKIPPED, "reason": reason}


@register("sigma_log_concave", "conjecture")
def _sigma_lc(ctx):
    return _verdict(is_log_concave(ctx.sigma), violations=log_concavity_violations(ctx.sigma))


@register("sigma_unimodal", "conjecture")
def _sigma_uni(ctx):
    return _verdict(is_unimodal(ctx.sigma), coeffs=ctx.sigma.to_json())


@register("chi_unimodal", "conjecture")
def _chi_uni(ctx):
    return _verdict(is_unimodal(ctx.chi), coeffs=ctx.chi.to_json())


@register("chi_log_concave", "conjecture")
def _chi_lc(ctx):
    return _verdict(is_log_concave(ctx.chi), violations=log_concavity_violations(ctx.chi))


@register("phi_log_concave", "conjecture")
def _phi_lc(ctx):
    return _verdict(is_log_concave(ctx.phi), violations=log_concavity_violations(ctx.phi))


@register("real_zero_in_[-1,0)", "observation")
def _real_zero(ctx):
    f = ctx.sigma
    count = roots_in_open_interval(f, Fraction(-1), Fraction(0)) + (evaluate(f, -1) == 0)
    return _verdict(count >= 1, distinct_roots_in_interval=count)


@register("hurwitz_stable", "observation")
def _hurwitz(ctx):
    rep = hurwitz_report(ctx.sigma)
    out = _verdict(rep.stable, first_column=[str(v) for v in rep.first_column])
    if rep.imaginary_axis_roots:
        out["imaginary_axis_roots"] = True
    return out


@register("identity_chi_eq_phi_shift", "identity")
def _chi_phi(ctx):
    shifted = shift_compose(ctx.phi, 1)
    return _verdict(shifted == ctx.chi, chi=ctx.chi.to_json(), phi_shifted=shifted.to_json())


@register("identity_phi_eq_sigma_thin", "identity")
def _phi_sigma(ctx):
    if not ctx.thin:
        return _skip("not thin")
    return _verdict(ctx.phi == ctx.sigma, phi=ctx.phi.to_json(), sigma=ctx.sigma.to_json())


@register("identity_sigma1_eq_K_thin", "identity")
def _sigma_k(ctx):
    if not ctx.thin:
        return _skip("not thin")
    v = evaluate(ctx.sigma, 1)
    return _verdict(v == ctx.kekule, sigma_at_1=str(v), kekule=str(ctx.kekule))


def chi_first_half_decreasing(chi: Polynomial) -> bool:
    """c_C < c_(C-1) < ... < c_ceil(C/2), where C is the degree."""
    c = chi.coeffs
    top = len(c) - 1
    lowest = -(-top // 2)
    return all(c[k] < c[k - 1] for k in range(top, lowest, -1))


def chi_first_half_decreasing_of(h: HexSystem) -> bool:
    return chi_first_half_decreasing(clar_covering_polynomial(h))


@register("chi_first_half_decreasing", "theorem")
def _chi_half(ctx):
    return _verdict(chi_first_half_decreasing(ctx.chi), coeffs=ctx.chi.to_json())


@register("sigma_real_rooted", "info")
def _sigma_rr(ctx):
    return _verdict(is_real_rooted(ctx.sigma), sigma=ctx.sigma.to_json())


@register("phi_orientation_agreement", "info")
def _orient(ctx):
    odd, even = ctx.phi_with("odd"), ctx.phi_with("even")
    return _verdict(odd == even, odd=odd.to_json(), even=even.to_json())


ALL_CHECKS = tuple(REGISTRY)
EXIT_KINDS = ("identity", "theorem")


@dataclass
class ScanReport:
    code: str
    hexagons: int
    kekulean: bool
    thin: bool
    kekule: int
    checks: dict
    polynomials: dict

    def failures(self) -> list[str]:
        return [cid for cid, v in self.checks.items() if v["status"] == FAIL]

    def to_json(self) -> dict:
        return {
            "code": self.code,
            "hexagons": self.hexagons,
            "kekulean": self.kekulean,
            "thin": self.thin,
            "kekule": str(self.kekule),
            "checks": self.checks,
            "polynomials": self.polynomials,
        }


def _resolve(checks: Optional[Iterable[str]]) -> list[str]:
    if checks is None:
        return list(ALL_CHECKS)
    out = list(checks)
    unknown = [c for c in out if c not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown check ids: {unknown}; known: {list(REGISTRY)}")
    return out


def evaluate_system(h: HexSystem, checks: Optional[Iterable[str]] = None, orientation: str = "odd") -> ScanReport:
    ids = _resolve(checks)
    ctx = Context(h, orientation)
    verdicts = {}
    polys = {}
    if ctx.kekulean:
        polys = {"sigma": ctx.sigma.to_json(), "chi": ctx.chi.to_json(), "phi": ctx.phi.to_json()}
    for cid in ids:
        chk = REGISTRY[cid]
        if chk.needs_kekulean and not ctx.kekulean:
            verdicts[cid] = _skip("not Kekulean")
            continue
        v = chk.fn(ctx)
        if v["status"] == FAIL:
            v["replay"] = f"sextet profile --cells '{h.code}'"
        verdicts[cid] = v
    return ScanReport(
        code=h.code,
        hexagons=len(h.cells),
        kekulean=ctx.kekulean,
        thin=ctx.thin,
        kekule=ctx.kekule,
        checks=verdicts,
        polynomials=polys,
    )


def scan(h_max: int, checks: Optional[Iterable[str]] = None, orientation: str = "odd") -> Iterator[ScanReport]:
    ids = _resolve(checks)
    for h in enumerate_polyhexes(h_max):
        yield evaluate_system(h, ids, orientation)


def summarize(reports: Iterable[ScanReport], h_max: int, checks: Iterable[str]) -> dict:
    ids = list(checks)
    counts: dict[int, int] = {k: 0 for k in range(1, h_max + 1)}
    kek: dict[int, int] = {k: 0 for k in range(1, h_max + 1)}
    failures = []
    tally = {cid: {PASS: 0, FAIL: 0, SKIPPED: 0} for cid in ids}
    for r in reports:
        counts[r.hexagons] += 1
        kek[r.hexagons] += r.kekulean
        for cid, v in r.checks.items():
            tally[cid][v["status"]] += 1
            if v["status"] == FAIL:
                failures.append({"code": r.code, "check": cid, "kind": REGISTRY[cid].kind})
    blocking = [f for f in failures if f["kind"] in EXIT_KINDS]
    return {
        "h_max": h_max,
        "checks": ids,
        "counts_per_size": {str(k): v for k, v in counts.items()},
        "kekulean_per_size": {str(k): v for k, v in kek.items()},
        "tally": tally,
        "failures": failures,
        "identity_failures": len(blocking),
    }


def run_scan(
    h_max: int,
    checks: Optional[Iterable[str]] = None,
    out: Optional[Path] = None,
    orientation: str = "odd",
) -> dict:
    """Scan, streaming NDJSON reports to ``out`` (if given) plus ``<out>.manifest.json``."""
    ids = _resolve(checks)
    reports = []
    fh = open(out, "w") if out is not None else None
    try:
        for r in scan(h_max, ids, orientation):
            reports.append(r)
            if fh is not None:
                fh.write(json.dumps(r.to_json(), sort_keys=True) + "\n")
                fh.flush()
    finally:
        if fh is not None:
            fh.close()
    manifest = summarize(reports, h_max, ids)
    manifest["orientation"] = orientation
    if out is not None:
        manifest_path = Path(str(out) + ".manifest.json")
        manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
        manifest["manifest_path"] = str(manifest_path)
    return manifest
