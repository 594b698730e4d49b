"""Standard inequalities for minimal surfaces of general type.

Forms are checked on the whole half-line ``t >= floor`` exactly:
``a t + b >= c t + d`` for all ``t >= t0`` iff ``a >= c`` and the inequality
holds at ``t0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .numeric import LinForm, Value, as_form, param_of
from .surfaces import SurfaceInvariants, values_equal

__all__ = [
    "GeoCheck",
    "GeographyReport",
    "geq_from",
    "check_geography",
    "check_canonical_cover_pair",
    "GEOGRAPHY_CHECKS",
]

GEOGRAPHY_CHECKS = ("chi>=1", "K2>=1", "noether", "bmy")


def geq_from(lhs: Value, rhs: Value, floor: int = 1) -> bool:
    """``lhs >= rhs`` for every integer parameter value ``>= floor``."""
    p = param_of(lhs, rhs)
    if p is None:
        return lhs >= rhs
    diff = as_form(lhs, p) - as_form(rhs, p)
    return diff.slope >= 0 and diff(floor) >= 0


@dataclass(frozen=True)
class GeoCheck:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class GeographyReport:
    label: str
    checks: tuple[GeoCheck, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self) -> list[GeoCheck]:
        return [c for c in self.checks if c.status == "fail"]

    def to_json(self) -> dict:
        return {"label": self.label, "checks": [c.to_json() for c in self.checks]}


def check_geography(S: SurfaceInvariants, minimal_general_type: bool = True,
                    floor: int = 1) -> GeographyReport:
    if not minimal_general_type:
        return GeographyReport(S.label, tuple(
            GeoCheck(n, "skipped", "not flagged minimal of general type") for n in GEOGRAPHY_CHECKS
        ))
    rows = [
        ("chi>=1", S.chi, 1, f"chi = {S.chi}"),
        ("K2>=1", S.K2, 1, f"K2 = {S.K2}"),
        ("noether", S.K2, 2 * S.p_g - 4, f"K2 = {S.K2} vs 2pg-4 = {2 * S.p_g - 4}"),
        ("bmy", 9 * S.chi, S.K2, f"K2 = {S.K2} vs 9chi = {9 * S.chi}"),
    ]
    checks = []
    for name, lhs, rhs, detail in rows:
        ok = geq_from(lhs, rhs, floor)
        if isinstance(lhs, LinForm) or isinstance(rhs, LinForm):
            detail += f" for all {param_of(lhs, rhs)} >= {floor}"
        checks.append(GeoCheck(name, "pass" if ok else "fail", detail))
    return GeographyReport(S.label, tuple(checks))


def check_canonical_cover_pair(Y: SurfaceInvariants, T: SurfaceInvariants) -> bool:
    """``p_g(Y) = p_g(T)``, identically in the parameter for forms."""
    return values_equal(Y.p_g, T.p_g)
