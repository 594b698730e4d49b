"""Full verification sweep over the catalog: symbolic checks plus a numeric grid."""

from __future__ import annotations

import itertools
from collections import OrderedDict
from dataclasses import dataclass, field

from .catalog import DEFAULT_CATALOG, V_EXAMPLE2, Catalog
from .geography import check_geography
from .kunneth import LineBundleShadow, member_pg
from .numeric import LinForm, evaluate
from .pipeline import PipelineError, run_pipeline, symbolic_pipeline
from .quotients import FixedPointProfile, cyclic3_quotient, involution_quotient, solve_fixed_point_profile
from .sections import WeightConfig, coverage_check
from .surfaces import check_identities, values_equal

__all__ = ["VerifyResult", "verify"]

# pair I shadows: M^2 on the abelian surface and its trivial canonical bundle
PAIR_I_ADJOINT = LineBundleShadow.of(4, 0, 0, "M^2")
ABELIAN_CANONICAL = LineBundleShadow.of(1, 2, 1, "O_A")


@dataclass
class VerifyResult:
    counts: "OrderedDict[str, list[int]]" = field(default_factory=OrderedDict)
    failures: list[dict] = field(default_factory=list)

    def record(self, group: str, ok: bool, **detail):
        c = self.counts.setdefault(group, [0, 0])
        c[0 if ok else 1] += 1
        if not ok:
            self.failures.append({"group": group, **detail})

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "counts": {g: {"passed": p, "failed": f} for g, (p, f) in self.counts.items()},
            "failures": self.failures,
        }


def _pair_checks(res: VerifyResult, catalog: Catalog, n_max: int):
    for pid in sorted(catalog.pairs):
        pair = catalog.pairs[pid]
        for s in (pair.X, pair.S):
            bad = check_identities(s)
            res.record("pair identities", not bad, pair=pid, surface=s.label, detail=bad)
        ok_rel = values_equal(pair.X.K2, 2 * pair.S.K2) and values_equal(pair.X.q, pair.genus - 1) \
            and values_equal(pair.S.q, 0)
        res.record("pair relations", ok_rel, pair=pid)
        try:
            S, _ = involution_quotient(pair.X, pair.iota_fixed_points * LinForm.var(pair.X.param), 0)
            ok = all(values_equal(getattr(S, f), getattr(pair.S, f)) for f in ("q", "p_g", "K2", "chi"))
            res.record("double cover consistency", ok, pair=pid, expected=str(pair.S.p_g), actual=str(S.p_g))
        except ValueError as exc:
            res.record("double cover consistency", False, pair=pid, error=str(exc))
        for s in (pair.X, pair.S):
            g = check_geography(s, True, floor=pair.min_n)
            res.record("geography (pairs)", g.ok, pair=pid, surface=s.label,
                       failed=[c.name for c in g.failures()])
    pair = catalog.pairs.get("I")
    if pair is not None:
        for n in range(pair.min_n, n_max + 1):
            want = evaluate(pair.X.p_g, n)
            got = member_pg(PAIR_I_ADJOINT, ABELIAN_CANONICAL, n)
            res.record("p_g(X) from Kunneth (pair I)", got == want, n=n, expected=want, actual=got)


def _example2_deduction(res: VerifyResult):
    V, Z = V_EXAMPLE2["V"], V_EXAMPLE2["Z"]
    total, beta_min = V_EXAMPLE2["total"], V_EXAMPLE2["beta_min"]
    want = [FixedPointProfile(4, 10)]
    by_bound = solve_fixed_point_profile(V.K2, V.chi, total, beta_min=beta_min)
    by_nonneg = solve_fixed_point_profile(V.K2, V.chi, total, require_K2_Y_nonneg=True)
    res.record("solver uniqueness", by_bound == want, route="beta_min", actual=[str(p) for p in by_bound])
    res.record("solver uniqueness", by_nonneg == want, route="K2_Y>=0", actual=[str(p) for p in by_nonneg])
    try:
        got = cyclic3_quotient(V, want[0], 0)
        ok = all(values_equal(getattr(got, f), getattr(Z, f)) for f in ("q", "p_g", "K2", "chi"))
        res.record("V/Z3 replay", ok, actual=got.to_json())
    except ValueError as exc:
        res.record("V/Z3 replay", False, error=str(exc))
    # weights of g_0..g_4 are not known: every assignment must cover
    for w in itertools.product(range(3), repeat=5):
        for k in (1, 2):
            ok = coverage_check(WeightConfig(w, 1, 2, 3 * k))
            res.record("example 2 coverage", ok, weights=list(w), k=k)


def verify(k_max: int = 50, catalog: Catalog = DEFAULT_CATALOG) -> VerifyResult:
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    res = VerifyResult()
    _pair_checks(res, catalog, max(50, 3 * k_max))
    _example2_deduction(res)
    for ex_id in sorted(catalog.examples):
        try:
            sym = symbolic_pipeline(ex_id, catalog=catalog)
        except PipelineError as exc:
            res.record("symbolic pipeline", False, example=ex_id, error=str(exc))
            sym = None
        if sym is not None:
            for c in sym.checks:
                res.record("symbolic pipeline", c.passed, example=ex_id, check=c.name,
                           expected=str(c.expected), actual=str(c.actual))
            for g in sym.geography:
                res.record("geography (symbolic)", g.ok, example=ex_id, surface=g.label,
                           failed=[c.name for c in g.failures()])
        for k in range(1, k_max + 1):
            try:
                rep = run_pipeline(ex_id, k, catalog=catalog)
            except PipelineError as exc:
                res.record("numeric sweep", False, example=ex_id, k=k, error=str(exc))
                continue
            res.record("numeric sweep", rep.ok, example=ex_id, k=k, failed=rep.failures())
            if sym is None:
                continue
            mismatched = [
                f"{name}.{f}"
                for name, s in rep.surfaces().items()
                for f in ("q", "p_g", "K2", "chi", "e")
                if evaluate(getattr(sym.surfaces()[name], f), k) != getattr(s, f)
            ]
            if evaluate(sym.sigma_locus.a1_count, k) != rep.sigma_locus.a1_count:
                mismatched.append("Sigma.A1")
            res.record("numeric/symbolic agreement", not mismatched, example=ex_id, k=k,
                       fields=mismatched)
    return res
