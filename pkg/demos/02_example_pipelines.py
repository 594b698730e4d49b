# The three series X -> Sigma -> Y -> T, symbolically in k and numerically.
#
# X lives in the series of a generating pair at n = 3k; Sigma = X / involution
# carries the invariants of its resolution S; Y and T resolve the Z/3
# quotients of X and Sigma.

from canonical_covers import pair_invariants, run_pipeline, symbolic_pipeline

X, S = pair_invariants("I")
print("pair I:", "K2_X =", X.K2, " K2_S =", S.K2, " p_g =", X.p_g)

for ex in (1, 2, 3):
    rep = symbolic_pipeline(ex)
    print(f"\nexample {ex}")
    for name, s in rep.surfaces().items():
        print(f"  {name}: q={s.q} p_g={s.p_g} K2={s.K2} chi={s.chi}")
    print("  A1 points on Sigma:", rep.sigma_locus.a1_count)
    print("  p_g(Y) = p_g(T):", rep.Y.p_g == rep.T.p_g)
    print("  checks passed:", sum(c.passed for c in rep.checks), "/", len(rep.checks))

# numeric table for example 1
print("\nk  K2_Y  p_g(Y)  K2_T  p_g(T)")
for k in range(1, 6):
    r = run_pipeline(1, k)
    print(f"{k:<2} {r.Y.K2:<5} {r.Y.p_g:<7} {r.T.K2:<5} {r.T.p_g}")

# a report is plain JSON-serializable data
import json

print(json.dumps(run_pipeline(3, 1).to_json()["surfaces"]["T"]))
