# Invariants of Z/3 quotients with isolated fixed points.
#
# A fixed point whose two tangent characters agree becomes a 1/3(1,1) point
# (alpha), otherwise an A2 point (beta).  The resolved quotient Y satisfies
#     K2_X = 3 K2_Y + alpha,    chi_X = 3 chi_Y - alpha/3 - 2 beta/3.

from canonical_covers import (
    CharacterPair,
    FixedPointProfile,
    classify_fixed_point,
    cyclic3_quotient,
    make_surface,
    solve_fixed_point_profile,
)

print(classify_fixed_point(CharacterPair(1, 2)), classify_fixed_point(CharacterPair(1, 1)))

# The double cover V of the abelian surface: q = p_g = 2, K2 = 4, so chi = 1.
V = make_surface(q=2, p_g=2, K2=4, label="V")
print(V)

# 14 isolated fixed points, at least 10 of them with distinct characters.
# Integrality of the quotient invariants leaves one candidate.
print(solve_fixed_point_profile(V.K2, V.chi, 14, beta_min=10))

# Dropping the bound and asking only for K2_Y >= 0 gives the same answer.
print(solve_fixed_point_profile(V.K2, V.chi, 14, require_K2_Y_nonneg=True))

# Without any side condition there is a second integral solution, alpha = 13.
print(solve_fixed_point_profile(V.K2, V.chi, 14))

Z = cyclic3_quotient(V, FixedPointProfile(4, 10), q_Y=0, label="Z")
print(f"Z: K2={Z.K2} chi={Z.chi} p_g={Z.p_g} q={Z.q}")
