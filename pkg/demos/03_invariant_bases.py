# Invariant monomial bases x0^a x1^(d-a) f_i under a Z/3 action.
#
# The generator pulls f_i back to omega^w_i f_i and x0, x1 to omega^u0 x0,
# omega^u1 x1; a monomial is invariant when the total weight is 0 mod 3.

from canonical_covers import (
    LinForm,
    WeightConfig,
    coverage_check,
    eigenspace_dimensions,
    invariant_monomial_basis,
    symbolic_invariant_dimension,
)
from canonical_covers.sections import format_monomial

k = LinForm.var("k")

# Example 1: four sections of weights 0, 0, 2, 1; x0, x1 of weights 1, 2.
cfg = WeightConfig((0, 0, 2, 1), 1, 2, degree=6)
for m in invariant_monomial_basis(cfg):
    print(format_monomial(m, cfg.degree))
print("dimension in k:", symbolic_invariant_dimension((0, 0, 2, 1), 1, 2, 3 * k))
print("adjoint system in k:", symbolic_invariant_dimension((0, 0, 2, 1), 1, 2, 3 * k - 2))
print("character spaces at k=1:", eigenspace_dimensions(cfg.with_degree(3)))

# Example 3 uses x0, x1 of weights 2, 1.
print("example 3:", symbolic_invariant_dimension((0, 0, 2), 2, 1, 3 * k))

# Example 2: the weights of the five sections of 2K_W are not known, but once
# the degree is at least 2 every section shows up whatever its weight.
import itertools

print(all(coverage_check(WeightConfig(w, 1, 2, 3)) for w in itertools.product(range(3), repeat=5)))
