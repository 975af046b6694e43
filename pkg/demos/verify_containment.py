"""Random check of the two containment claims.

Draws triangles uniformly over the side-length space and over the angle
space and reports the worst margins.  A margin near zero means the sample came
close to the region's boundary, which happens for nearly collinear triangles.
"""

import time

from trimedian import MedianKind
from trimedian.bounds import verify_bounds

for measure in ("nabla", "angles"):
    t0 = time.perf_counter()
    rep = verify_bounds(5000, seed=1, measure=measure)
    print(f"{measure:>6}: {rep.n_samples} samples in {time.perf_counter() - t0:.1f} s")
    print(f"        violations m1 {rep.m1_violations}, m2 {rep.m2_violations}, "
          f"solver failures {rep.solver_failures}")
    print(f"        worst m1 margin {rep.worst_m1_margin:.3e} at sides {rep.worst_m1_sides}")
    print(f"        worst m2 margin {rep.worst_m2_margin:.3e} at sides {rep.worst_m2_sides}")

# the checker itself must notice a point outside the region
bad = verify_bounds(3, seed=1, override={MedianKind.M1: (0.6, 0.2, 0.2)})
print("negative control, m1 violations:", bad.m1_violations)
