"""Medians of a triangle as it collapses onto a line.

Lengthens the short side of the collinear triangle (0.5, 0.3, 0.2) by eps and
follows the perimeter and area medians as eps shrinks.  The exact limits are
the midpoint of the longest side and the point at distance sqrt(ab/2) from the
vertex shared by the two longest sides.  The distances settle quickly; the
barycentric coordinates creep towards their limits only like 1/log(1/eps).
"""

import math

from trimedian.degenerate import limit_convergence_probe, m1_limit_barycentric, m2_limit_barycentric

sides = (0.5, 0.3, 0.2)
print("m1 limit", tuple(round(v, 6) for v in m1_limit_barycentric(sides)))
print("m2 limit", tuple(round(v, 6) for v in m2_limit_barycentric(sides)))

eps = [10.0 ** -k for k in range(2, 9)]
rows = limit_convergence_probe(sides, eps)
print(f"{'eps':>8} {'kind':>4} {'bary err':>10} {'err*ln(1/eps)':>14} {'dist':>9} {'limit':>9}")
for r in rows:
    print(f"{r.epsilon:8.0e} {r.kind.value:>4} {r.error:10.4f} "
          f"{r.error * math.log(1 / r.epsilon):14.4f} {r.vertex_distance:9.6f} "
          f"{r.limit_distance:9.6f}")
