"""The three medians of one triangle.

Takes the triangle with sides 9, 7, 5, finds its vertex, perimeter and area
medians and checks where they land relative to the two containment regions.
"""

from trimedian import MedianKind, median_point, quarter_homothety, triangle_from_sides, to_barycentric
from trimedian.bounds import in_hyperbolic_triangle, in_quarter_triangle
from trimedian.solvers import perimeter_objective
from trimedian.area import area_integral

t = triangle_from_sides((9.0, 7.0, 5.0))
print("vertices", [tuple(round(c, 6) for c in v) for v in t.vertices])

for kind in MedianKind:
    m = median_point(t, kind)
    l = to_barycentric(t, m)
    print(f"{kind.value}: point ({m.x:.9f}, {m.y:.9f})  barycentric "
          f"({l[0]:.6f}, {l[1]:.6f}, {l[2]:.6f})")

# m1 is inside the quarter-size copy of t, m2 inside the curved triangle
m1 = to_barycentric(t, median_point(t, MedianKind.M1))
m2 = to_barycentric(t, median_point(t, MedianKind.M2))
print("m1 in quarter triangle:", in_quarter_triangle(m1))
print("m2 in hyperbolic triangle:", in_hyperbolic_triangle(m2))
print("quarter triangle vertices", [tuple(round(c, 6) for c in v)
                                    for v in quarter_homothety(t).vertices])

# the objectives themselves, at the centroid and at the minimisers
g = t.centroid
print("perimeter objective: centroid %.9f, m1 %.9f"
      % (perimeter_objective(t, g), perimeter_objective(t, median_point(t, MedianKind.M1))))
print("area objective:      centroid %.9f, m2 %.9f"
      % (area_integral(t, g), area_integral(t, median_point(t, MedianKind.M2))))
