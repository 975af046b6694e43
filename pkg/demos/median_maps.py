"""Median maps over the space of unit-perimeter triangles.

Samples a triangular lattice of side triples, computes each median and writes
the image points as SVG scatters next to this script.  Boundary samples of the
perimeter and area maps use the exact collinear limits.
"""

from collections import Counter
from pathlib import Path

from trimedian import MedianKind
from trimedian.bounds import in_hyperbolic_triangle, in_quarter_triangle
from trimedian.figures import map_svg
from trimedian.space import median_map, sample_nabla

out = Path(__file__).with_suffix("")
out.mkdir(exist_ok=True)
points = sample_nabla(40)
print(len(points), "lattice points")

for kind in MedianKind:
    samples = median_map(kind, points)
    print(kind.value, dict(Counter(s.status for s in samples)))
    meds = [s.median for s in samples if s.median is not None]
    if kind is MedianKind.M1:
        print("  smallest coordinate", min(min(l) for l in meds))
        print("  all in quarter triangle", all(in_quarter_triangle(l)[0] for l in meds))
    if kind is MedianKind.M2:
        print("  all in hyperbolic triangle", all(in_hyperbolic_triangle(l)[0] for l in meds))
    (out / f"map_{kind.value}.svg").write_text(map_svg(kind, samples))
print("wrote SVGs to", out)
