"""Regenerate the triangle figures as SVG files next to this script.

The first shows the 9-7-5 triangle with its three medians, the quarter
triangle (dashed) and the curved triangle.  The second is the thin triangle
(9, 8, 1 + eps) stretched 1000 times vertically, with the bisector of its
smallest angle and the predicted limit positions as open circles.
"""

from pathlib import Path

from trimedian.figures import figure_1, figure_8

out = Path(__file__).with_suffix("")
out.mkdir(exist_ok=True)
(out / "medians_9_7_5.svg").write_text(figure_1())
for eps in (1e-2, 1e-4):
    (out / f"thin_triangle_{eps:.0e}.svg").write_text(figure_8(eps))
print("wrote", sorted(p.name for p in out.iterdir()))
