"""Deterministic file writers: CSV point clouds, JSON reports, hand-built SVG."""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from . import __version__

MAP_COLUMNS = ("src_x", "src_y", "a", "b", "c", "la", "lb", "lc",
               "img_x", "img_y", "boundary_flag", "status")


def fmt(v) -> str:
    """12 significant digits; empty for missing values."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, int):
        return str(v)
    return f"{v:.12g}"


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """RFC 4180 text (CRLF line ends); numbers go through ``fmt``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    for row in rows:
        w.writerow([v if isinstance(v, str) else fmt(v) for v in row])
    return buf.getvalue()


def write_atomic(path, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


@dataclass
class RunManifest:
    command: str
    parameters: dict = field(default_factory=dict)
    tool_version: str = __version__
    seed: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


def json_text(obj) -> str:
    def clean(o):
        if isinstance(o, float):
            if math.isinf(o) or math.isnan(o):
                return None
            return float(fmt(o))
        if isinstance(o, dict):
            return {str(k): clean(v) for k, v in o.items()}
        if isinstance(o, (list, tuple)):
            return [clean(v) for v in o]
        return o

    return json.dumps(clean(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def map_rows(samples, include_boundary: bool = True):
    for s in samples:
        if s.boundary and not include_boundary:
            continue
        med = s.median or (None, None, None)
        img = s.image or (None, None)
        yield (s.source.coords.x, s.source.coords.y, *s.sides, *med, *img,
               bool(s.boundary), s.status)


class SvgCanvas:
    """Minimal SVG 1.1 emitter with a world-to-pixel transform (y up)."""

    def __init__(self, xmin, xmax, ymin, ymax, width=800, margin=20, yscale=1.0):
        self.xmin, self.ymax = xmin, ymax
        self.yscale = yscale
        span_x = xmax - xmin
        span_y = (ymax - ymin) * yscale
        self.k = (width - 2 * margin) / max(span_x, span_y)
        self.margin = margin
        self.width = width
        self.height = int(math.ceil(span_y * self.k + 2 * margin))
        self.items: list[str] = []

    def px(self, p):
        return (self.margin + (p[0] - self.xmin) * self.k,
                self.margin + (self.ymax - p[1]) * self.yscale * self.k)

    def polygon(self, pts, stroke="black", fill="none", width=1.0, closed=True, dash=None):
        coords = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in map(self.px, pts))
        tag = "polygon" if closed else "polyline"
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.items.append(f'<{tag} points="{coords}" fill="{fill}" stroke="{stroke}" '
                          f'stroke-width="{fmt(width)}"{extra}/>')

    def circle(self, p, r=1.5, fill="black", stroke=None):
        x, y = self.px(p)
        extra = f' stroke="{stroke}"' if stroke else ""
        self.items.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="{fmt(r)}" fill="{fill}"{extra}/>')

    def text(self, p, label, size=14, dx=4, dy=-4):
        x, y = self.px(p)
        label = label.replace("&", "&amp;").replace("<", "&lt;")
        self.items.append(f'<text x="{fmt(x + dx)}" y="{fmt(y + dy)}" font-size="{size}" '
                          f'font-family="sans-serif">{label}</text>')

    def render(self, comment: str = "") -> str:
        head = ('<?xml version="1.0" encoding="UTF-8"?>\n'
                f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{self.width}" '
                f'height="{self.height}" viewBox="0 0 {self.width} {self.height}">\n')
        if comment:
            head += "<!-- " + comment.replace("--", "- -") + " -->\n"
        body = '<rect width="100%" height="100%" fill="white"/>\n' + "\n".join(self.items)
        return head + body + "\n</svg>\n"


def rgb(r: float, g: float, b: float) -> str:
    def c(v):
        return max(0, min(255, int(round(255 * v))))

    return f"#{c(r):02x}{c(g):02x}{c(b):02x}"
