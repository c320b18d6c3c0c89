# Copyright 2026 The Polychrome Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""SVG 1.1 figures of point sets, colorings and ranges.

Coordinates are converted to floats only here, for drawing. Ranges are drawn
as translucent overlays clipped to the bounding box of the points grown by a
10% margin on every side, so unbounded ranges stay finite.
"""

from typing import Iterable, List, Optional, Tuple
import xml.etree.ElementTree as ET

from polychrome._src import geometry
from polychrome._src import hypergraph as hg
from polychrome._src import ranges

Family = ranges.Family
Rational = geometry.Rational
Vertex = Tuple[Rational, Rational]

MARGIN = Rational(1, 10)
SIZE = 600
POINT_RADIUS = 4
PALETTE = ('#1f77b4', '#d62728', '#2ca02c', '#ff7f0e', '#9467bd', '#8c564b',
           '#e377c2', '#7f7f7f', '#bcbd22', '#17becf')
UNCOLORED = '#000000'
RANGE_COLORS = {
    Family.NW: '#1f77b4', Family.NE: '#2ca02c', Family.SW: '#d62728',
    Family.SE: '#9467bd', Family.HS: '#ff7f0e', Family.VS: '#8c564b',
    Family.DS: '#e377c2', Family.BL: '#17becf', Family.TL: '#bcbd22',
    Family.SQ: '#7f7f7f',
}


def color_of(c: int) -> str:
  return PALETTE[(c - 1) % len(PALETTE)]


def bounding_box(
    ps: geometry.PointSet) -> Tuple[Rational, Rational, Rational, Rational]:
  """`(x0, y0, x1, y1)` of the points, grown by `MARGIN` of its span."""
  if not ps.points:
    return Rational(-1), Rational(-1), Rational(1), Rational(1)
  xs = [p.x for p in ps.points]
  ys = [p.y for p in ps.points]
  dx = (max(xs) - min(xs)) * MARGIN or 1
  dy = (max(ys) - min(ys)) * MARGIN or 1
  return min(xs) - dx, min(ys) - dy, max(xs) + dx, max(ys) + dy


def _clip(polygon: List[Vertex], inside, crossing) -> List[Vertex]:
  """One Sutherland-Hodgman step against a half-plane."""
  out = []
  for i, current in enumerate(polygon):
    previous = polygon[i - 1]
    if inside(current):
      if not inside(previous):
        out.append(crossing(previous, current))
      out.append(current)
    elif inside(previous):
      out.append(crossing(previous, current))
  return out


def _clip_sum(polygon, bound: Rational, below: bool) -> List[Vertex]:
  """Keeps the part with `x + y <= bound` (or `>=` when `below` is False)."""

  def inside(v):
    return v[0] + v[1] <= bound if below else v[0] + v[1] >= bound

  def crossing(u, v):
    t = (bound - u[0] - u[1]) / (v[0] + v[1] - u[0] - u[1])
    return u[0] + t * (v[0] - u[0]), u[1] + t * (v[1] - u[1])

  return _clip(polygon, inside, crossing)


def region(r: ranges.Range, box) -> List[Vertex]:
  """The polygon `r` covers inside `box`; empty if they do not meet."""
  x0, y0, x1, y1 = box
  f = r.family
  if f is Family.DS:
    polygon = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    polygon = _clip_sum(polygon, r.params[0], below=False)
    return _clip_sum(polygon, r.params[1], below=True) if polygon else []
  if f in ranges.QUADRANTS:
    a, b = r.params
    left, right = (x0, a) if f in (Family.NW, Family.SW) else (a, x1)
    low, high = (b, y1) if f in (Family.NW, Family.NE) else (y0, b)
  elif f is Family.HS:
    left, right, (low, high) = x0, x1, r.params
  elif f is Family.VS:
    (left, right), low, high = r.params, y0, y1
  elif f is Family.SQ:
    a, b, s = r.params
    left, right, low, high = a, a + s, b, b + s
  else:
    left, right, b = r.params
    low, high = (y0, b) if f is Family.BL else (b, y1)
  left, right = max(left, x0), min(right, x1)
  low, high = max(low, y0), min(high, y1)
  if left >= right or low >= high:
    return []
  return [(left, low), (right, low), (right, high), (left, high)]


def _fmt(value: float) -> str:
  return f'{value:.3f}'


class _Canvas:
  """Maps plane coordinates into a `SIZE` x `SIZE` drawing, y pointing up."""

  def __init__(self, box, size: int):
    self.x0, self.y0, self.x1, self.y1 = box
    self.size = size

  def point(self, x: Rational, y: Rational) -> Tuple[str, str]:
    u = (x - self.x0) / (self.x1 - self.x0) * self.size
    v = (self.y1 - y) / (self.y1 - self.y0) * self.size
    return _fmt(float(u)), _fmt(float(v))


def render(
    ps: geometry.PointSet,
    coloring: Optional[hg.Coloring] = None,
    rs: Iterable[ranges.Range] = (),
    title: Optional[str] = None,
    labels: bool = True,
    size: int = SIZE) -> str:
  """Draws `ps`, optionally colored, under translucent range overlays.

  Args:
    ps: the point set.
    coloring: colors by point id; points are black without one.
    rs: ranges to overlay, in drawing order.
    title: an optional caption.
    labels: whether to write the id next to each point.
    size: width and height of the drawing, in pixels.

  Returns:
    the SVG document.
  """
  box = bounding_box(ps)
  canvas = _Canvas(box, size)
  legend_height = 20 if coloring is not None else 0
  root = ET.Element('svg', {
      'xmlns': 'http://www.w3.org/2000/svg',
      'version': '1.1',
      'width': str(size),
      'height': str(size + legend_height),
      'viewBox': f'0 0 {size} {size + legend_height}',
  })
  if title:
    ET.SubElement(root, 'title').text = title
  ET.SubElement(root, 'rect', {
      'x': '0', 'y': '0', 'width': str(size), 'height': str(size),
      'fill': '#ffffff', 'stroke': '#cccccc'})

  overlays = ET.SubElement(root, 'g', {'id': 'ranges'})
  for r in rs:
    polygon = region(r, box)
    if not polygon:
      continue
    color = RANGE_COLORS[r.family]
    ET.SubElement(overlays, 'polygon', {
        'class': f'range-{r.family.value}',
        'points': ' '.join(','.join(canvas.point(*v)) for v in polygon),
        'fill': color, 'fill-opacity': '0.15',
        'stroke': color, 'stroke-opacity': '0.6'})

  points = ET.SubElement(root, 'g', {'id': 'points'})
  for p in ps.points:
    cx, cy = canvas.point(p.x, p.y)
    fill = UNCOLORED
    if coloring is not None:
      fill = color_of(coloring.colors[p.id])
    circle = ET.SubElement(points, 'circle', {
        'cx': cx, 'cy': cy, 'r': str(POINT_RADIUS), 'fill': fill})
    ET.SubElement(circle, 'title').text = f'{p.id}: ({p.x}, {p.y})'
    if labels:
      ET.SubElement(points, 'text', {
          'x': _fmt(float(cx) + POINT_RADIUS + 1), 'y': cy,
          'font-size': '10'}).text = str(p.id)

  if coloring is not None:
    _legend(root, coloring.k, size)
  return ET.tostring(root, encoding='unicode') + '\n'


def _legend(root: ET.Element, k: int, size: int):
  legend = ET.SubElement(root, 'g', {'id': 'legend'})
  for c in range(1, k + 1):
    x = 10 + (c - 1) * 60
    ET.SubElement(legend, 'rect', {
        'x': str(x), 'y': str(size + 5), 'width': '10', 'height': '10',
        'fill': color_of(c)})
    ET.SubElement(legend, 'text', {
        'x': str(x + 14), 'y': str(size + 14),
        'font-size': '10'}).text = f'color {c}'


def save(path: str, document: str):
  with open(path, 'w') as f:
    f.write(document)
