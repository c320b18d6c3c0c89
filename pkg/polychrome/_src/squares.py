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
"""Bottomless and topless rectangles as squares.

Give every witness rectangle of `H(V, {BL, TL}, m)` a bottom (respectively top)
side just beyond the lowest (highest) point. Stretching the plane horizontally
until each of these rectangles is wider than tall keeps every x- and y-order,
hence every hyperedge, and lets each rectangle grow into a square on its free
side without capturing anything new.
"""

from typing import Dict, Tuple

from absl import logging
import chex
from polychrome._src import base
from polychrome._src import geometry
from polychrome._src import ranges

Family = ranges.Family
Rational = geometry.Rational

STRETCHED = (Family.BL, Family.TL)


@chex.dataclass(frozen=True, mappable_dataclass=False)
class StretchResult:
  """A horizontally stretched point set and one square per hyperedge.

  Attributes:
    ps: the stretched point set, with the original ids.
    factor: the x scale factor.
    squares: for each `(family, hyperedge)` of `H(ps, {BL, TL}, m)`, a square
      capturing exactly that hyperedge in the stretched set.
  """
  ps: geometry.PointSet
  factor: Rational
  squares: Dict[Tuple[Family, base.Hyperedge], ranges.Range]


def _stretch(ps: geometry.PointSet, factor: Rational) -> geometry.PointSet:
  return geometry.from_points(
      geometry.Point(id=p.id, x=factor * p.x, y=p.y) for p in ps.points)


def _boxes(ps: geometry.PointSet, m: int):
  """Yields `(family, edge, witness, width, height)` per closed witness."""
  if not ps.points:
    return
  floor = min(p.y for p in ps.points) - 1
  ceiling = max(p.y for p in ps.points) + 1
  for family in STRETCHED:
    for edge, r in ranges.enumerate_with_witnesses(ps, family, m).items():
      a1, a2, b = r.params
      height = b - floor if family is Family.BL else ceiling - b
      yield family, edge, r, a2 - a1, height


def stretch_to_squares(ps: geometry.PointSet, m: int) -> StretchResult:
  """Turns the bottomless and topless witnesses of `H(ps, ., m)` into squares.

  The factor is 1 when every closed witness is already wider than tall, and
  `1 + max(height / width)` otherwise, raised by whole units while the
  stretched points share an x + y value.

  Args:
    ps: the point set.
    m: uniformity.

  Returns:
    the stretched set and the squares.
  """
  if m < 1:
    raise ValueError(f'Uniformity must be positive, got {m}.')
  boxes = list(_boxes(ps, m))
  factor = Rational(1)
  if any(width <= height for *_, width, height in boxes):
    factor += max(height / width for *_, width, height in boxes)
  while not geometry.check_general_position(
      [p._replace(x=factor * p.x) for p in ps.points]).ok:
    factor += 1
  stretched = _stretch(ps, factor)
  logging.info('[stretch_to_squares] n: %d, m: %d, edges: %d, factor: %s',
               len(ps), m, len(boxes), factor)

  squares = {}
  for family, edge, r, _, _ in boxes:
    a1, a2, b = r.params
    side = factor * (a2 - a1)
    corner = b - side if family is Family.BL else b
    squares[(family, edge)] = ranges.Range(
        family=Family.SQ, params=(factor * a1, corner, side))
  return StretchResult(ps=stretched, factor=factor, squares=squares)
