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
"""Range families, exact capture predicates and hyperedge enumeration.

A subset `E` of a point set `V` is a hyperedge of `H(V, R)` whenever some range
of the family `R` captures exactly `E`. Enumeration of the `m`-uniform part
uses one sweep per family: windows of a coordinate order for strips, the top
`m` points of each x-prefix for quadrants, the bottom `m` points of each
x-window for bottomless rectangles. The remaining orientations are obtained by
reflecting the point set.
"""

import bisect
import enum
from typing import Callable, Dict, Iterable, List, Sequence, Tuple, Union

from absl import logging
import chex
from polychrome._src import base
from polychrome._src import geometry

Hyperedge = base.Hyperedge
Rational = geometry.Rational


class Family(enum.Enum):
  NW = 'nw'
  NE = 'ne'
  SW = 'sw'
  SE = 'se'
  HS = 'hs'  # horizontal strip, a1 <= y <= a2
  VS = 'vs'  # vertical strip, a1 <= x <= a2
  DS = 'ds'  # diagonal strip, a1 <= x + y <= a2
  BL = 'bl'  # bottomless rectangle, a1 <= x <= a2, y <= b
  TL = 'tl'  # topless rectangle, a1 <= x <= a2, y >= b
  SQ = 'sq'  # square, a <= x <= a + s, b <= y <= b + s


QUADRANTS = (Family.NW, Family.NE, Family.SW, Family.SE)
STRIPS = (Family.HS, Family.VS, Family.DS)

_NUM_PARAMS = {
    Family.NW: 2, Family.NE: 2, Family.SW: 2, Family.SE: 2,
    Family.HS: 2, Family.VS: 2, Family.DS: 2,
    Family.BL: 3, Family.TL: 3, Family.SQ: 3,
}
_STRIP_KEYS = {
    Family.HS: geometry.OrderKey.Y,
    Family.VS: geometry.OrderKey.X,
    Family.DS: geometry.OrderKey.SUM,
}
# Reflection taking the family to north-west quadrants (or BL for TL).
_TO_CANONICAL = {
    Family.NE: geometry.Reflection.HORIZONTAL,
    Family.SW: geometry.Reflection.VERTICAL,
    Family.SE: geometry.Reflection.BOTH,
    Family.TL: geometry.Reflection.VERTICAL,
}


class NotAHyperedgeError(ValueError):
  """Raised when a vertex set is not captured by any range of a family."""


def _key_fn(key: geometry.OrderKey) -> Callable[[geometry.Point], Rational]:
  if key is geometry.OrderKey.X:
    return lambda p: p.x
  if key is geometry.OrderKey.Y:
    return lambda p: p.y
  return lambda p: p.x + p.y


@chex.dataclass(frozen=True, mappable_dataclass=False)
class Range:
  """A member of a range family.

  Attributes:
    family: the family tag.
    params: quadrants `(a, b)` for the apex; strips `(a1, a2)` on the strip's
      key; bottomless and topless rectangles `(a1, a2, b)`; squares
      `(a, b, s)` for the lower-left corner and side.
  """
  family: Family
  params: Tuple[Rational, ...]

  def __post_init__(self):
    if len(self.params) != _NUM_PARAMS[self.family]:
      raise ValueError(
          f'{self.family.name} ranges take {_NUM_PARAMS[self.family]} '
          f'parameters, got {self.params}.')
    if self.family in STRIPS + (Family.BL, Family.TL):
      if not self.params[0] < self.params[1]:
        raise ValueError(f'Expected a1 < a2, got {self.params}.')
    if self.family is Family.SQ and not self.params[2] > 0:
      raise ValueError(f'Square side must be positive, got {self.params[2]}.')

  def contains(self, p: geometry.Point) -> bool:
    """Closed capture predicate, evaluated exactly."""
    f = self.family
    if f in QUADRANTS:
      a, b = self.params
      x_ok = p.x <= a if f in (Family.NW, Family.SW) else p.x >= a
      y_ok = p.y >= b if f in (Family.NW, Family.NE) else p.y <= b
      return x_ok and y_ok
    if f in STRIPS:
      a1, a2 = self.params
      return a1 <= _key_fn(_STRIP_KEYS[f])(p) <= a2
    if f is Family.SQ:
      a, b, s = self.params
      return a <= p.x <= a + s and b <= p.y <= b + s
    a1, a2, b = self.params
    if not a1 <= p.x <= a2:
      return False
    return p.y <= b if f is Family.BL else p.y >= b


def make_range(family: Union[Family, str],
               *params: geometry.Coordinate) -> Range:
  """Builds a range from a family tag and exact parameters."""
  return Range(
      family=Family(family),
      params=tuple(geometry.as_rational(p) for p in params))


def parse_families(text: Union[str, Iterable[str]]) -> Tuple[Family, ...]:
  """Parses `'nw,hs'` (or a list of tags) into a sorted tuple of families."""
  if isinstance(text, str):
    text = [t for t in text.split(',') if t.strip()]
  try:
    families = {Family(t.strip().lower()) for t in text}
  except ValueError as e:
    raise ValueError(f'Unknown range family in {text!r}.') from e
  return tuple(sorted(families, key=lambda f: f.value))


def canonical_frame(
    ps: geometry.PointSet, family: Family) -> geometry.PointSet:
  """Reflects `ps` so that `family` becomes NW (quadrants) or BL (TL)."""
  family = Family(family)
  if family in _TO_CANONICAL:
    return geometry.reflect(ps, _TO_CANONICAL[family])
  return ps


def captures(r: Range, ps: geometry.PointSet) -> Hyperedge:
  """Returns the sorted ids of the points captured by `r`."""
  return tuple(p.id for p in ps.points if r.contains(p))


def _windows(order: Sequence[int], m: int) -> List[Hyperedge]:
  return [tuple(sorted(order[i:i + m])) for i in range(len(order) - m + 1)]


def north_west_quadrants(ps: geometry.PointSet, m: int) -> List[Hyperedge]:
  """Returns the canonical sequence of north-west quadrant hyperedges.

  The x-prefixes of `ps` are swept from the full set downwards, removing the
  rightmost point at each step; each prefix contributes its `m` topmost
  points. Consecutive repetitions are dropped, and a set that leaves the
  sequence never reappears, so the result lists every north-west hyperedge
  once, ordered by decreasing apex x.

  Args:
    ps: the point set.
    m: uniformity.

  Returns:
    the hyperedges `Q_1, ..., Q_alpha`.
  """
  if m < 1:
    raise ValueError(f'Uniformity must be positive, got {m}.')
  by_y = sorted((ps.y(v), v) for v in ps.by_x)
  quadrants = []
  for j in range(len(ps), m - 1, -1):
    edge = tuple(sorted(v for _, v in by_y[-m:]))
    if not quadrants or quadrants[-1] != edge:
      quadrants.append(edge)
    rightmost = ps.by_x[j - 1]
    del by_y[bisect.bisect_left(by_y, (ps.y(rightmost), rightmost))]
  return quadrants


def _bottomless(ps: geometry.PointSet, m: int) -> List[Hyperedge]:
  edges = set()
  by_x = ps.by_x
  for i in range(len(by_x)):
    window = []
    for j in range(i, len(by_x)):
      bisect.insort(window, (ps.y(by_x[j]), by_x[j]))
      if len(window) >= m:
        edges.add(tuple(sorted(v for _, v in window[:m])))
  return sorted(edges)


def enumerate_hyperedges(
    ps: geometry.PointSet, family: Family, m: int) -> Tuple[Hyperedge, ...]:
  """Enumerates `H(ps, family, m)`.

  Args:
    ps: the point set.
    family: any family except squares.
    m: uniformity; `m > len(ps)` yields no hyperedges.

  Returns:
    the hyperedges of size exactly `m`, sorted lexicographically.
  """
  family = Family(family)
  if m < 1:
    raise ValueError(f'Uniformity must be positive, got {m}.')
  if family is Family.SQ:
    raise ValueError('Squares have a capture predicate but no enumeration.')
  if m > len(ps):
    return ()
  if family in STRIPS:
    edges = _windows(geometry.order_by(ps, _STRIP_KEYS[family]), m)
  elif family in QUADRANTS:
    edges = north_west_quadrants(canonical_frame(ps, family), m)
  else:
    edges = _bottomless(canonical_frame(ps, family), m)
  return tuple(sorted(set(edges)))


def enumerate_union(
    ps: geometry.PointSet,
    families: Iterable[Family],
    m: int) -> Tuple[Hyperedge, ...]:
  """Enumerates the union of `H(ps, family, m)` over `families`."""
  families = parse_families(Family(f).value for f in families)
  edges = set()
  for family in families:
    edges.update(enumerate_hyperedges(ps, family, m))
  logging.info('[enumerate_union] families: %s, m: %d, edges: %d',
               ','.join(f.value for f in families), m, len(edges))
  return tuple(sorted(edges))


def _sorted_values(ps, key: geometry.OrderKey) -> List[Rational]:
  fn = _key_fn(key)
  return [fn(ps.point(v)) for v in geometry.order_by(ps, key)]


def _below(values: Sequence[Rational], v: Rational) -> Rational:
  """Midpoint between `v` and the next smaller value, or `v - 1`."""
  i = bisect.bisect_left(values, v)
  return (values[i - 1] + v) / 2 if i > 0 else v - 1


def _above(values: Sequence[Rational], v: Rational) -> Rational:
  """Midpoint between `v` and the next larger value, or `v + 1`."""
  i = bisect.bisect_right(values, v)
  return (values[i] + v) / 2 if i < len(values) else v + 1


def _tightest(ps: geometry.PointSet, family: Family, edge: Hyperedge) -> Range:
  """The smallest canonical range of `family` containing every id of `edge`."""
  points = [ps.point(v) for v in edge]
  if family in STRIPS:
    key = _STRIP_KEYS[family]
    fn = _key_fn(key)
    values = _sorted_values(ps, key)
    return Range(family=family, params=(
        _below(values, min(fn(p) for p in points)),
        _above(values, max(fn(p) for p in points))))
  xs = _sorted_values(ps, geometry.OrderKey.X)
  ys = _sorted_values(ps, geometry.OrderKey.Y)
  lo_x = _below(xs, min(p.x for p in points))
  hi_x = _above(xs, max(p.x for p in points))
  lo_y = _below(ys, min(p.y for p in points))
  hi_y = _above(ys, max(p.y for p in points))
  params = {
      Family.NW: (hi_x, lo_y),
      Family.NE: (lo_x, lo_y),
      Family.SW: (hi_x, hi_y),
      Family.SE: (lo_x, hi_y),
      Family.BL: (lo_x, hi_x, hi_y),
      Family.TL: (lo_x, hi_x, lo_y),
  }[family]
  return Range(family=family, params=params)


def witness(
    ps: geometry.PointSet, family: Family, edge: Iterable[int]) -> Range:
  """Returns the canonical range of `family` capturing exactly `edge`.

  Each boundary sits at the midpoint between the extreme coordinate of `edge`
  and the neighbouring coordinate of `ps`, or one unit beyond the outermost
  point.

  Args:
    ps: the point set.
    family: any family except squares.
    edge: the vertex ids.

  Returns:
    the witness range.

  Raises:
    NotAHyperedgeError: if no range of `family` captures exactly `edge`.
  """
  family = Family(family)
  edge = base.canonical_edge(edge)
  if family is Family.SQ:
    raise ValueError('Square witnesses come from `stretch_to_squares`.')
  if not edge:
    raise NotAHyperedgeError('The empty set is not a hyperedge.')
  r = _tightest(ps, family, edge)
  if captures(r, ps) != edge:
    raise NotAHyperedgeError(
        f'{list(edge)} is not a hyperedge of the {family.name} family.')
  return r


def is_captured(
    ps: geometry.PointSet, family: Family, edge: Iterable[int]) -> bool:
  """Whether some range of `family` captures exactly `edge`."""
  try:
    witness(ps, family, edge)
  except NotAHyperedgeError:
    return False
  return True


def enumerate_with_witnesses(
    ps: geometry.PointSet, family: Family, m: int) -> Dict[Hyperedge, Range]:
  """Maps every hyperedge of `H(ps, family, m)` to its canonical witness."""
  return {e: witness(ps, family, e)
          for e in enumerate_hyperedges(ps, family, m)}


def _drop_order(
    ps: geometry.PointSet, family: Family, edge: Hyperedge) -> List[int]:
  """Vertices of `edge` whose removal keeps it captured, most likely first."""
  by_x = sorted(edge, key=ps.x)
  by_y = sorted(edge, key=ps.y)
  if family in STRIPS:
    fn = _key_fn(_STRIP_KEYS[family])
    ordered = sorted(edge, key=lambda v: fn(ps.point(v)))
    preferred = [ordered[0], ordered[-1]]
  elif family in (Family.NW, Family.NE):
    preferred = [by_y[0]]
  elif family in (Family.SW, Family.SE):
    preferred = [by_y[-1]]
  else:
    preferred = [by_x[0], by_x[-1]]
  return preferred + [v for v in edge if v not in preferred]


def shrink_witness(
    ps: geometry.PointSet, family: Family, edge: Iterable[int]) -> Hyperedge:
  """Returns a captured subset of `edge` with one vertex less.

  Args:
    ps: the point set.
    family: any family except squares.
    edge: a hyperedge of `family` with at least two vertices.

  Returns:
    a hyperedge of `H(ps, family, |edge| - 1)` contained in `edge`.

  Raises:
    NotAHyperedgeError: if `edge` is not captured by `family`.
  """
  family = Family(family)
  edge = base.canonical_edge(edge)
  witness(ps, family, edge)
  if len(edge) < 2:
    raise ValueError(f'Cannot shrink a hyperedge of size {len(edge)}.')
  for v in _drop_order(ps, family, edge):
    smaller = tuple(u for u in edge if u != v)
    if is_captured(ps, family, smaller):
      return smaller
  raise ValueError(f'{family.name} is not shrinkable at {list(edge)}.')
