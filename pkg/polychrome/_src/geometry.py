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
"""Exact planar point sets in general position.

All coordinates are `fractions.Fraction` values, so every comparison made by
the capture predicates (including the diagonal key `x + y`) is exact. Points
carry stable integer ids; every downstream artifact refers to ids only.
"""

import collections
import enum
import fractions
import functools
import itertools
from typing import Dict, Iterable, NamedTuple, Sequence, Tuple, Union

from absl import logging
import chex
import jax
import numpy as np

Rational = fractions.Fraction
Coordinate = Union[int, str, fractions.Fraction]

DEFAULT_MAX_ATTEMPTS = 64


class GeneralPositionError(ValueError):
  """Raised when points share an x, a y or an x + y value."""


class Point(NamedTuple):
  id: int
  x: Rational
  y: Rational


class Reflection(enum.Enum):
  HORIZONTAL = 'horizontal'  # x -> -x
  VERTICAL = 'vertical'  # y -> -y
  BOTH = 'both'  # 180 degree rotation


class OrderKey(enum.Enum):
  X = 'x'
  Y = 'y'
  SUM = 'x+y'


IdPair = Tuple[int, int]


@chex.dataclass(frozen=True, mappable_dataclass=False)
class GeneralPositionReport:
  """Violating id pairs per axis; `ok` iff all three lists are empty."""
  same_x: Tuple[IdPair, ...]
  same_y: Tuple[IdPair, ...]
  same_sum: Tuple[IdPair, ...]

  @property
  def ok(self) -> bool:
    return not (self.same_x or self.same_y or self.same_sum)


@chex.dataclass(frozen=True, mappable_dataclass=False)
class PointSet:
  """Points sorted by id, plus their id orders by x, by y and by x + y."""
  points: Tuple[Point, ...]
  by_x: Tuple[int, ...]
  by_y: Tuple[int, ...]
  by_sum: Tuple[int, ...]

  def __len__(self) -> int:
    return len(self.points)

  @functools.cached_property
  def _index(self) -> Dict[int, Point]:
    return {p.id: p for p in self.points}

  @property
  def ids(self) -> Tuple[int, ...]:
    return tuple(p.id for p in self.points)

  def point(self, vertex: int) -> Point:
    return self._index[vertex]

  def x(self, vertex: int) -> Rational:
    return self._index[vertex].x

  def y(self, vertex: int) -> Rational:
    return self._index[vertex].y

  def subset(self, ids: Iterable[int]) -> 'PointSet':
    """Returns the sub point set on `ids`, keeping the original ids."""
    keep = set(ids)
    unknown = keep - set(self._index)
    if unknown:
      raise ValueError(f'Unknown point ids: {sorted(unknown)}.')
    return _build(tuple(p for p in self.points if p.id in keep))

  def is_dense(self) -> bool:
    """Whether the ids are exactly `0..n-1`."""
    return self.ids == tuple(range(len(self.points)))


def as_rational(value: Coordinate) -> Rational:
  """Converts an int, a decimal/fraction string or a Fraction exactly."""
  if isinstance(value, (bool, float)):
    raise ValueError(
        f'Coordinates must be exact (int, str or Fraction), got {value!r}.')
  return fractions.Fraction(value)


def _pairs_with_equal_key(points, key) -> Tuple[IdPair, ...]:
  groups = collections.defaultdict(list)
  for p in points:
    groups[key(p)].append(p.id)
  pairs = []
  for ids in groups.values():
    pairs.extend(itertools.combinations(sorted(ids), 2))
  return tuple(sorted(pairs))


def check_general_position(
    points: Union[PointSet, Sequence[Point]]) -> GeneralPositionReport:
  """Checks pairwise distinct x, y and x + y values.

  Args:
    points: a point set or a raw sequence of points.

  Returns:
    a report naming every violating id pair, per axis.
  """
  if isinstance(points, PointSet):
    points = points.points
  return GeneralPositionReport(
      same_x=_pairs_with_equal_key(points, lambda p: p.x),
      same_y=_pairs_with_equal_key(points, lambda p: p.y),
      same_sum=_pairs_with_equal_key(points, lambda p: p.x + p.y))


def _build(points: Sequence[Point]) -> PointSet:
  points = tuple(sorted(points, key=lambda p: p.id))
  return PointSet(
      points=points,
      by_x=tuple(p.id for p in sorted(points, key=lambda p: p.x)),
      by_y=tuple(p.id for p in sorted(points, key=lambda p: p.y)),
      # Ties only arise after a single-axis reflection.
      by_sum=tuple(
          p.id for p in sorted(points, key=lambda p: (p.x + p.y, p.id))))


def from_points(points: Iterable[Point]) -> PointSet:
  """Builds a point set from points with explicit ids.

  Args:
    points: points with unique ids and exact coordinates.

  Returns:
    the validated point set.

  Raises:
    GeneralPositionError: if two points share an x, a y or an x + y value.
  """
  points = tuple(
      Point(id=int(p.id), x=as_rational(p.x), y=as_rational(p.y))
      for p in points)
  ids = [p.id for p in points]
  if len(set(ids)) != len(ids):
    raise ValueError(f'Point ids must be unique, got {sorted(ids)}.')
  report = check_general_position(points)
  if not report.ok:
    raise GeneralPositionError(
        f'Points are not in general position: same x {report.same_x}, '
        f'same y {report.same_y}, same x+y {report.same_sum}.')
  return _build(points)


def point_set(coords: Iterable[Tuple[Coordinate, Coordinate]]) -> PointSet:
  """Builds a point set from `(x, y)` pairs, assigning ids `0..n-1`."""
  return from_points(
      Point(id=i, x=x, y=y) for i, (x, y) in enumerate(coords))


def reflect(ps: PointSet, axis: Reflection) -> PointSet:
  """Mirrors a point set, keeping ids.

  Distinct x and distinct y survive every reflection. Distinct x + y is only
  preserved by `Reflection.BOTH`, which maps slope -1 lines to slope -1 lines.

  Args:
    ps: the point set.
    axis: which coordinates to negate.

  Returns:
    the reflected point set.
  """
  axis = Reflection(axis)
  sx = -1 if axis in (Reflection.HORIZONTAL, Reflection.BOTH) else 1
  sy = -1 if axis in (Reflection.VERTICAL, Reflection.BOTH) else 1
  return _build(
      tuple(Point(id=p.id, x=sx * p.x, y=sy * p.y) for p in ps.points))


def order_by(ps: PointSet, key: OrderKey) -> Tuple[int, ...]:
  """Returns the ids in strictly increasing order of `key`."""
  key = OrderKey(key)
  if key is OrderKey.X:
    return ps.by_x
  if key is OrderKey.Y:
    return ps.by_y
  return ps.by_sum


def random_point_set(
    seed: int,
    n: int,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS) -> PointSet:
  """Samples `n` points with distinct integer coordinates.

  x and y are drawn without replacement from `[0, 4n^2)`; the sample is
  redrawn with a fresh key whenever two x + y values collide.

  Args:
    seed: seed of the `jax.random` key.
    n: number of points.
    max_attempts: number of redraws before giving up.

  Returns:
    a point set in general position with ids `0..n-1`.
  """
  if n < 0:
    raise ValueError(f'Number of points must be non-negative, got {n}.')
  if n == 0:
    return point_set(())
  span = max(8, 4 * n * n)
  rng_key = jax.random.PRNGKey(seed)
  for attempt in range(max_attempts):
    rng_key, x_key, y_key = jax.random.split(rng_key, 3)
    xs = np.asarray(
        jax.random.choice(x_key, span, shape=(n,), replace=False)).tolist()
    ys = np.asarray(
        jax.random.choice(y_key, span, shape=(n,), replace=False)).tolist()
    if len({x + y for x, y in zip(xs, ys)}) == n:
      if attempt:
        logging.info('[random_point_set] seed %d: %d redraws', seed, attempt)
      return point_set(zip(xs, ys))
  raise RuntimeError(
      f'No general-position sample after {max_attempts} attempts '
      f'(seed={seed}).')
