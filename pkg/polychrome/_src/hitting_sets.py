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
"""Greedy shallow hitting sets for quadrant hypergraphs.

The north-west greedy walks the quadrant sequence `Q_1, ..., Q_alpha` in order
of decreasing apex x and, whenever `Q_i` is not hit yet, adds the leftmost
point of `Q_i`. The result hits every north-west hyperedge once or twice. The
other orientations reflect the point set first: a horizontal flip for
north-east, a vertical flip for south-west and a 180 degree rotation for
south-east (the rotation keeps slope -1 lines at slope -1).
"""

from typing import Dict, FrozenSet, Iterable, Sequence, Tuple

from absl import logging
import chex
import jax.numpy as jnp
import numpy as np
from polychrome._src import base
from polychrome._src import geometry
from polychrome._src import hypergraph as hg
from polychrome._src import ranges

Family = ranges.Family
Hyperedge = base.Hyperedge

ORIENTATIONS = ranges.QUADRANTS

# Maximum hits of (S_NW, S_NE, S_SW, S_SE) per row. Quadrant rows leave out
# the topmost (NW, NE) or bottommost (SW, SE) m points, which get rows of
# their own.
HIT_BOUNDS = {
    'nw': (2, 0, 1, 1),
    'ne': (0, 2, 1, 1),
    'sw': (1, 1, 2, 0),
    'se': (1, 1, 0, 2),
    'top': (1, 1, 1, 1),
    'bottom': (1, 1, 1, 1),
}
# Rows reported without a bound.
OBSERVED_ROWS = (Family.HS, Family.VS, Family.DS, Family.BL, Family.TL)
DIAGONAL_BOUND = 2


@chex.dataclass(frozen=True, mappable_dataclass=False)
class ShallowHittingSet:
  """A greedy hitting set of `H(ps, orientation, m)`.

  Attributes:
    orientation: the quadrant family.
    ids: the chosen vertices in insertion order.
    m: uniformity.
    ps: the host point set.
  """
  orientation: Family
  ids: Tuple[int, ...]
  m: int
  ps: geometry.PointSet

  @property
  def members(self) -> FrozenSet[int]:
    return frozenset(self.ids)


def _check_orientation(orientation) -> Family:
  orientation = Family(orientation)
  if orientation not in ORIENTATIONS:
    raise ValueError(f'Expected a quadrant family, got {orientation.name}.')
  return orientation


def quadrant_shallow_hitting_set(
    ps: geometry.PointSet,
    orientation: Family,
    m: int) -> ShallowHittingSet:
  """Runs the greedy on the quadrant hypergraph `H(ps, orientation, m)`.

  Args:
    ps: the point set.
    orientation: one of the four quadrant families.
    m: uniformity; for `m > len(ps)` there is nothing to hit.

  Returns:
    the hitting set, ordered by insertion.
  """
  orientation = _check_orientation(orientation)
  if m < 1:
    raise ValueError(f'Uniformity must be positive, got {m}.')
  canonical = ranges.canonical_frame(ps, orientation)
  chosen = []
  for quadrant in ranges.north_west_quadrants(canonical, m):
    if not set(chosen).intersection(quadrant):
      chosen.append(min(quadrant, key=canonical.x))
  logging.info('[quadrant_shallow_hitting_set] %s, n: %d, m: %d, size: %d',
               orientation.name, len(ps), m, len(chosen))
  return ShallowHittingSet(
      orientation=orientation, ids=tuple(chosen), m=m, ps=ps)


def shallowness(orientations: Iterable[Family]) -> int:
  """Maximum hits of the union of greedy sets on the union of their edges.

  Read off `HIT_BOUNDS`: two for NW and NE together, three for NW and SE,
  four for all four orientations.

  Args:
    orientations: quadrant families.

  Returns:
    the shallowness of the union of their greedy hitting sets.
  """
  chosen = {_check_orientation(o) for o in orientations}
  if not chosen:
    raise ValueError('Expected at least one quadrant family.')
  rows = [o.value for o in chosen]
  if chosen & {Family.NW, Family.NE}:
    rows.append('top')
  if chosen & {Family.SW, Family.SE}:
    rows.append('bottom')
  columns = [i for i, o in enumerate(ORIENTATIONS) if o in chosen]
  return max(sum(HIT_BOUNDS[row][i] for i in columns) for row in rows)


def _on_ids(ps: geometry.PointSet, edges: Iterable[Hyperedge]) -> hg.Hypergraph:
  """A hypergraph over the ids of `ps`, which need not be dense."""
  return hg.hypergraph(max(ps.ids, default=-1) + 1, edges)


def _count_inside(ps, x_lo, x_hi, y_lo, y_hi) -> int:
  """Points with `x_lo <= x <= x_hi` and `y_lo <= y <= y_hi`; None is open."""
  return sum(
      1 for p in ps.points
      if x_lo <= p.x <= x_hi and (y_lo is None or y_lo <= p.y) and p.y <= y_hi)


@chex.dataclass(frozen=True, mappable_dataclass=False)
class ShallowHittingReport:
  """Failed structural properties of a greedy hitting set."""
  failures: Tuple[str, ...]
  max_hits: int

  @property
  def ok(self) -> bool:
    return not self.failures


def check_shallow_hitting_properties(
    hs: ShallowHittingSet) -> ShallowHittingReport:
  """Checks the structure guaranteed for a greedy quadrant hitting set.

  All checks run in the reflected frame where the orientation is north-west:
  the points descend in x and in y, the first one is the leftmost of the `m`
  topmost points, the topmost `m` points are hit exactly once, every
  consecutive pair spans a bottomless rectangle with at least `m + 1` points,
  every consecutive triple spans a rectangle with at least `m + 2` points,
  and every quadrant edge is hit once or twice. The set also hits every
  bottomless-rectangle edge of the frame at most once.

  Args:
    hs: the hitting set.

  Returns:
    the report; `ok` iff no property fails.
  """
  ps, m, ids = hs.ps, hs.m, hs.ids
  if m > len(ps):
    failures = ('hitting set without hyperedges is not empty',) if ids else ()
    return ShallowHittingReport(failures=failures, max_hits=0)
  frame = ranges.canonical_frame(ps, hs.orientation)
  x, y = frame.x, frame.y
  failures = []
  for j in range(len(ids) - 1):
    u, v = ids[j], ids[j + 1]
    if not (x(v) < x(u) and y(v) < y(u)):
      failures.append(f'not descending at position {j}')
    inside = _count_inside(frame, x(v), x(u), None, y(u))
    if inside < m + 1:
      failures.append(
          f'bottomless rectangle at position {j} holds {inside} points')
  for j in range(len(ids) - 2):
    u, w = ids[j], ids[j + 2]
    inside = _count_inside(frame, x(w), x(u), y(w), y(u))
    if inside < m + 2:
      failures.append(f'rectangle at position {j} holds {inside} points')
  top = frame.by_y[-m:]
  if not ids or ids[0] != min(top, key=x):
    failures.append('first point is not the leftmost of the top points')
  top_hits = len(hs.members.intersection(top))
  if top_hits != 1:
    failures.append(f'top points hit {top_hits} times')
  profile = hg.hit_profile(
      _on_ids(ps, ranges.north_west_quadrants(frame, m)), ids)
  if not profile.is_shallow(2):
    failures.append(
        f'quadrant edges hit {profile.min_hits} to {profile.max_hits} times')
  bottomless = hg.hit_profile(
      _on_ids(ps, ranges.enumerate_hyperedges(frame, Family.BL, m)), ids)
  if bottomless.max_hits > 1:
    failures.append(
        f'bottomless edge hit {bottomless.max_hits} times')
  return ShallowHittingReport(
      failures=tuple(failures), max_hits=profile.max_hits)


def _max_hits(
    ps: geometry.PointSet,
    edges: Sequence[Hyperedge],
    sets: Sequence[ShallowHittingSet]) -> Tuple[int, ...]:
  """Per set, the largest `|E & S|` over `edges`."""
  if not edges:
    return (0,) * len(sets)
  column = {v: i for i, v in enumerate(ps.ids)}
  incidence = base.incidence_matrix(
      [tuple(column[v] for v in e) for e in edges], len(ps))
  members = np.zeros((len(ps), len(sets)), dtype=np.int32)
  for j, s in enumerate(sets):
    members[[column[v] for v in s.ids], j] = 1
  counts = base.hit_counts(jnp.asarray(incidence), jnp.asarray(members))
  return tuple(int(c) for c in np.asarray(jnp.max(counts, axis=0)))


@chex.dataclass(frozen=True, mappable_dataclass=False)
class HitCountCertificate:
  """Observed maximum hits of the four greedy sets, row by row.

  Attributes:
    m: uniformity.
    hitting_sets: the greedy sets for NW, NE, SW and SE.
    observed: per row name, the maximum hits of `(S_NW, S_NE, S_SW, S_SE)`.
      The bounded rows are `HIT_BOUNDS`; `hs`, `vs`, `ds`, `bl` and `tl`
      cover the strip and rectangle edges.
    excess: `(row, orientation, observed, bound)` for every bounded entry
      above its bound.
    diagonal_flags: NW or SE sets hitting a diagonal strip edge more than
      twice.
  """
  m: int
  hitting_sets: Tuple[ShallowHittingSet, ...]
  observed: Dict[str, Tuple[int, ...]]
  excess: Tuple[Tuple[str, str, int, int], ...]
  diagonal_flags: Tuple[str, ...]

  @property
  def ok(self) -> bool:
    return not self.excess


def quadrant_hitting_profile(
    ps: geometry.PointSet, m: int) -> HitCountCertificate:
  """Certifies the hit counts of the four greedy quadrant hitting sets.

  Args:
    ps: the point set.
    m: uniformity.

  Returns:
    the certificate; `ok` iff no bounded entry exceeds `HIT_BOUNDS`.
  """
  sets = tuple(quadrant_shallow_hitting_set(ps, o, m) for o in ORIENTATIONS)
  top = bottom = ()
  if m <= len(ps):
    top = base.canonical_edge(ps.by_y[-m:])
    bottom = base.canonical_edge(ps.by_y[:m])
  rows = {}
  for family in ORIENTATIONS:
    skip = top if family in (Family.NW, Family.NE) else bottom
    rows[family.value] = [
        e for e in ranges.enumerate_hyperedges(ps, family, m) if e != skip]
  rows['top'] = [top] if top else []
  rows['bottom'] = [bottom] if bottom else []
  for family in OBSERVED_ROWS:
    rows[family.value] = ranges.enumerate_hyperedges(ps, family, m)
  observed = {row: _max_hits(ps, edges, sets) for row, edges in rows.items()}

  excess = []
  for row, bounds in HIT_BOUNDS.items():
    for s, seen, bound in zip(sets, observed[row], bounds):
      if seen > bound:
        excess.append((row, s.orientation.value, seen, bound))
  diagonal_flags = tuple(
      s.orientation.value
      for s, seen in zip(sets, observed[Family.DS.value])
      if s.orientation in (Family.NW, Family.SE) and seen > DIAGONAL_BOUND)
  if excess:
    logging.warning('[quadrant_hitting_profile] entries above bound: %s',
                    excess)
  if diagonal_flags:
    logging.warning(
        '[quadrant_hitting_profile] diagonal strip edges hit more than %d '
        'times by %s', DIAGONAL_BOUND, diagonal_flags)
  return HitCountCertificate(
      m=m,
      hitting_sets=sets,
      observed=observed,
      excess=tuple(excess),
      diagonal_flags=diagonal_flags)
