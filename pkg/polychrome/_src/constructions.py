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
"""Explicit hypergraph constructions and their geometric realizations.

Two families are built:

* complete m-ary tree hypergraphs (every children set and every root-to-leaf
  path is an edge), realized with south-west quadrants and diagonal strips;
* stage hypergraphs on a forest whose vertices are grouped into ordered
  stages (m consecutive stage vertices and every root-to-leaf path are
  edges), realized with bottomless rectangles and horizontal strips.

Realizations are never trusted: each is re-checked through the enumeration of
`ranges` before it is returned.
"""

import bisect
import itertools
import math
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

from absl import logging
import chex
from polychrome._src import base
from polychrome._src import geometry
from polychrome._src import hypergraph as hg
from polychrome._src import ranges

Family = ranges.Family
Rational = geometry.Rational

DEFAULT_MAX_VERTICES = 20_000
DEFAULT_RETRIES = 4


class ConstructionTooLargeError(ValueError):
  """Raised when a construction would exceed the materialization budget."""

  def __init__(self, message: str, count: int):
    super().__init__(message)
    self.count = count


class RealizationError(RuntimeError):
  """Raised when a layout still fails verification after all retries."""


@chex.dataclass(frozen=True, mappable_dataclass=False)
class RootedForest:
  """A forest with vertex ids in BFS order.

  Attributes:
    parent: parent id per vertex, -1 for roots.
    level: depth per vertex, 0 for roots.
    names: readable name per vertex, built from the path of child indices.
    stages: ordered vertex blocks; empty for plain trees.
  """
  parent: Tuple[int, ...]
  level: Tuple[int, ...]
  names: Tuple[str, ...]
  stages: Tuple[Tuple[int, ...], ...] = ()

  @property
  def num_vertices(self) -> int:
    return len(self.parent)

  @property
  def roots(self) -> Tuple[int, ...]:
    return tuple(v for v, p in enumerate(self.parent) if p < 0)

  @property
  def children(self) -> Tuple[Tuple[int, ...], ...]:
    kids = [[] for _ in self.parent]
    for v, p in enumerate(self.parent):
      if p >= 0:
        kids[p].append(v)
    return tuple(tuple(k) for k in kids)

  @property
  def leaves(self) -> Tuple[int, ...]:
    return tuple(v for v, kids in enumerate(self.children) if not kids)

  def path(self, v: int) -> Tuple[int, ...]:
    """Ids from the root of `v` down to `v`."""
    path = [v]
    while self.parent[path[-1]] >= 0:
      path.append(self.parent[path[-1]])
    return tuple(reversed(path))


class Construction(NamedTuple):
  """A constructed hypergraph with its forest and its two kinds of edges."""
  hypergraph: hg.Hypergraph
  forest: RootedForest
  path_edges: Tuple[base.Hyperedge, ...]
  group_edges: Tuple[base.Hyperedge, ...]


@chex.dataclass(frozen=True, mappable_dataclass=False)
class LabeledRealization:
  """A point set realizing a construction.

  Attributes:
    ps: the points; point ids coincide with construction vertex ids.
    vmap: construction vertex name -> point id.
    intended: the hypergraph that must be realized.
    families: range families used for the realization.
    m: uniformity of `intended`.
    construction: the realized construction.
    bands: per stage, the `(low, high)` y-interval holding it (stage layouts
      only).
  """
  ps: geometry.PointSet
  vmap: Dict[str, int]
  intended: hg.Hypergraph
  families: Tuple[Family, ...]
  m: int
  construction: Construction
  bands: Tuple[Tuple[Rational, Rational], ...] = ()


@chex.dataclass(frozen=True, mappable_dataclass=False)
class RealizationReport:
  """Intended edges that are not captured, and the count of extra captures."""
  missing: Tuple[base.Hyperedge, ...]
  extra: int

  @property
  def ok(self) -> bool:
    return not self.missing


def _construction(forest: RootedForest, group_edges) -> Construction:
  path_edges = tuple(
      sorted(base.canonical_edge(forest.path(v)) for v in forest.leaves))
  group_edges = tuple(sorted(base.canonical_edge(e) for e in group_edges))
  h = hg.hypergraph(forest.num_vertices, path_edges + group_edges)
  return Construction(
      hypergraph=h, forest=forest, path_edges=path_edges,
      group_edges=group_edges)


def mary_tree_hypergraph(
    m: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Construction:
  """Builds the complete m-ary tree hypergraph.

  The tree has vertex levels `0..m-1`, so every root-to-leaf path holds
  exactly `m` vertices and the hypergraph is m-uniform.

  Args:
    m: arity and uniformity, at least 2.
    max_vertices: materialization budget.

  Returns:
    the construction; group edges are the children sets.
  """
  if m < 2:
    raise ValueError(f'Tree arity must be at least 2, got {m}.')
  count = (m**m - 1) // (m - 1)
  if count > max_vertices:
    raise ConstructionTooLargeError(
        f'The {m}-ary tree has {count} vertices, above the budget of '
        f'{max_vertices}.', count)
  parent, level, names = [-1], [0], ['r']
  v = 0
  while v < len(parent):
    if level[v] < m - 1:
      for i in range(m):
        parent.append(v)
        level.append(level[v] + 1)
        names.append(f'{names[v]}.{i}')
    v += 1
  forest = RootedForest(
      parent=tuple(parent), level=tuple(level), names=tuple(names))
  construction = _construction(
      forest, [kids for kids in forest.children if kids])
  logging.info('[mary_tree_hypergraph] m: %d, vertices: %d, edges: %d', m,
               forest.num_vertices, construction.hypergraph.num_edges)
  return construction


def stage_hypergraph(m: int) -> Construction:
  """Builds the stage hypergraph of order `m`.

  The level-0 stage holds `m^m` roots. For every stage `S` on level `j < m-1`
  and every subset `S'` of `S` with `m^(m-j-1)` vertices there is one child
  stage whose i-th vertex is the child of the i-th vertex of `S'`. Edges are
  the `m` consecutive vertices of every stage and all root-to-leaf paths.

  Args:
    m: the order; only `m <= 2` is small enough to materialize.

  Returns:
    the construction; group edges are the stage edges.

  Raises:
    ConstructionTooLargeError: for `m >= 3`, carrying the number of level-1
      stages.
  """
  if m < 1:
    raise ValueError(f'Order must be positive, got {m}.')
  if m >= 3:
    count = math.comb(m**m, m**(m - 1))
    raise ConstructionTooLargeError(
        f'The stage hypergraph of order {m} has {count} level-1 stages.',
        count)
  parent, level, names = [], [], []
  stages: List[Tuple[int, ...]] = []

  def add_vertex(p: int, name: str) -> int:
    parent.append(p)
    level.append(0 if p < 0 else level[p] + 1)
    names.append(name)
    return len(parent) - 1

  stages.append(tuple(add_vertex(-1, f'r{i}') for i in range(m**m)))
  s = 0
  while s < len(stages):
    stage = stages[s]
    j = level[stage[0]]
    if j < m - 1:
      for t, subset in enumerate(
          itertools.combinations(stage, m**(m - j - 1))):
        stages.append(
            tuple(add_vertex(p, f'{names[p]}.{t}') for p in subset))
    s += 1
  forest = RootedForest(
      parent=tuple(parent), level=tuple(level), names=tuple(names),
      stages=tuple(stages))
  stage_edges = [
      st[i:i + m] for st in stages for i in range(len(st) - m + 1)]
  construction = _construction(forest, stage_edges)
  logging.info('[stage_hypergraph] m: %d, vertices: %d, stages: %d, '
               'edges: %d', m, forest.num_vertices, len(stages),
               construction.hypergraph.num_edges)
  return construction


def _check_parts(
    ps: geometry.PointSet,
    parts: Sequence[Tuple[Sequence[base.Hyperedge], Family]],
    m: int) -> List[base.Hyperedge]:
  missing = []
  for edges, family in parts:
    captured = set(ranges.enumerate_hyperedges(ps, family, m))
    missing.extend(e for e in edges if e not in captured)
  return missing


def _labeled(construction, ps, families, m, bands=()) -> LabeledRealization:
  forest = construction.forest
  return LabeledRealization(
      ps=ps,
      vmap={name: v for v, name in enumerate(forest.names)},
      intended=construction.hypergraph,
      families=tuple(families),
      m=m,
      construction=construction,
      bands=tuple(bands))


def _tree_layout(forest: RootedForest, eta: Rational) -> Dict[int, Tuple]:
  """Closed-form tree layout.

  A vertex reached by child indices `i_1, ..., i_d` (each in `1..p`, `p` the
  maximum branching) sits at
  `x = (1 + eta) * sum_r eps^(r-1) i_r`,
  `y = sum_r eps^(r-1) (p - i_r (1 - eta))` with `eps = 1 / (2p + 2)`.
  Sums of a fixed depth then differ from other depths by more than the
  perturbation, siblings are consecutive in x + y, and every south-west
  quadrant with its apex on a vertex captures exactly the root path.
  """
  p = max(len(k) for k in forest.children)
  eps = Rational(1, 2 * p + 2)
  coords = {}
  for v in range(forest.num_vertices):
    par = forest.parent[v]
    if par < 0:
      coords[v] = (Rational(0), Rational(0))
      continue
    i = forest.children[par].index(v) + 1
    scale = eps**(forest.level[v] - 1)
    px, py = coords[par]
    coords[v] = (px + scale * (1 + eta) * i, py + scale * (p - i * (1 - eta)))
  return coords


def realize_tree(m: int, retries: int = DEFAULT_RETRIES) -> LabeledRealization:
  """Realizes the m-ary tree hypergraph with SW quadrants and diagonal strips.

  The root is the bottommost and leftmost point; the children of every
  vertex lie on pairwise distinct, nearly slope -1 lines.

  Args:
    m: arity and uniformity.
    retries: number of smaller perturbations tried after a failed check.

  Returns:
    the verified realization.

  Raises:
    RealizationError: if no layout passes verification.
  """
  construction = mary_tree_hypergraph(m)
  forest = construction.forest
  p = max(len(k) for k in forest.children)
  eta = Rational(1, 2 * p + 2)**m / (8 * p)
  for attempt in range(retries + 1):
    coords = _tree_layout(forest, eta)
    try:
      ps = geometry.from_points(
          geometry.Point(id=v, x=x, y=y) for v, (x, y) in coords.items())
    except geometry.GeneralPositionError as e:
      logging.warning('[realize_tree] attempt %d: %s', attempt, e)
    else:
      missing = _check_parts(
          ps, [(construction.path_edges, Family.SW),
               (construction.group_edges, Family.DS)], m)
      if not missing:
        return _labeled(construction, ps, (Family.DS, Family.SW), m)
      logging.warning('[realize_tree] attempt %d: %d edges not captured',
                      attempt, len(missing))
    eta /= 2
  raise RealizationError(
      f'Tree layout for m={m} failed verification after {retries} retries.')


def tree_witness_ranges(r: LabeledRealization) -> Dict[str, ranges.Range]:
  """Per vertex, the SW quadrant with apex on the vertex (its root path)."""
  return {
      name: ranges.Range(
          family=Family.SW, params=(r.ps.x(v), r.ps.y(v)))
      for name, v in r.vmap.items()
  }


def _child_bands(
    occupied: List[Tuple[Rational, Rational]],
    host: Tuple[Rational, Rational],
    count: int) -> List[Tuple[Rational, Rational]]:
  """Carves `count` disjoint bands from the middle third above `host`."""
  top = host[1]
  above = [lo for lo, _ in occupied if lo >= top]
  gap = (min(above) - top) if above else Rational(1)
  lo, hi = top + gap / 3, top + 2 * gap / 3
  part = (hi - lo) / (2 * count + 1)
  return [(lo + (2 * i + 1) * part, lo + (2 * i + 2) * part)
          for i in range(count)]


def _min_gap(values) -> Rational:
  values = sorted(set(values))
  gaps = [b - a for a, b in zip(values, values[1:])]
  return min(gaps) if gaps else Rational(1)


def _stage_layout(forest: RootedForest, shrink: int):
  """Places stages in nested disjoint bands and shifts siblings apart."""
  stages = forest.stages
  stage_of = {}
  for s, stage in enumerate(stages):
    for v in stage:
      stage_of[v] = s
  child_stages = [[] for _ in stages]
  for s, stage in enumerate(stages):
    if forest.parent[stage[0]] >= 0:
      child_stages[stage_of[forest.parent[stage[0]]]].append(s)

  x, y = {}, {}
  roots = stages[0]
  bands = {0: (Rational(0), Rational(1))}
  for i, v in enumerate(roots):
    x[v] = Rational(i)
    y[v] = Rational(i + 1, len(roots) + 1)

  occupied = [bands[0]]
  for s in range(len(stages)):
    kids = child_stages[s]
    if not kids:
      continue
    for t, band in zip(kids, _child_bands(occupied, bands[s], len(kids))):
      bands[t] = band
      bisect.insort(occupied, band)
      lo, hi = band
      for i, v in enumerate(stages[t]):
        x[v] = x[forest.parent[v]]
        y[v] = lo + (hi - lo) * (i + 1) / (len(stages[t]) + 1)
    # Children of one parent form a descending sequence: the child in the
    # b-th band from the top moves right by b * delta.
    children = forest.children
    r = max(len(children[v]) for v in stages[s])
    delta = _min_gap(x.values()) / (2 * (r + 1)) / 2**shrink
    for v in stages[s]:
      for b, c in enumerate(sorted(children[v], key=lambda c: -y[c]), 1):
        x[c] += b * delta
  return x, y, tuple(bands[s] for s in range(len(stages)))


def _separate_sums(x, y):
  """Compresses x below the smallest y gap, making every x + y distinct."""
  x0 = min(x.values())
  span = max(x.values()) - x0
  if not span:
    return x
  scale = _min_gap(y.values()) / (2 * span)
  return {v: (xv - x0) * scale for v, xv in x.items()}


def realize_stages(
    m: int, retries: int = DEFAULT_RETRIES) -> LabeledRealization:
  """Realizes the stage hypergraph with bottomless rectangles and h-strips.

  Stages sit in pairwise disjoint horizontal bands, processed in BFS order,
  each ascending in x and y. A child starts at its parent's x; the children
  of one parent are then shifted right by distinct offsets, smaller for
  higher bands, all below half the smallest current x gap.

  Args:
    m: the order (at most 2).
    retries: number of halved shift scales tried after a failed check.

  Returns:
    the verified realization, with the band of every stage.

  Raises:
    RealizationError: if no layout passes verification.
  """
  construction = stage_hypergraph(m)
  forest = construction.forest
  for attempt in range(retries + 1):
    x, y, bands = _stage_layout(forest, attempt)
    points = [geometry.Point(id=v, x=x[v], y=y[v]) for v in sorted(x)]
    if not geometry.check_general_position(points).ok:
      logging.info('[realize_stages] separating x + y values')
      x = _separate_sums(x, y)
      points = [geometry.Point(id=v, x=x[v], y=y[v]) for v in sorted(x)]
    try:
      ps = geometry.from_points(points)
    except geometry.GeneralPositionError as e:
      logging.warning('[realize_stages] attempt %d: %s', attempt, e)
      continue
    missing = _check_parts(
        ps, [(construction.path_edges, Family.BL),
             (construction.group_edges, Family.HS)], m)
    if not missing:
      return _labeled(construction, ps, (Family.BL, Family.HS), m, bands)
    logging.warning('[realize_stages] attempt %d: %d edges not captured',
                    attempt, len(missing))
  raise RealizationError(
      f'Stage layout for m={m} failed verification after {retries} retries.')


def stage_witness_rectangles(
    r: LabeledRealization) -> Dict[str, ranges.Range]:
  """Per vertex `v`, the bottomless rectangle with top-right corner `v`.

  Its left side sits just left of the root of `v`, so it captures exactly the
  path from that root to `v`.

  Args:
    r: a stage realization.

  Returns:
    vertex name -> bottomless rectangle.
  """
  forest = r.construction.forest
  xs = sorted(p.x for p in r.ps.points)
  rects = {}
  for name, v in r.vmap.items():
    root_x = r.ps.x(forest.path(v)[0])
    i = bisect.bisect_left(xs, root_x)
    left = (xs[i - 1] + root_x) / 2 if i else root_x - 1
    rects[name] = ranges.Range(
        family=Family.BL, params=(left, r.ps.x(v), r.ps.y(v)))
  return rects


def check_containment(
    ps: geometry.PointSet,
    intended: hg.Hypergraph,
    families: Iterable[Family],
    m: int) -> RealizationReport:
  """Checks that every edge of `intended` is captured by one of `families`.

  Args:
    ps: the points, with ids matching the vertices of `intended`.
    intended: the hypergraph to realize.
    families: the range families.
    m: uniformity.

  Returns:
    the missing intended edges and the number of captured `m`-sets that are
    not intended (permitted).
  """
  captured = set(ranges.enumerate_union(ps, families, m))
  missing = tuple(e for e in intended.edges if e not in captured)
  extra = len(captured - set(intended.edges))
  if extra:
    logging.warning('[check_containment] %d captured %d-sets are not '
                    'intended edges', extra, m)
  return RealizationReport(missing=missing, extra=extra)


def verify_realization(r: LabeledRealization) -> RealizationReport:
  """Runs `check_containment` on a realization."""
  return check_containment(r.ps, r.intended, r.families, r.m)
