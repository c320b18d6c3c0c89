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
"""Polychromatic colorings of range-capturing hypergraphs.

Three constructions are implemented:

* strips: group every `k` points consecutive in x (and in y) into cliques and
  properly edge-color the bipartite multigraph whose edges are the points;
* peeling: repeatedly remove a shallow hitting set and give it a color of its
  own;
* pipelines: peel `k` quadrant hitting sets off the point set, then color the
  rest with a base colorer for the remaining families.
"""

import enum
import math
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple, Union

from absl import logging
import chex
from polychrome._src import edge_coloring
from polychrome._src import geometry
from polychrome._src import hitting_sets
from polychrome._src import hypergraph as hg
from polychrome._src import oracles
from polychrome._src import ranges
from polychrome._src import serialization

Family = ranges.Family
Families = Union[Family, str, Iterable[Union[Family, str]]]


class BudgetExhaustedError(RuntimeError):
  """Raised when an exact base coloring runs out of search nodes."""

  def __init__(self, message: str, nodes: int):
    super().__init__(message)
    self.nodes = nodes


class CitedBoundFalsifiedError(RuntimeError):
  """Raised when no base coloring exists at the threshold it was promised.

  Attributes:
    instance: the offending point set in the point-set JSON format.
  """

  def __init__(self, message: str, instance):
    super().__init__(message)
    self.instance = instance


def _families(families: Families) -> Tuple[Family, ...]:
  if isinstance(families, (Family, str)):
    families = [families]
  return ranges.parse_families(Family(f).value for f in families)


def _as_coloring(
    ps: geometry.PointSet, colors: Mapping[int, int], k: int) -> hg.Coloring:
  if not ps.is_dense():
    raise ValueError('Colorings are defined on point sets with ids 0..n-1.')
  return hg.coloring(k, colors, n=len(ps))


def strip_cliques(
    ps: geometry.PointSet,
    k: int) -> Tuple[hg.CliqueSystem, hg.CliqueSystem]:
  """Groups every `k` consecutive points by x and by y.

  The last `len(ps) % k` points of each order are left out.

  Args:
    ps: the point set.
    k: clique size.

  Returns:
    the x-cliques and the y-cliques.
  """
  if k < 1:
    raise ValueError(f'Number of colors must be positive, got {k}.')

  def group(order):
    return hg.CliqueSystem(k=k, cliques=tuple(
        tuple(sorted(order[i:i + k]))
        for i in range(0, len(order) - k + 1, k)))

  return group(ps.by_x), group(ps.by_y)


def _strip_colors(ps: geometry.PointSet, k: int) -> Dict[int, int]:
  by_x, by_y = strip_cliques(ps, k)
  left = {v: i for i, c in enumerate(by_x.cliques) for v in c}
  right = {v: i for i, c in enumerate(by_y.cliques) for v in c}
  members = [v for v in ps.ids if v in left or v in right]
  g = edge_coloring.BipartiteMultigraph(
      num_left=len(by_x.cliques),
      num_right=len(by_y.cliques),
      edges=tuple((v, left.get(v), right.get(v)) for v in members))
  colors = dict.fromkeys(ps.ids, 1)
  colors.update(zip(members, edge_coloring.edge_color_bipartite(g, k)))
  return colors


def color_strips(ps: geometry.PointSet, k: int) -> hg.Coloring:
  """Colors `ps` so that every strip hyperedge of size `2k - 1` is rainbow.

  Every horizontal or vertical window of `2k - 1` points contains a whole
  clique, and the proper edge coloring gives the `k` points of each clique
  pairwise distinct colors. Points in no clique get color 1.

  Args:
    ps: a point set with ids `0..n-1`.
    k: number of colors.

  Returns:
    the coloring.
  """
  return _as_coloring(ps, _strip_colors(ps, k), k)


def _union_hitting_set(
    ps: geometry.PointSet, orientations: Iterable[Family], m: int):
  chosen = set()
  for orientation in orientations:
    chosen.update(
        hitting_sets.quadrant_shallow_hitting_set(ps, orientation, m).ids)
  return tuple(sorted(chosen))


def peel_single(
    ps: geometry.PointSet,
    families: Families,
    t: Optional[int],
    k: int) -> hg.Coloring:
  """Colors quadrant hyperedges of size `(k - 1) t + 1` with `k` colors.

  Color `k` goes to a `t`-shallow hitting set of the whole point set, color
  `k - 1` to one of the remaining points at uniformity `m - t`, and so on;
  whatever is left after color 2 gets color 1.

  Args:
    ps: a point set with ids `0..n-1`.
    families: one or more quadrant families; the hitting set is the union of
      their greedy sets.
    t: shallowness of that union; None reads it off `hitting_sets`.
    k: number of colors.

  Returns:
    the coloring.
  """
  orientations = _families(families)
  if t is None:
    t = hitting_sets.shallowness(orientations)
  if k < 1 or t < 1:
    raise ValueError(f'Expected k >= 1 and t >= 1, got k={k}, t={t}.')
  m = (k - 1) * t + 1
  colors = {}
  rest = ps
  for color in range(k, 1, -1):
    peel = _union_hitting_set(rest, orientations, m)
    colors.update(dict.fromkeys(peel, color))
    rest = rest.subset(set(rest.ids) - set(peel))
    logging.info('[peel_single] color %d: %d points at m=%d', color,
                 len(peel), m)
    m -= t
  colors.update(dict.fromkeys(rest.ids, 1))
  return _as_coloring(ps, colors, k)


def _exact_colors(
    ps: geometry.PointSet,
    families: Tuple[Family, ...],
    m: int,
    k: int,
    budget: int) -> Dict[int, int]:
  index = {v: i for i, v in enumerate(ps.ids)}
  edges = ranges.enumerate_union(ps, families, m)
  h = hg.hypergraph(len(ps), [[index[v] for v in e] for e in edges])
  result = oracles.exact_polychromatic(h, k, budget)
  if result.status is oracles.OracleStatus.BUDGET_EXHAUSTED:
    raise BudgetExhaustedError(
        f'Base coloring ran out of {result.nodes} search nodes.',
        nodes=result.nodes)
  if not result.is_sat:
    message = (f'No polychromatic {k}-coloring of '
               f'{",".join(f.value for f in families)} at m={m} on '
               f'{len(ps)} points.')
    logging.error('[base_color_exact] %s', message)
    raise CitedBoundFalsifiedError(
        message, instance=serialization.points_to_json(ps))
  return dict(zip(ps.ids, result.witness.colors))


def base_color_exact(
    ps: geometry.PointSet,
    families: Families,
    m: int,
    k: int,
    budget: int = oracles.DEFAULT_BUDGET) -> hg.Coloring:
  """Exact polychromatic coloring of `H(ps, families, m)`.

  Args:
    ps: a point set with ids `0..n-1`.
    families: the range families.
    m: uniformity.
    k: number of colors.
    budget: search node budget.

  Returns:
    the lexicographically first polychromatic coloring.

  Raises:
    CitedBoundFalsifiedError: if no polychromatic coloring exists.
    BudgetExhaustedError: if the search runs out of budget.
  """
  return _as_coloring(
      ps, _exact_colors(ps, _families(families), m, k, budget), k)


class BaseColorer(enum.Enum):
  STRIPS = 'strips'
  EXACT = 'exact'


@chex.dataclass(frozen=True, mappable_dataclass=False)
class PipelineConfig:
  """Parameters of a peel-then-base-color pipeline.

  Attributes:
    name: a label for reports.
    r1: quadrant families handled by peeling.
    r2: families handled by the base colorer.
    s: maximum hits of an `r2` hyperedge by one peel.
    t: shallowness of one peel on `r1` hyperedges.
    base: how the remaining points are colored.
    threshold: `k -> f(k)`, the uniformity at which `base` succeeds.
  """
  name: str
  r1: Tuple[Family, ...]
  r2: Tuple[Family, ...]
  s: int
  t: int
  base: BaseColorer
  threshold: Callable[[int], int]

  def __post_init__(self):
    if self.s < 1 or self.t < 1:
      raise ValueError(f'Expected s, t >= 1, got s={self.s}, t={self.t}.')
    if not self.r1 or any(f not in ranges.QUADRANTS for f in self.r1):
      raise ValueError(f'r1 must be quadrant families, got {self.r1}.')
    if set(self.r1) & set(self.r2):
      raise ValueError(f'r1 and r2 overlap: {self.r1}, {self.r2}.')
    if self.base is BaseColorer.STRIPS and not set(self.r2) <= {
        Family.HS, Family.VS}:
      raise ValueError(
          f'The strips colorer only covers hs and vs, got {self.r2}.')

  @property
  def families(self) -> Tuple[Family, ...]:
    return ranges.parse_families(f.value for f in self.r1 + self.r2)

  def uniformity(self, k: int) -> int:
    """`f(k) + k max(s, t)`."""
    return self.threshold(k) + k * max(self.s, self.t)


PRESETS = {
    'bottomless-north-quadrants': dict(
        r1=(Family.NW, Family.NE), r2=(Family.BL,), s=2, t=2,
        base=BaseColorer.EXACT, threshold=lambda k: 3 * k - 2),
    'quadrants-strips': dict(
        r1=ranges.QUADRANTS, r2=(Family.HS, Family.VS), s=8, t=4,
        base=BaseColorer.STRIPS, threshold=lambda k: 2 * k - 1),
    'nw-se-three-strips': dict(
        r1=(Family.NW, Family.SE), r2=ranges.STRIPS, s=4, t=3,
        base=BaseColorer.EXACT,
        threshold=lambda k: math.ceil(4 * k * math.log(k) + k * math.log(3))),
}


def preset_case(name: str) -> PipelineConfig:
  """Returns one of the named configurations in `PRESETS`."""
  if name not in PRESETS:
    raise ValueError(
        f'Unknown preset {name!r}; expected one of {sorted(PRESETS)}.')
  return PipelineConfig(name=name, **PRESETS[name])


@chex.dataclass(frozen=True, mappable_dataclass=False)
class PipelineRun:
  """A pipeline coloring together with its bookkeeping.

  Attributes:
    config: the configuration.
    k: number of colors.
    m: uniformity of the colored hypergraph.
    schedule: the uniformities `m_1, ..., m_k` of the peels.
    peels: the hitting set removed by each peel, sorted.
    base_uniformity: `f(k)`, the uniformity handed to the base colorer.
    coloring: the result.
    violations: per family, the number of hyperedges of size `m` missing a
      color.
  """
  config: PipelineConfig
  k: int
  m: int
  schedule: Tuple[int, ...]
  peels: Tuple[Tuple[int, ...], ...]
  base_uniformity: int
  coloring: hg.Coloring
  violations: Dict[str, int]

  @property
  def ok(self) -> bool:
    return not any(self.violations.values())


def run_pipeline(
    ps: geometry.PointSet,
    cfg: PipelineConfig,
    k: int,
    budget: int = oracles.DEFAULT_BUDGET) -> PipelineRun:
  """Peels `k` quadrant hitting sets, base-colors the rest and checks it.

  With `m = f(k) + k max(s, t)`, peel `i` removes the union of the greedy
  hitting sets of `H(V_i, r1, m_i)` for `m_i = m - (i - 1) max(s, t)` and
  gives it color `i`. The points left over are colored by the base colorer
  at uniformity `f(k)`.

  Args:
    ps: a point set with ids `0..n-1`.
    cfg: the configuration.
    k: number of colors.
    budget: search node budget of the exact base colorer.

  Returns:
    the run, including per-family violation counts at uniformity `m`.

  Raises:
    CitedBoundFalsifiedError: if the exact base colorer finds no coloring.
    BudgetExhaustedError: if the exact base colorer runs out of budget.
  """
  if k < 1:
    raise ValueError(f'Number of colors must be positive, got {k}.')
  m = cfg.uniformity(k)
  step = max(cfg.s, cfg.t)
  schedule = tuple(m - i * step for i in range(k))
  logging.info('[run_pipeline] %s, k: %d, m: %d, schedule: %s', cfg.name, k,
               m, schedule)
  colors = {}
  peels = []
  rest = ps
  for color, m_i in enumerate(schedule, start=1):
    peel = _union_hitting_set(rest, cfg.r1, m_i)
    peels.append(peel)
    colors.update(dict.fromkeys(peel, color))
    rest = rest.subset(set(rest.ids) - set(peel))
  f_k = cfg.threshold(k)
  if cfg.base is BaseColorer.STRIPS:
    colors.update(_strip_colors(rest, k))
  else:
    colors.update(_exact_colors(rest, cfg.r2, f_k, k, budget))
  logging.info('[run_pipeline] peeled %d points, base-colored %d at f(k)=%d',
               len(ps) - len(rest), len(rest), f_k)

  c = _as_coloring(ps, colors, k)
  violations = {}
  for family in cfg.families:
    h = hg.hypergraph(len(ps), ranges.enumerate_hyperedges(ps, family, m))
    violations[family.value] = len(hg.is_polychromatic(h, c).violations)
  if any(violations.values()):
    logging.warning('[run_pipeline] violations: %s', violations)
  return PipelineRun(
      config=cfg,
      k=k,
      m=m,
      schedule=schedule,
      peels=tuple(peels),
      base_uniformity=f_k,
      coloring=c,
      violations=violations)


def peel_pipeline(
    ps: geometry.PointSet,
    cfg: PipelineConfig,
    k: int,
    budget: int = oracles.DEFAULT_BUDGET) -> hg.Coloring:
  """The coloring of `run_pipeline`."""
  return run_pipeline(ps, cfg, k, budget).coloring
