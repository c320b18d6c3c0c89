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
"""JSON formats for point sets, hypergraphs, colorings and reports.

Rationals are written as `[numerator, denominator]` pairs of decimal strings
so that round trips are exact. Output is deterministic: keys are sorted, edges
are canonical and every file ends with a newline.
"""

import json
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple

from polychrome._src import geometry
from polychrome._src import hypergraph as hg
from polychrome._src import ranges

Json = Dict[str, Any]


def _rational_to_json(value: geometry.Rational):
  return [str(value.numerator), str(value.denominator)]


def _rational_from_json(value) -> geometry.Rational:
  if isinstance(value, (list, tuple)):
    if len(value) != 2:
      raise ValueError(f'Expected [numerator, denominator], got {value!r}.')
    num, den = (int(v) for v in value)
    if den <= 0:
      raise ValueError(f'Denominator must be positive, got {den}.')
    return geometry.Rational(num, den)
  return geometry.as_rational(value)


def points_to_json(ps: geometry.PointSet) -> Json:
  return {'points': [
      {'id': p.id, 'x': _rational_to_json(p.x), 'y': _rational_to_json(p.y)}
      for p in ps.points]}


def points_from_json(data: Mapping[str, Any]) -> geometry.PointSet:
  """Parses a point set; ids are kept and general position is enforced."""
  return geometry.from_points(
      geometry.Point(
          id=int(p['id']),
          x=_rational_from_json(p['x']),
          y=_rational_from_json(p['y'])) for p in data['points'])


def hypergraph_to_json(h: hg.Hypergraph, m: Optional[int] = None) -> Json:
  """Writes `h`; `m` defaults to its uniformity, or 0 without edges."""
  if m is None:
    m = h.uniformity or 0
  return {'n': h.n, 'm': m, 'edges': [list(e) for e in h.edges]}


def hypergraph_from_json(data: Mapping[str, Any]) -> hg.Hypergraph:
  return hg.hypergraph(int(data['n']), data['edges'])


def coloring_to_json(c: hg.Coloring) -> Json:
  return {'k': c.k, 'colors': list(c.colors)}


def coloring_from_json(data: Mapping[str, Any]) -> hg.Coloring:
  return hg.coloring(int(data['k']), [int(c) for c in data['colors']])


def vmap_to_json(vmap: Mapping[str, int]) -> Json:
  return {'vmap': {name: int(v) for name, v in vmap.items()}}


def vmap_from_json(data: Mapping[str, Any]) -> Dict[str, int]:
  vmap = {str(name): int(v) for name, v in data['vmap'].items()}
  if len(set(vmap.values())) != len(vmap):
    raise ValueError('Vertex map is not injective.')
  return vmap


def ranges_to_json(rs: Iterable[ranges.Range]) -> Json:
  return {'ranges': [
      {'family': r.family.value,
       'params': [_rational_to_json(p) for p in r.params]} for r in rs]}


def ranges_from_json(data: Mapping[str, Any]) -> Tuple[ranges.Range, ...]:
  return tuple(
      ranges.make_range(
          r['family'], *(_rational_from_json(p) for p in r['params']))
      for r in data['ranges'])


def pipeline_report_to_json(run) -> Json:
  """Writes a `PipelineRun` from `coloring.run_pipeline`."""
  return {
      'preset': run.config.name,
      'k': run.k,
      'm': run.m,
      'schedule': list(run.schedule),
      'peels': [list(p) for p in run.peels],
      'base_uniformity': run.base_uniformity,
      'violations': dict(run.violations),
  }


def dumps(data: Json) -> str:
  return json.dumps(data, indent=2, sort_keys=True) + '\n'


def save(path: str, data: Json):
  with open(path, 'w') as f:
    f.write(dumps(data))


def load(path: str) -> Json:
  with open(path) as f:
    return json.load(f)
