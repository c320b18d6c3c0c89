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
"""Command line front end.

  polychrome gen tree|stages --m=M --out-prefix=P
  polychrome gen points --n=N --seed=S --out=F
  polychrome enum --points=F --families=nw,hs --m=M --out=F2
  polychrome color strips|peel-single|pipeline --points=F --k=K --out=C
  polychrome oracle polychromatic|hitting-cliques|shallow-hitting-set --hg=F
  polychrome verify coloring|realization|hitting-sets ...
  polychrome render --points=F [--coloring=C] [--ranges=R] --out=out.svg

`gen tree` and `gen stages` write `P.points.json`, `P.hg.json` and
`P.vmap.json`. Exit codes: 0 success, 1 property violated or UNSAT, 2 usage
error, 3 search budget exhausted. The default of `--budget` is read from the
environment variable `POLYCHROME_BUDGET`.
"""

import os
import sys
from typing import Callable, Dict, Sequence, Tuple

from absl import app
from absl import flags
from absl import logging
from polychrome._src import coloring
from polychrome._src import constructions
from polychrome._src import geometry
from polychrome._src import hitting_sets
from polychrome._src import hypergraph as hg
from polychrome._src import oracles
from polychrome._src import ranges
from polychrome._src import serialization
from polychrome._src import svg

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

BUDGET_ENV = 'POLYCHROME_BUDGET'

FLAGS = flags.FLAGS

_M = flags.DEFINE_integer('m', None, 'Uniformity.')
_N = flags.DEFINE_integer('n', None, 'Number of random points.')
_SEED = flags.DEFINE_integer('seed', 0, 'Seed of the random point set.')
_K = flags.DEFINE_integer('k', None, 'Number of colors, or clique size.')
_T = flags.DEFINE_integer(
    't', None, 'Shallowness; peel-single derives it from --families if unset.')
_FAMILIES = flags.DEFINE_string(
    'families', None, 'Comma separated range families, e.g. nw,hs,bl.')
_PRESET = flags.DEFINE_enum(
    'preset', None, sorted(coloring.PRESETS), 'Pipeline configuration.')
_BUDGET = flags.DEFINE_integer(
    'budget', None,
    f'Search node budget; defaults to ${BUDGET_ENV} or '
    f'{oracles.DEFAULT_BUDGET}.')
_POINTS = flags.DEFINE_string('points', None, 'Point-set JSON file.')
_HG = flags.DEFINE_string('hg', None, 'Hypergraph JSON file.')
_COLORING = flags.DEFINE_string('coloring', None, 'Coloring JSON file.')
_RANGES = flags.DEFINE_string('ranges', None, 'Ranges JSON file to draw.')
_PREFIX = flags.DEFINE_string(
    'prefix', None, 'Prefix of the files written by `gen tree|stages`.')
_OUT_PREFIX = flags.DEFINE_string(
    'out-prefix', None, 'Prefix of the files to write.')
flags.DEFINE_alias('out_prefix', 'out-prefix')
_OUT = flags.DEFINE_string('out', None, 'Output file.')
_REPORT = flags.DEFINE_string(
    'report', None, 'Where to write the pipeline report JSON.')
_TITLE = flags.DEFINE_string('title', None, 'Caption of the figure.')

_HOLDERS = (_M, _N, _SEED, _K, _T, _FAMILIES, _PRESET, _BUDGET, _POINTS, _HG,
            _COLORING, _RANGES, _PREFIX, _OUT_PREFIX, _OUT, _REPORT, _TITLE)


def _require(holder: flags.FlagHolder):
  if holder.value is None:
    raise app.UsageError(f'--{holder.name} is required.', EXIT_USAGE)
  return holder.value


def _budget() -> int:
  if _BUDGET.value is not None:
    return _BUDGET.value
  value = os.environ.get(BUDGET_ENV)
  if not value:
    return oracles.DEFAULT_BUDGET
  try:
    return int(value)
  except ValueError as e:
    raise app.UsageError(
        f'${BUDGET_ENV} must be an integer, got {value!r}.', EXIT_USAGE) from e


def _points() -> geometry.PointSet:
  return serialization.points_from_json(serialization.load(_require(_POINTS)))


def _hypergraph() -> hg.Hypergraph:
  return serialization.hypergraph_from_json(serialization.load(_require(_HG)))


def _families() -> Tuple[ranges.Family, ...]:
  return ranges.parse_families(_require(_FAMILIES))


def _save_realization(prefix: str, r: constructions.LabeledRealization) -> int:
  serialization.save(
      f'{prefix}.points.json', serialization.points_to_json(r.ps))
  serialization.save(
      f'{prefix}.hg.json', serialization.hypergraph_to_json(r.intended, r.m))
  serialization.save(f'{prefix}.vmap.json', serialization.vmap_to_json(r.vmap))
  print(f'{r.intended.n} vertices, {r.intended.num_edges} hyperedges')
  return EXIT_OK


def _gen_tree() -> int:
  r = constructions.realize_tree(_require(_M))
  return _save_realization(_require(_OUT_PREFIX), r)


def _gen_stages() -> int:
  r = constructions.realize_stages(_require(_M))
  return _save_realization(_require(_OUT_PREFIX), r)


def _gen_points() -> int:
  ps = geometry.random_point_set(_SEED.value, _require(_N))
  serialization.save(_require(_OUT), serialization.points_to_json(ps))
  return EXIT_OK


def _enum() -> int:
  ps = _points()
  m = _require(_M)
  edges = ranges.enumerate_union(ps, _families(), m)
  h = hg.hypergraph(max(ps.ids, default=-1) + 1, edges)
  serialization.save(_require(_OUT), serialization.hypergraph_to_json(h, m))
  print(f'{h.num_edges} hyperedges')
  return EXIT_OK


def _save_coloring(c: hg.Coloring) -> int:
  serialization.save(_require(_OUT), serialization.coloring_to_json(c))
  return EXIT_OK


def _color_strips() -> int:
  return _save_coloring(coloring.color_strips(_points(), _require(_K)))


def _color_peel_single() -> int:
  return _save_coloring(coloring.peel_single(
      _points(), _families(), _T.value, _require(_K)))


def _color_pipeline() -> int:
  cfg = coloring.preset_case(_require(_PRESET))
  result = coloring.run_pipeline(_points(), cfg, _require(_K), _budget())
  _save_coloring(result.coloring)
  if _REPORT.value:
    serialization.save(
        _REPORT.value, serialization.pipeline_report_to_json(result))
  print(f'm={result.m} violations={result.violations}')
  return EXIT_OK if result.ok else EXIT_VIOLATED


def _report_oracle(result: oracles.OracleResult, witness_json) -> int:
  print(f'{result.status.value} ({result.nodes} nodes)')
  if result.status is oracles.OracleStatus.BUDGET_EXHAUSTED:
    return EXIT_BUDGET
  if not result.is_sat:
    return EXIT_VIOLATED
  if _OUT.value:
    serialization.save(_OUT.value, witness_json(result.witness))
  return EXIT_OK


def _oracle_polychromatic() -> int:
  result = oracles.exact_polychromatic(_hypergraph(), _require(_K), _budget())
  return _report_oracle(result, serialization.coloring_to_json)


def _oracle_hitting_cliques() -> int:
  result = oracles.exact_hitting_cliques(
      _hypergraph(), _require(_K), _budget())
  return _report_oracle(
      result, lambda w: {'k': w.k, 'cliques': [list(c) for c in w.cliques]})


def _oracle_shallow_hitting_set() -> int:
  t = _require(_T)
  result = oracles.search_shallow_hitting_set(_hypergraph(), t, _budget())
  return _report_oracle(result, lambda w: {'t': t, 'ids': list(w)})


def _verify_coloring() -> int:
  c = serialization.coloring_from_json(serialization.load(_require(_COLORING)))
  report = hg.is_polychromatic(_hypergraph(), c)
  if report.ok:
    print('OK')
    return EXIT_OK
  print(f'{len(report.violations)} hyperedges miss a color: '
        f'{[list(e) for e in report.violations[:10]]}')
  return EXIT_VIOLATED


def _verify_realization() -> int:
  prefix = _require(_PREFIX)
  ps = serialization.points_from_json(
      serialization.load(f'{prefix}.points.json'))
  h = serialization.hypergraph_from_json(
      serialization.load(f'{prefix}.hg.json'))
  vmap = serialization.vmap_from_json(
      serialization.load(f'{prefix}.vmap.json'))
  if set(vmap.values()) != set(ps.ids):
    raise ValueError('The vertex map does not cover the point ids.')
  report = constructions.check_containment(ps, h, _families(), _require(_M))
  print(f'missing={len(report.missing)} extra={report.extra}')
  return EXIT_OK if report.ok else EXIT_VIOLATED


def _verify_hitting_sets() -> int:
  certificate = hitting_sets.quadrant_hitting_profile(_points(), _require(_M))
  ok = certificate.ok
  for hs in certificate.hitting_sets:
    report = hitting_sets.check_shallow_hitting_properties(hs)
    if not report.ok:
      ok = False
      print(f'{hs.orientation.value}: {"; ".join(report.failures)}')
  for row, seen in sorted(certificate.observed.items()):
    print(f'{row}: {list(seen)}')
  if certificate.diagonal_flags:
    print(f'diagonal strips above {hitting_sets.DIAGONAL_BOUND}: '
          f'{list(certificate.diagonal_flags)}')
  return EXIT_OK if ok else EXIT_VIOLATED


def _render() -> int:
  ps = _points()
  c = None
  if _COLORING.value:
    c = serialization.coloring_from_json(serialization.load(_COLORING.value))
  rs = ()
  if _RANGES.value:
    rs = serialization.ranges_from_json(serialization.load(_RANGES.value))
  svg.save(_require(_OUT), svg.render(ps, c, rs, title=_TITLE.value))
  return EXIT_OK


_COMMANDS: Dict[Tuple[str, ...], Callable[[], int]] = {
    ('gen', 'tree'): _gen_tree,
    ('gen', 'stages'): _gen_stages,
    ('gen', 'points'): _gen_points,
    ('enum',): _enum,
    ('color', 'strips'): _color_strips,
    ('color', 'peel-single'): _color_peel_single,
    ('color', 'pipeline'): _color_pipeline,
    ('oracle', 'polychromatic'): _oracle_polychromatic,
    ('oracle', 'hitting-cliques'): _oracle_hitting_cliques,
    ('oracle', 'shallow-hitting-set'): _oracle_shallow_hitting_set,
    ('verify', 'coloring'): _verify_coloring,
    ('verify', 'realization'): _verify_realization,
    ('verify', 'hitting-sets'): _verify_hitting_sets,
    ('render',): _render,
}


def _dispatch(args: Sequence[str]) -> int:
  """Runs the command named by the positional arguments."""
  command = tuple(args)
  try:
    if command not in _COMMANDS:
      known = ', '.join(' '.join(c) for c in sorted(_COMMANDS))
      raise app.UsageError(
          f'Unknown command {" ".join(command)!r}; expected one of: {known}.',
          EXIT_USAGE)
    code = _COMMANDS[command]()
    if code != EXIT_OK:
      logging.error('[polychrome] %s exited with %d', ' '.join(command), code)
    return code
  except app.UsageError as e:
    logging.error('[polychrome] %s', e)
    return e.exitcode
  except coloring.BudgetExhaustedError as e:
    logging.error('[polychrome] %s', e)
    return EXIT_BUDGET
  except coloring.CitedBoundFalsifiedError as e:
    logging.error('[polychrome] %s Instance:\n%s', e,
                  serialization.dumps(e.instance))
    return EXIT_VIOLATED
  except constructions.RealizationError as e:
    logging.error('[polychrome] %s', e)
    return EXIT_VIOLATED
  except (ValueError, KeyError, OSError) as e:
    logging.error('[polychrome] %s: %s', type(e).__name__, e)
    return EXIT_USAGE


def run(argv: Sequence[str]) -> int:
  """Parses `argv` (program name first) and runs the command.

  Flags of this module are reset to their defaults first, so consecutive
  calls do not leak values into each other.

  Args:
    argv: the command line.

  Returns:
    the exit code.
  """
  for holder in _HOLDERS:
    FLAGS[holder.name].unparse()
  try:
    args = FLAGS(list(argv))
  except flags.Error as e:
    logging.error('[polychrome] %s', e)
    return EXIT_USAGE
  return _dispatch(args[1:])


def _parse_flags(argv):
  try:
    return FLAGS(argv)
  except flags.Error as e:
    sys.stderr.write(f'polychrome: {e}\n')
    sys.exit(EXIT_USAGE)


def main():
  app.run(lambda argv: _dispatch(argv[1:]), flags_parser=_parse_flags)


if __name__ == '__main__':
  main()
