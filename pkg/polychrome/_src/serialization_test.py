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
"""Unit tests for `serialization.py`."""

import json
import os
import shutil
import tempfile

from absl.testing import absltest
from absl.testing import parameterized

from polychrome._src import geometry
from polychrome._src import hypergraph as hg
from polychrome._src import ranges
from polychrome._src import serialization


class PointsTest(parameterized.TestCase):

  def test_format(self):
    ps = geometry.point_set([(0, '1/3'), ('-5/2', 7)])
    self.assertEqual(serialization.points_to_json(ps), {'points': [
        {'id': 0, 'x': ['0', '1'], 'y': ['1', '3']},
        {'id': 1, 'x': ['-5', '2'], 'y': ['7', '1']},
    ]})

  def test_large_values_are_exact(self):
    big = geometry.Rational(3**200 + 1, 2**190)
    ps = geometry.point_set([(big, 0), (1, big + 1)])
    text = serialization.dumps(serialization.points_to_json(ps))
    self.assertEqual(serialization.points_from_json(json.loads(text)), ps)

  def test_keeps_sparse_ids(self):
    ps = geometry.random_point_set(0, 6).subset([1, 4])
    again = serialization.points_from_json(serialization.points_to_json(ps))
    self.assertEqual(again.ids, (1, 4))

  def test_rejects_bad_denominator(self):
    with self.assertRaisesRegex(ValueError, 'Denominator'):
      serialization.points_from_json(
          {'points': [{'id': 0, 'x': ['1', '0'], 'y': ['0', '1']}]})

  def test_rejects_general_position_violation(self):
    with self.assertRaises(geometry.GeneralPositionError):
      serialization.points_from_json({'points': [
          {'id': 0, 'x': ['0', '1'], 'y': ['1', '1']},
          {'id': 1, 'x': ['1', '1'], 'y': ['0', '1']}]})


class HypergraphTest(parameterized.TestCase):

  def test_format(self):
    h = hg.hypergraph(4, [(3, 1), (0, 1)])
    self.assertEqual(serialization.hypergraph_to_json(h),
                     {'n': 4, 'm': 2, 'edges': [[0, 1], [1, 3]]})
    self.assertEqual(
        serialization.hypergraph_from_json(
            serialization.hypergraph_to_json(h)), h)

  def test_empty_keeps_uniformity(self):
    data = serialization.hypergraph_to_json(hg.hypergraph(3), m=5)
    self.assertEqual(data, {'n': 3, 'm': 5, 'edges': []})

  def test_coloring(self):
    c = hg.coloring(3, [1, 3, 2])
    self.assertEqual(serialization.coloring_to_json(c),
                     {'k': 3, 'colors': [1, 3, 2]})
    self.assertEqual(
        serialization.coloring_from_json(serialization.coloring_to_json(c)), c)

  def test_vmap(self):
    data = serialization.vmap_to_json({'r': 0, 'r.0': 1})
    self.assertEqual(data, {'vmap': {'r': 0, 'r.0': 1}})
    with self.assertRaisesRegex(ValueError, 'injective'):
      serialization.vmap_from_json({'vmap': {'r': 0, 'r.0': 0}})

  def test_ranges(self):
    rs = (ranges.make_range('bl', '1/2', 3, -1), ranges.make_range('nw', 0, 0))
    data = serialization.ranges_to_json(rs)
    self.assertEqual(data['ranges'][0], {
        'family': 'bl', 'params': [['1', '2'], ['3', '1'], ['-1', '1']]})
    self.assertEqual(serialization.ranges_from_json(data), rs)


class FilesTest(parameterized.TestCase):

  def test_deterministic_output(self):
    tmp = tempfile.mkdtemp()
    self.addCleanup(shutil.rmtree, tmp)
    path = os.path.join(tmp, 'hg.json')
    h = hg.hypergraph(3, [(1, 2), (0, 1)])
    serialization.save(path, serialization.hypergraph_to_json(h))
    with open(path) as f:
      first = f.read()
    again = serialization.hypergraph_from_json(serialization.load(path))
    serialization.save(path, serialization.hypergraph_to_json(again))
    with open(path) as f:
      self.assertEqual(f.read(), first)
    self.assertTrue(first.endswith('\n'))


if __name__ == '__main__':
  absltest.main()
