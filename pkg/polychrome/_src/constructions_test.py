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
"""Unit tests for `constructions.py`."""

import time

from absl.testing import absltest
from absl.testing import parameterized

from polychrome._src import constructions
from polychrome._src import geometry
from polychrome._src import oracles
from polychrome._src import ranges

Family = ranges.Family


class TreeHypergraphTest(parameterized.TestCase):

  def test_binary(self):
    c = constructions.mary_tree_hypergraph(2)
    self.assertEqual(c.hypergraph.n, 3)
    self.assertEqual(c.hypergraph.edges, ((0, 1), (0, 2), (1, 2)))
    self.assertEqual(c.group_edges, ((1, 2),))

  def test_ternary_counts(self):
    c = constructions.mary_tree_hypergraph(3)
    self.assertEqual(c.hypergraph.n, 13)
    self.assertLen(c.group_edges, 4)
    self.assertLen(c.path_edges, 9)
    self.assertEqual(c.hypergraph.num_edges, 13)

  @parameterized.parameters(2, 3, 4, 5)
  def test_vertex_count_and_uniformity(self, m):
    c = constructions.mary_tree_hypergraph(m)
    self.assertEqual(c.hypergraph.n, (m**m - 1) // (m - 1))
    self.assertEqual(c.hypergraph.uniformity, m)
    forest = c.forest
    for v in range(forest.num_vertices):
      if forest.parent[v] >= 0:
        self.assertEqual(forest.level[v], forest.level[forest.parent[v]] + 1)

  def test_budget(self):
    with self.assertRaises(constructions.ConstructionTooLargeError) as cm:
      constructions.mary_tree_hypergraph(5, max_vertices=100)
    self.assertEqual(cm.exception.count, 781)

  def test_invalid_arity(self):
    with self.assertRaises(ValueError):
      constructions.mary_tree_hypergraph(1)

  @parameterized.parameters(2, 3)
  def test_not_two_colorable(self, m):
    start = time.time()
    c = constructions.mary_tree_hypergraph(m)
    result = oracles.exact_polychromatic(c.hypergraph, 2)
    self.assertEqual(result.status, oracles.OracleStatus.UNSAT)
    self.assertLess(time.time() - start, 1.0)

  def test_no_hitting_pairs(self):
    c = constructions.mary_tree_hypergraph(2)
    result = oracles.exact_hitting_cliques(c.hypergraph, 2)
    self.assertEqual(result.status, oracles.OracleStatus.UNSAT)


class RealizeTreeTest(parameterized.TestCase):

  @parameterized.parameters(2, 3, 4)
  def test_realization(self, m):
    r = constructions.realize_tree(m)
    self.assertTrue(constructions.verify_realization(r).ok)
    self.assertTrue(geometry.check_general_position(r.ps).ok)
    c = r.construction
    self.assertContainsSubset(
        c.path_edges, ranges.enumerate_hyperedges(r.ps, Family.SW, m))
    self.assertContainsSubset(
        c.group_edges, ranges.enumerate_hyperedges(r.ps, Family.DS, m))

  @parameterized.parameters(2, 3)
  def test_root_is_bottom_left(self, m):
    r = constructions.realize_tree(m)
    root = r.vmap['r']
    self.assertEqual(r.ps.by_x[0], root)
    self.assertEqual(r.ps.by_y[0], root)

  def test_quadrant_witnesses_capture_paths(self):
    r = constructions.realize_tree(3)
    forest = r.construction.forest
    for name, quadrant in constructions.tree_witness_ranges(r).items():
      v = r.vmap[name]
      self.assertEqual(ranges.captures(quadrant, r.ps), forest.path(v))


class StageHypergraphTest(parameterized.TestCase):

  def test_counts(self):
    c = constructions.stage_hypergraph(2)
    self.assertEqual(c.hypergraph.n, 16)
    self.assertEqual(c.hypergraph.num_edges, 21)
    self.assertLen(c.group_edges, 9)
    self.assertLen(c.path_edges, 12)
    self.assertEqual(c.hypergraph.uniformity, 2)
    stages = c.forest.stages
    self.assertLen(stages, 7)
    self.assertLen(stages[0], 4)
    for stage in stages[1:]:
      self.assertLen(stage, 2)

  def test_child_stage_order(self):
    forest = constructions.stage_hypergraph(2).forest
    root_stage = forest.stages[0]
    for stage in forest.stages[1:]:
      parents = [forest.parent[v] for v in stage]
      positions = [root_stage.index(p) for p in parents]
      self.assertEqual(positions, sorted(positions))
    parent_sets = {
        tuple(forest.parent[v] for v in s) for s in forest.stages[1:]}
    self.assertLen(parent_sets, 6)

  def test_stages_partition_into_edges(self):
    c = constructions.stage_hypergraph(2)
    for stage in c.forest.stages:
      blocks = [stage[i:i + 2] for i in range(0, len(stage), 2)]
      for block in blocks:
        self.assertIn(block, c.group_edges)

  def test_trivial_order(self):
    c = constructions.stage_hypergraph(1)
    self.assertEqual(c.hypergraph.edges, ((0,),))

  def test_too_large(self):
    with self.assertRaisesRegex(
        constructions.ConstructionTooLargeError, '4686825') as cm:
      constructions.stage_hypergraph(3)
    self.assertEqual(cm.exception.count, 4686825)

  def test_not_two_colorable(self):
    start = time.time()
    c = constructions.stage_hypergraph(2)
    result = oracles.exact_polychromatic(c.hypergraph, 2)
    self.assertEqual(result.status, oracles.OracleStatus.UNSAT)
    self.assertLess(time.time() - start, 1.0)


class RealizeStagesTest(parameterized.TestCase):

  def setUp(self):
    super().setUp()
    self.r = constructions.realize_stages(2)

  def test_verified(self):
    self.assertTrue(constructions.verify_realization(self.r).ok)
    self.assertTrue(geometry.check_general_position(self.r.ps).ok)
    c = self.r.construction
    self.assertContainsSubset(
        c.group_edges, ranges.enumerate_hyperedges(self.r.ps, Family.HS, 2))
    self.assertContainsSubset(
        c.path_edges, ranges.enumerate_hyperedges(self.r.ps, Family.BL, 2))

  def test_bands_disjoint(self):
    bands = sorted(self.r.bands)
    for (_, hi), (lo, _) in zip(bands, bands[1:]):
      self.assertLess(hi, lo)
    for stage, (lo, hi) in zip(self.r.construction.forest.stages,
                               self.r.bands):
      for v in stage:
        self.assertBetween(self.r.ps.y(v), lo, hi)

  def test_stages_ascending(self):
    for stage in self.r.construction.forest.stages:
      xs = [self.r.ps.x(v) for v in stage]
      ys = [self.r.ps.y(v) for v in stage]
      self.assertEqual(xs, sorted(xs))
      self.assertEqual(ys, sorted(ys))

  def test_rectangles_capture_paths(self):
    forest = self.r.construction.forest
    rects = constructions.stage_witness_rectangles(self.r)
    self.assertLen(rects, 16)
    for name, rect in rects.items():
      v = self.r.vmap[name]
      self.assertEqual(ranges.captures(rect, self.r.ps), forest.path(v))

  def test_moved_point_breaks_realization(self):
    root_stage = self.r.construction.forest.stages[0]
    v = root_stage[0]
    top = max(hi for _, hi in self.r.bands)
    points = [p._replace(y=top + 1) if p.id == v else p
              for p in self.r.ps.points]
    moved = self.r.replace(ps=geometry.from_points(points))
    report = constructions.verify_realization(moved)
    self.assertFalse(report.ok)
    self.assertIn((root_stage[0], root_stage[1]), report.missing)


if __name__ == '__main__':
  absltest.main()
