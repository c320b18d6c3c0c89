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
"""Unit tests for `ranges.py`."""

import itertools

from absl.testing import absltest
from absl.testing import parameterized

from polychrome._src import geometry
from polychrome._src import ranges

Family = ranges.Family
ENUMERABLE = tuple(f for f in Family if f is not Family.SQ)


def _boundaries(values):
  """One candidate boundary per gap of `values`, plus both outer sides."""
  values = sorted(values)
  if not values:
    return []
  cuts = [values[0] - 1]
  cuts += [(a + b) / 2 for a, b in zip(values, values[1:])]
  return cuts + [values[-1] + 1]


def _grid_hyperedges(ps, family, m):
  """Brute-force enumeration over every combinatorially distinct range."""
  xs = _boundaries([p.x for p in ps.points])
  ys = _boundaries([p.y for p in ps.points])
  sums = _boundaries([p.x + p.y for p in ps.points])
  if family in ranges.QUADRANTS:
    candidates = [(a, b) for a in xs for b in ys]
  elif family in ranges.STRIPS:
    cuts = {Family.HS: ys, Family.VS: xs, Family.DS: sums}[family]
    candidates = list(itertools.combinations(cuts, 2))
  else:
    candidates = [
        (a1, a2, b) for a1, a2 in itertools.combinations(xs, 2) for b in ys]
  edges = set()
  for params in candidates:
    edge = ranges.captures(ranges.Range(family=family, params=params), ps)
    if len(edge) == m:
      edges.add(edge)
  return tuple(sorted(edges))


class CapturesTest(parameterized.TestCase):

  def test_north_west(self):
    ps = geometry.point_set([(1, 1), (6, 2)])
    self.assertEqual(ranges.captures(ranges.make_range('nw', 5, 0), ps), (0,))

  def test_diagonal_strip(self):
    ps = geometry.point_set([(0, 0), (1, 1), (4, '-1/2')])
    self.assertEqual(ranges.captures(ranges.make_range('ds', 1, 3), ps), (1,))

  def test_bottomless(self):
    ps = geometry.point_set([(1, 0), (2, 5)])
    self.assertEqual(
        ranges.captures(ranges.make_range('bl', 0, 10, 1), ps), (0,))

  def test_closed_boundaries(self):
    ps = geometry.point_set([(1, 0), (2, 5)])
    self.assertEqual(
        ranges.captures(ranges.make_range('tl', 1, 2, 0), ps), (0, 1))
    self.assertEqual(
        ranges.captures(ranges.make_range('sq', 1, 0, 5), ps), (0, 1))

  @parameterized.parameters(
      ('vs', (2, 1)),
      ('bl', (0, 0, 1)),
      ('sq', (0, 0, 0)),
      ('nw', (0, 0, 1)),
  )
  def test_invalid_parameters(self, family, params):
    with self.assertRaises(ValueError):
      ranges.make_range(family, *params)

  def test_parse_families(self):
    self.assertEqual(
        ranges.parse_families('vs,HS, nw'), (Family.HS, Family.NW, Family.VS))
    with self.assertRaisesRegex(ValueError, 'Unknown range family'):
      ranges.parse_families('nw,xx')


class EnumerateTest(parameterized.TestCase):

  def setUp(self):
    super().setUp()
    self.ps = geometry.point_set([(1, 1), (2, 3), (3, '5/2'), (4, 4)])

  def test_single_point_window(self):
    ps = geometry.point_set([(0, 0)])
    self.assertEqual(ranges.enumerate_hyperedges(ps, Family.VS, 1), ((0,),))

  def test_north_west(self):
    self.assertEqual(
        ranges.enumerate_hyperedges(self.ps, Family.NW, 2),
        ((0, 1), (1, 2), (1, 3)))

  def test_north_west_sequence_order(self):
    self.assertEqual(
        ranges.north_west_quadrants(self.ps, 2), [(1, 3), (1, 2), (0, 1)])

  @parameterized.parameters(*ENUMERABLE)
  def test_small_instance_matches_grid(self, family):
    for m in range(1, 5):
      self.assertEqual(
          ranges.enumerate_hyperedges(self.ps, family, m),
          _grid_hyperedges(self.ps, family, m))

  @parameterized.parameters(*ENUMERABLE)
  def test_random_instances_match_grid(self, family):
    for seed in range(6):
      ps = geometry.random_point_set(seed, 6 + seed)
      for m in range(1, 5):
        self.assertEqual(
            ranges.enumerate_hyperedges(ps, family, m),
            _grid_hyperedges(ps, family, m),
            msg=f'seed={seed}, m={m}')

  def test_union_matches_grid(self):
    families = (Family.NW, Family.NE, Family.SW, Family.SE, Family.HS,
                Family.VS)
    ps = geometry.random_point_set(11, 10)
    expected = set()
    for family in families:
      expected.update(_grid_hyperedges(ps, family, 3))
    self.assertEqual(
        ranges.enumerate_union(ps, families, 3), tuple(sorted(expected)))

  def test_union_of_single_family(self):
    ps = geometry.random_point_set(2, 9)
    self.assertEqual(
        ranges.enumerate_union(ps, [Family.VS], 3),
        ranges.enumerate_hyperedges(ps, Family.VS, 3))

  @parameterized.parameters(*ranges.STRIPS)
  def test_window_counts(self, family):
    ps = geometry.random_point_set(4, 15)
    for m in range(1, 18):
      self.assertLen(
          ranges.enumerate_hyperedges(ps, family, m), max(0, 15 - m + 1))

  def test_more_points_than_vertices(self):
    self.assertEqual(ranges.enumerate_hyperedges(self.ps, Family.BL, 5), ())

  def test_squares_not_enumerable(self):
    with self.assertRaisesRegex(ValueError, 'no enumeration'):
      ranges.enumerate_hyperedges(self.ps, Family.SQ, 2)

  def test_rotation_maps_north_west_to_south_east(self):
    ps = geometry.point_set([(1, 1), (2, 3)])
    rotated = geometry.reflect(ps, geometry.Reflection.BOTH)
    self.assertEqual(ranges.enumerate_hyperedges(ps, Family.NW, 1),
                     ((0,), (1,)))
    self.assertEqual(
        ranges.enumerate_hyperedges(rotated, Family.SE, 1),
        ranges.enumerate_hyperedges(ps, Family.NW, 1))
    # The top point of `ps` is captured alone by a NW quadrant, and it is the
    # bottom point of the rotated set.
    top = ps.by_y[-1]
    self.assertEqual(rotated.by_y[0], top)
    self.assertTrue(ranges.is_captured(rotated, Family.SE, (top,)))


class WitnessTest(parameterized.TestCase):

  @parameterized.parameters(*ENUMERABLE)
  def test_witness_soundness(self, family):
    ps = geometry.random_point_set(21, 14)
    for m in range(1, 6):
      for edge, r in ranges.enumerate_with_witnesses(ps, family, m).items():
        self.assertEqual(ranges.captures(r, ps), edge)
        self.assertIs(r.family, family)

  def test_not_a_hyperedge(self):
    ps = geometry.point_set([(0, 0), (1, 5), (2, 1)])
    with self.assertRaisesRegex(ranges.NotAHyperedgeError, 'not a hyperedge'):
      ranges.witness(ps, Family.VS, (0, 2))
    self.assertFalse(ranges.is_captured(ps, Family.VS, (0, 2)))
    self.assertTrue(ranges.is_captured(ps, Family.HS, (0, 2)))

  def test_midpoint_boundaries(self):
    ps = geometry.point_set([(0, 0), (2, 5), (4, 1)])
    r = ranges.witness(ps, Family.VS, (1,))
    self.assertEqual(r.params, (1, 3))
    r = ranges.witness(ps, Family.VS, (2,))
    self.assertEqual(r.params, (3, 5))


class ShrinkTest(parameterized.TestCase):

  def test_window_drops_an_end(self):
    ps = geometry.point_set([(i, (3 * i) % 7) for i in range(6)])
    smaller = ranges.shrink_witness(ps, Family.VS, (2, 3, 4))
    self.assertIn(smaller, ((2, 3), (3, 4)))

  def test_north_west_drops_bottommost(self):
    ps = geometry.point_set([(1, 1), (2, 3), (3, '5/2'), (4, 4)])
    self.assertEqual(ranges.shrink_witness(ps, Family.NW, (1, 2)), (1,))

  def test_not_captured(self):
    ps = geometry.point_set([(0, 0), (1, 5), (2, 1)])
    with self.assertRaisesRegex(ranges.NotAHyperedgeError, 'not a hyperedge'):
      ranges.shrink_witness(ps, Family.VS, (0, 2))

  @parameterized.parameters(*ENUMERABLE)
  def test_every_family_is_shrinkable(self, family):
    ps = geometry.random_point_set(5, 12)
    for m in range(2, 6):
      smaller = set(ranges.enumerate_hyperedges(ps, family, m - 1))
      for edge in ranges.enumerate_hyperedges(ps, family, m):
        shrunk = ranges.shrink_witness(ps, family, edge)
        self.assertLen(shrunk, m - 1)
        self.assertTrue(set(shrunk) <= set(edge))
        self.assertIn(shrunk, smaller)


if __name__ == '__main__':
  absltest.main()
