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
"""Unit tests for `edge_coloring.py`."""

import itertools

from absl.testing import absltest
from absl.testing import parameterized

import numpy as np
from polychrome._src import edge_coloring


def _is_proper(g, colors, k):
  seen = {}
  for i, color in enumerate(colors):
    if not 1 <= color <= k:
      return False
    for end in g.endpoints(i):
      if (end, color) in seen:
        return False
      seen[(end, color)] = i
  return True


class EdgeColorBipartiteTest(parameterized.TestCase):

  def test_two_by_two_cliques(self):
    g = edge_coloring.BipartiteMultigraph(
        num_left=2, num_right=2,
        edges=(('p1', 0, 1), ('p2', 0, 0), ('p3', 1, 1), ('p4', 1, 0)))
    colors = edge_coloring.edge_color_bipartite(g, 2)
    self.assertTrue(_is_proper(g, colors, 2))
    self.assertTrue(_is_proper(g, (1, 2, 2, 1), 2))
    proper = [c for c in itertools.product((1, 2), repeat=4)
              if _is_proper(g, c, 2)]
    self.assertIn(colors, proper)

  def test_single_loop(self):
    g = edge_coloring.BipartiteMultigraph(
        num_left=1, num_right=0, edges=(('p', 0, None),))
    self.assertEqual(edge_coloring.edge_color_bipartite(g, 1), (1,))

  @parameterized.parameters(1, 3, 5)
  def test_star(self, k):
    g = edge_coloring.BipartiteMultigraph(
        num_left=1, num_right=k,
        edges=tuple((j, 0, j) for j in range(k)))
    colors = edge_coloring.edge_color_bipartite(g, k)
    self.assertCountEqual(colors, range(1, k + 1))

  def test_degree_violation(self):
    g = edge_coloring.BipartiteMultigraph(
        num_left=1, num_right=2,
        edges=(('a', 0, 0), ('b', 0, 1), ('c', 0, None)))
    with self.assertRaisesRegex(ValueError, 'degree above 2'):
      edge_coloring.edge_color_bipartite(g, 2)

  def test_invalid_edges(self):
    with self.assertRaisesRegex(ValueError, 'no endpoint'):
      edge_coloring.BipartiteMultigraph(
          num_left=1, num_right=1, edges=(('a', None, None),))
    with self.assertRaisesRegex(ValueError, 'out of range'):
      edge_coloring.BipartiteMultigraph(
          num_left=1, num_right=1, edges=(('a', 0, 3),))

  @parameterized.parameters(2, 3, 4)
  def test_random_regular_multigraphs(self, k):
    rng = np.random.RandomState(k)
    for _ in range(25):
      size = rng.randint(2, 8)
      # Union of k random perfect matchings, with some edges cut into loops.
      edges = []
      for _ in range(k):
        for left, right in enumerate(rng.permutation(size)):
          cut = rng.uniform()
          if cut < 0.15:
            edges.append((len(edges), int(left), None))
          elif cut < 0.3:
            edges.append((len(edges), None, int(right)))
          else:
            edges.append((len(edges), int(left), int(right)))
      g = edge_coloring.BipartiteMultigraph(
          num_left=size, num_right=size, edges=tuple(edges))
      colors = edge_coloring.edge_color_bipartite(g, k)
      self.assertTrue(_is_proper(g, colors, k))


if __name__ == '__main__':
  absltest.main()
