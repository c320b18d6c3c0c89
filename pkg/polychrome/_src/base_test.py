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
"""Unit tests for `base.py`."""

import functools

from absl.testing import absltest
from absl.testing import parameterized

import chex
import jax
import jax.numpy as jnp
import numpy as np
from polychrome._src import base


class CanonicalEdgesTest(absltest.TestCase):

  def test_sorted_and_deduplicated(self):
    edges = base.canonical_edges([(3, 1), (1, 3), (0, 2), (2, 0, 2)])
    self.assertEqual(edges, ((0, 2), (1, 3)))

  def test_incidence_matrix(self):
    incidence = base.incidence_matrix(((0, 2), (1, 2)), 3)
    np.testing.assert_array_equal(incidence, [[1, 0, 1], [0, 1, 1]])


class OneHotTest(parameterized.TestCase):

  def test_one_hot(self):
    colors = jnp.array([[1, 2, 3], [1, 2, 2]])
    expected_result = jnp.array([
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 1, 0], [0, 1, 0]]])
    result = base.one_hot(colors, 3)
    np.testing.assert_array_equal(result, expected_result)


class CountsTest(parameterized.TestCase):

  def setUp(self):
    super().setUp()
    self.incidence = jnp.array(base.incidence_matrix(((0, 1), (1, 2, 3)), 4))
    self.colors = jnp.array([1, 2, 2, 2])

  @chex.variants(with_jit=True, without_jit=True)
  def test_color_counts(self):
    color_counts = self.variant(base.color_counts, static_argnums=2)
    counts = color_counts(self.incidence, self.colors, 2)
    np.testing.assert_array_equal(counts, [[1, 1], [0, 3]])

  @chex.variants(with_jit=True, without_jit=True)
  def test_hit_counts(self):
    hit_counts = self.variant(base.hit_counts)
    counts = hit_counts(self.incidence, jnp.array([0, 1, 0, 1]))
    np.testing.assert_array_equal(counts, [1, 2])

  def test_batched_color_counts(self):
    colors = jnp.stack([self.colors, jnp.array([1, 1, 2, 1])])
    counts = jax.vmap(
        functools.partial(base.color_counts, num_colors=2),
        in_axes=(None, 0))(self.incidence, colors)
    np.testing.assert_array_equal(
        counts, [[[1, 1], [0, 3]], [[2, 0], [2, 1]]])


if __name__ == '__main__':
  absltest.main()
