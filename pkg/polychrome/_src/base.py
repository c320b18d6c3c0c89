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
"""Common utilities for polychrome functions."""

from typing import Iterable, Sequence, Tuple

import chex
import jax.numpy as jnp
import numpy as np

Array = chex.Array
Hyperedge = Tuple[int, ...]


def canonical_edge(ids: Iterable[int]) -> Hyperedge:
  """Returns the strictly increasing tuple of the given vertex ids."""
  return tuple(sorted(set(ids)))


def canonical_edges(edges: Iterable[Iterable[int]]) -> Tuple[Hyperedge, ...]:
  """Returns duplicate-free hyperedges, each sorted, in lexicographic order."""
  return tuple(sorted({canonical_edge(e) for e in edges}))


def incidence_matrix(edges: Sequence[Hyperedge], n: int) -> np.ndarray:
  """Builds the `[num_edges, n]` 0/1 edge-vertex incidence matrix.

  Args:
    edges: hyperedges over the vertex ids `0..n-1`.
    n: number of vertices.

  Returns:
    an int32 array with a 1 at `[e, v]` whenever vertex `v` lies in edge `e`.
  """
  incidence = np.zeros((len(edges), n), dtype=np.int32)
  for row, edge in enumerate(edges):
    incidence[row, list(edge)] = 1
  return incidence


def one_hot(colors: Array, num_colors: int, dtype=jnp.int32) -> Array:
  """Returns a one-hot version of colors taking values in `1..num_colors`.

  Args:
    colors: an integer tensor of colors; color `c` maps to column `c - 1`.
    num_colors: number of classes in the one-hot dimension.
    dtype: the dtype.

  Returns:
    The one-hot tensor. If colors' shape is [A, B, ...], shape is
    [A, B, ..., num_colors].
  """
  labels = jnp.arange(1, num_colors + 1)
  for _ in range(colors.ndim):
    labels = jnp.expand_dims(labels, axis=0)
  return jnp.array(colors[..., jnp.newaxis] == labels, dtype=dtype)


def color_counts(incidence: Array, colors: Array, num_colors: int) -> Array:
  """Counts, for every edge, how many of its vertices carry each color.

  Args:
    incidence: `[E, n]` incidence matrix.
    colors: `[n]` colors in `1..num_colors`.
    num_colors: the number of colors `k`.

  Returns:
    an `[E, k]` array of per-edge color multiplicities.
  """
  return jnp.matmul(incidence, one_hot(colors, num_colors))


def hit_counts(incidence: Array, members: Array) -> Array:
  """Returns `|E ∩ X|` for every edge, given the 0/1 membership vector of X."""
  return jnp.matmul(incidence, members)
