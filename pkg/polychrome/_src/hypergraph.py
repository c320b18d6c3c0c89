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
"""Hypergraphs, colorings and the checks run on them."""

import functools
from typing import Iterable, Mapping, Optional, Sequence, Tuple, Union

import chex
import jax.numpy as jnp
import numpy as np
from polychrome._src import base

Hyperedge = base.Hyperedge


@chex.dataclass(frozen=True, mappable_dataclass=False)
class Hypergraph:
  """Vertices `0..n-1` and lexicographically sorted, duplicate-free edges."""
  n: int
  edges: Tuple[Hyperedge, ...]

  @property
  def num_edges(self) -> int:
    return len(self.edges)

  @property
  def uniformity(self) -> Optional[int]:
    """The common edge size, or None for mixed sizes or no edges."""
    sizes = {len(e) for e in self.edges}
    return sizes.pop() if len(sizes) == 1 else None

  @functools.cached_property
  def incidence(self) -> np.ndarray:
    return base.incidence_matrix(self.edges, self.n)

  @functools.cached_property
  def vertex_edges(self) -> Tuple[Tuple[int, ...], ...]:
    """For every vertex, the indices of the edges containing it."""
    incident = [[] for _ in range(self.n)]
    for i, edge in enumerate(self.edges):
      for v in edge:
        incident[v].append(i)
    return tuple(tuple(e) for e in incident)


def hypergraph(n: int, edges: Iterable[Iterable[int]] = ()) -> Hypergraph:
  """Builds a hypergraph, canonicalising and validating its edges."""
  if n < 0:
    raise ValueError(f'Vertex count must be non-negative, got {n}.')
  edges = base.canonical_edges(edges)
  for edge in edges:
    if not edge:
      raise ValueError('Hyperedges must be nonempty.')
    if edge[0] < 0 or edge[-1] >= n:
      raise ValueError(f'Hyperedge {list(edge)} has ids outside [0, {n}).')
  return Hypergraph(n=n, edges=edges)


def union(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
  """Edge-set union of two hypergraphs on the same vertices."""
  if h1.n != h2.n:
    raise ValueError(
        f'Cannot unite hypergraphs on {h1.n} and {h2.n} vertices.')
  return Hypergraph(n=h1.n, edges=base.canonical_edges(h1.edges + h2.edges))


@chex.dataclass(frozen=True, mappable_dataclass=False)
class Coloring:
  """A total map from vertex ids `0..n-1` to colors `1..k`."""
  k: int
  colors: Tuple[int, ...]

  def __post_init__(self):
    if self.k < 1:
      raise ValueError(f'Number of colors must be positive, got {self.k}.')
    bad = [c for c in self.colors if not 1 <= c <= self.k]
    if bad:
      raise ValueError(f'Colors must lie in [1, {self.k}], got {bad}.')

  def color_class(self, color: int) -> Tuple[int, ...]:
    return tuple(v for v, c in enumerate(self.colors) if c == color)


def coloring(
    k: int,
    colors: Union[Sequence[int], Mapping[int, int]],
    n: Optional[int] = None) -> Coloring:
  """Builds a coloring from a sequence or from an id -> color mapping.

  Args:
    k: number of colors.
    colors: colors by vertex id.
    n: number of vertices; defaults to the size of `colors`.

  Returns:
    the coloring.

  Raises:
    ValueError: if some vertex in `0..n-1` has no color.
  """
  if isinstance(colors, Mapping):
    n = len(colors) if n is None else n
    missing = [v for v in range(n) if v not in colors]
    if missing:
      raise ValueError(f'Partial coloring: vertices {missing} have no color.')
    colors = [colors[v] for v in range(n)]
  colors = tuple(int(c) for c in colors)
  if n is not None and len(colors) != n:
    raise ValueError(
        f'Partial coloring: {len(colors)} colors for {n} vertices.')
  return Coloring(k=k, colors=colors)


@chex.dataclass(frozen=True, mappable_dataclass=False)
class PolychromaticReport:
  violations: Tuple[Hyperedge, ...]

  @property
  def ok(self) -> bool:
    return not self.violations


def is_polychromatic(h: Hypergraph, c: Coloring) -> PolychromaticReport:
  """Lists every edge that misses at least one of the `k` colors.

  Args:
    h: the hypergraph.
    c: a coloring of all `h.n` vertices.

  Returns:
    the report; `ok` iff every edge contains all `k` colors.

  Raises:
    ValueError: if `c` does not color every vertex.
  """
  if len(c.colors) != h.n:
    raise ValueError(
        f'Partial coloring: {len(c.colors)} colors for {h.n} vertices.')
  if not h.edges:
    return PolychromaticReport(violations=())
  counts = base.color_counts(
      jnp.asarray(h.incidence), jnp.asarray(c.colors, dtype=jnp.int32), c.k)
  missing = np.asarray(jnp.any(counts == 0, axis=-1))
  return PolychromaticReport(
      violations=tuple(e for e, bad in zip(h.edges, missing) if bad))


@chex.dataclass(frozen=True, mappable_dataclass=False)
class HitProfile:
  """Per-edge hit counts `|E & X|`; min and max are 0 without edges."""
  min_hits: int
  max_hits: int
  counts: Tuple[int, ...]

  def is_shallow(self, t: int) -> bool:
    """Whether X hits every edge at least once and at most `t` times."""
    return all(1 <= c <= t for c in self.counts)


def hit_profile(h: Hypergraph, members: Iterable[int]) -> HitProfile:
  """Counts how often the vertex set `members` hits each edge of `h`."""
  mask = np.zeros(h.n, dtype=np.int32)
  mask[list(set(members))] = 1
  if not h.edges:
    return HitProfile(min_hits=0, max_hits=0, counts=())
  counts = np.asarray(
      base.hit_counts(jnp.asarray(h.incidence), jnp.asarray(mask))).tolist()
  return HitProfile(
      min_hits=min(counts), max_hits=max(counts), counts=tuple(counts))


@chex.dataclass(frozen=True, mappable_dataclass=False)
class CliqueSystem:
  """Pairwise disjoint vertex sets of size exactly `k`."""
  k: int
  cliques: Tuple[Tuple[int, ...], ...]

  def __post_init__(self):
    seen = set()
    for clique in self.cliques:
      if len(clique) != self.k:
        raise ValueError(f'Clique {list(clique)} does not have {self.k} ids.')
      if seen.intersection(clique):
        raise ValueError(f'Clique {list(clique)} overlaps another clique.')
      seen.update(clique)

  def uncovered(self, h: Hypergraph) -> Tuple[Hyperedge, ...]:
    """Edges of `h` containing none of the cliques."""
    cliques = [frozenset(c) for c in self.cliques]
    return tuple(
        e for e in h.edges if not any(c <= frozenset(e) for c in cliques))

  def covers(self, h: Hypergraph) -> bool:
    return not self.uncovered(h)
