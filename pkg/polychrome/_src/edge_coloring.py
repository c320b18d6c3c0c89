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
"""Proper edge colorings of bipartite multigraphs with loops."""

import collections
from typing import Dict, Hashable, List, Optional, Tuple

from absl import logging
import chex

# (label, left vertex or None, right vertex or None); a missing side is a loop.
Edge = Tuple[Hashable, Optional[int], Optional[int]]


@chex.dataclass(frozen=True, mappable_dataclass=False)
class BipartiteMultigraph:
  """Edges between `num_left` left and `num_right` right vertices.

  An edge with only one endpoint is a loop at that endpoint; a loop adds one
  to the degree of its vertex.
  """
  num_left: int
  num_right: int
  edges: Tuple[Edge, ...]

  def __post_init__(self):
    for label, left, right in self.edges:
      if left is None and right is None:
        raise ValueError(f'Edge {label!r} has no endpoint.')
      if left is not None and not 0 <= left < self.num_left:
        raise ValueError(f'Edge {label!r}: left vertex {left} out of range.')
      if right is not None and not 0 <= right < self.num_right:
        raise ValueError(f'Edge {label!r}: right vertex {right} out of range.')

  def endpoints(self, i: int) -> List[Tuple[str, int]]:
    _, left, right = self.edges[i]
    ends = []
    if left is not None:
      ends.append(('L', left))
    if right is not None:
      ends.append(('R', right))
    return ends

  def degrees(self) -> Dict[Tuple[str, int], int]:
    degree = collections.Counter()
    for i in range(len(self.edges)):
      for end in self.endpoints(i):
        degree[end] += 1
    return dict(degree)


class _EdgeColors:
  """Colors per edge plus, per vertex, the edge holding each color."""

  def __init__(self, g: BipartiteMultigraph, k: int):
    self.k = k
    self.ends = [g.endpoints(i) for i in range(len(g.edges))]
    self.colors = [0] * len(g.edges)
    self.at = collections.defaultdict(dict)

  def free(self, vertex) -> int:
    return next(c for c in range(1, self.k + 1) if c not in self.at[vertex])

  def paint(self, edge: int, color: int):
    self.colors[edge] = color
    for end in self.ends[edge]:
      self.at[end][color] = edge

  def flip_chain(self, start, alpha: int, beta: int) -> int:
    """Swaps `alpha` and `beta` along the alternating path leaving `start`.

    `beta` must be free at `start`. In a bipartite graph the path never
    reaches a vertex of the other side where `alpha` is free.

    Returns:
      the length of the flipped path.
    """
    path = []
    vertex, color = start, alpha
    while color in self.at[vertex]:
      edge = self.at[vertex][color]
      path.append(edge)
      vertex = next(end for end in self.ends[edge] if end != vertex)
      color = beta if color == alpha else alpha
    for edge in path:
      for end in self.ends[edge]:
        del self.at[end][self.colors[edge]]
    for edge in path:
      self.paint(edge, beta if self.colors[edge] == alpha else alpha)
    return len(path)


def edge_color_bipartite(g: BipartiteMultigraph, k: int) -> Tuple[int, ...]:
  """Colors the edges of `g` with `1..k` so that no two edges at a vertex clash.

  Proper edges are colored one by one; when no color is free at both ends, an
  alternating path is flipped. Loops come last and take the smallest color
  still free at their vertex.

  Args:
    g: the multigraph; every degree must be at most `k`.
    k: number of colors.

  Returns:
    one color per edge of `g`, in edge order.

  Raises:
    ValueError: if some vertex has degree above `k`.
  """
  too_high = {v: d for v, d in g.degrees().items() if d > k}
  if too_high:
    raise ValueError(f'Vertex degree above {k}: {too_high}.')
  state = _EdgeColors(g, k)
  proper = [i for i, ends in enumerate(state.ends) if len(ends) == 2]
  loops = [i for i, ends in enumerate(state.ends) if len(ends) == 1]
  flipped = 0
  for i in proper:
    u, v = state.ends[i]
    alpha, beta = state.free(u), state.free(v)
    if alpha in state.at[v]:
      flipped += state.flip_chain(v, alpha, beta)
    state.paint(i, alpha)
  for i in loops:
    state.paint(i, state.free(state.ends[i][0]))
  logging.info('[edge_color_bipartite] edges: %d, loops: %d, flipped: %d',
               len(proper), len(loops), flipped)
  return tuple(state.colors)
