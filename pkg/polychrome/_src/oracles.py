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
"""Exact searches that certify claims about small hypergraphs.

Every search is exhaustive and budgeted by a node count. Running out of budget
is reported as its own outcome and is never confused with unsatisfiability.
"""

import enum
import itertools
from typing import Any, List, Optional, Sequence

from absl import logging
import chex
from polychrome._src import hypergraph as hg

DEFAULT_BUDGET = 10**8


class OracleStatus(enum.Enum):
  SAT = 'SAT'
  UNSAT = 'UNSAT'
  BUDGET_EXHAUSTED = 'BUDGET_EXHAUSTED'


@chex.dataclass(frozen=True, mappable_dataclass=False)
class OracleResult:
  """Outcome of an exact search.

  Attributes:
    status: SAT, UNSAT or BUDGET_EXHAUSTED.
    witness: the object found when SAT (a `Coloring`, a `CliqueSystem` or a
      tuple of vertex ids), None otherwise.
    nodes: number of search nodes explored.
  """
  status: OracleStatus
  witness: Any
  nodes: int

  @property
  def is_sat(self) -> bool:
    return self.status is OracleStatus.SAT


class _OutOfBudget(Exception):
  pass


class _Counter:

  def __init__(self, budget: int):
    self.budget = budget
    self.nodes = 0

  def tick(self):
    self.nodes += 1
    if self.nodes > self.budget:
      raise _OutOfBudget()


class _ColoringSearch:
  """Backtracking over vertex colors with per-edge color bookkeeping.

  An edge is dead once it misses more colors than it has uncolored vertices.
  An edge with one uncolored vertex and one missing color forces that vertex.
  """

  def __init__(self, h: hg.Hypergraph, k: int, counter: _Counter):
    self._h = h
    self._k = k
    self._counter = counter
    self.colors = [0] * h.n
    self._counts = [[0] * (k + 1) for _ in h.edges]
    self._distinct = [0] * len(h.edges)
    self._uncolored = [len(e) for e in h.edges]
    self._trail = []

  def _assign(self, v: int, c: int):
    self.colors[v] = c
    self._trail.append(v)
    for e in self._h.vertex_edges[v]:
      self._uncolored[e] -= 1
      if not self._counts[e][c]:
        self._distinct[e] += 1
      self._counts[e][c] += 1

  def _undo(self, mark: int):
    while len(self._trail) > mark:
      v = self._trail.pop()
      c = self.colors[v]
      for e in self._h.vertex_edges[v]:
        self._counts[e][c] -= 1
        if not self._counts[e][c]:
          self._distinct[e] -= 1
        self._uncolored[e] += 1
      self.colors[v] = 0

  def _propagate(self, v: int, c: int) -> bool:
    """Assigns `v := c` and its consequences; False on a dead edge."""
    queue = [(v, c)]
    while queue:
      v, c = queue.pop()
      if self.colors[v]:
        if self.colors[v] != c:
          return False
        continue
      self._assign(v, c)
      for e in self._h.vertex_edges[v]:
        missing = self._k - self._distinct[e]
        if missing > self._uncolored[e]:
          return False
        if missing == 1 and self._uncolored[e] == 1:
          free = next(u for u in self._h.edges[e] if not self.colors[u])
          forced = next(
              col for col in range(1, self._k + 1) if not self._counts[e][col])
          queue.append((free, forced))
    return True

  def solve(self, order: Sequence[int], break_symmetry: bool) -> bool:
    """Depth-first search branching on the first uncolored vertex of `order`.

    Frames live on an explicit stack, so the depth is bounded by the number
    of vertices and not by the interpreter's recursion limit.

    Args:
      order: the branching order of the vertices.
      break_symmetry: whether to fix the color of the first decision.

    Returns:
      whether a polychromatic coloring extends the current assignment.
    """
    # Frame: [position in `order`, next color, trail mark, number of colors].
    frames = []
    start = 0
    while True:
      while start < len(order) and self.colors[order[start]]:
        start += 1
      if start == len(order):
        return True
      # Colors are interchangeable, so the first decision can be fixed.
      num_choices = 1 if break_symmetry and not self._trail else self._k
      frames.append([start, 1, len(self._trail), num_choices])
      while True:
        if not frames:
          return False
        frame = frames[-1]
        position, c, mark, num_choices = frame
        self._undo(mark)
        if c > num_choices:
          frames.pop()
          continue
        frame[1] = c + 1
        self._counter.tick()
        if self._propagate(order[position], c):
          start = position + 1
          break


def exact_polychromatic(
    h: hg.Hypergraph,
    k: int,
    budget: int = DEFAULT_BUDGET) -> OracleResult:
  """Decides whether `h` has a polychromatic `k`-coloring.

  A first search branches on vertices by decreasing degree to settle
  satisfiability. When satisfiable, a second search in vertex-id order with
  ascending colors returns the lexicographically first coloring.

  Args:
    h: the hypergraph.
    k: number of colors.
    budget: maximum number of search nodes over both searches.

  Returns:
    an `OracleResult` whose witness is a `Coloring` when SAT.
  """
  if k < 1:
    raise ValueError(f'Number of colors must be positive, got {k}.')
  if any(len(e) < k for e in h.edges):
    logging.info('[exact_polychromatic] UNSAT: an edge has fewer than %d ids',
                 k)
    return OracleResult(status=OracleStatus.UNSAT, witness=None, nodes=0)
  counter = _Counter(budget)
  try:
    degree_order = sorted(
        range(h.n), key=lambda v: (-len(h.vertex_edges[v]), v))
    if not _ColoringSearch(h, k, counter).solve(degree_order, True):
      logging.info('[exact_polychromatic] UNSAT after %d nodes', counter.nodes)
      return OracleResult(
          status=OracleStatus.UNSAT, witness=None, nodes=counter.nodes)
    search = _ColoringSearch(h, k, counter)
    search.solve(range(h.n), False)
  except _OutOfBudget:
    logging.warning('[exact_polychromatic] budget of %d nodes exhausted',
                    budget)
    return OracleResult(
        status=OracleStatus.BUDGET_EXHAUSTED, witness=None, nodes=budget)
  logging.info('[exact_polychromatic] SAT after %d nodes', counter.nodes)
  return OracleResult(
      status=OracleStatus.SAT,
      witness=hg.Coloring(k=k, colors=tuple(search.colors)),
      nodes=counter.nodes)


def exact_hitting_cliques(
    h: hg.Hypergraph,
    k: int,
    budget: int = DEFAULT_BUDGET) -> OracleResult:
  """Searches for pairwise disjoint `k`-sets such that every edge contains one.

  The first edge (in lexicographic order) containing no chosen clique is
  served by branching over its `k`-subsets disjoint from the chosen cliques;
  any useful clique lies inside an edge, so this is complete.

  Args:
    h: the hypergraph.
    k: clique size.
    budget: maximum number of search nodes.

  Returns:
    an `OracleResult` whose witness is a `CliqueSystem` when SAT.
  """
  if k < 1:
    raise ValueError(f'Clique size must be positive, got {k}.')
  if any(len(e) < k for e in h.edges):
    return OracleResult(status=OracleStatus.UNSAT, witness=None, nodes=0)
  counter = _Counter(budget)
  chosen: List[frozenset] = []
  edges = [frozenset(e) for e in h.edges]

  def first_uncovered(start: int) -> int:
    # Edges before `start` stay covered while `chosen` only grows.
    for i in range(start, len(edges)):
      if not any(c <= edges[i] for c in chosen):
        return i
    return len(edges)

  def search() -> bool:
    # Frame: (index of the edge served, iterator over its candidate cliques).
    # `chosen` holds one clique per frame below the top, plus the top's
    # current candidate once it has been tried.
    frames = []
    while True:
      index = first_uncovered(frames[-1][0] if frames else 0)
      if index == len(edges):
        return True
      used = frozenset().union(*chosen)
      frames.append((index, itertools.combinations(
          [v for v in h.edges[index] if v not in used], k)))
      while True:
        if not frames:
          return False
        if len(chosen) == len(frames):
          chosen.pop()
        clique = next(frames[-1][1], None)
        if clique is None:
          frames.pop()
          continue
        counter.tick()
        chosen.append(frozenset(clique))
        break

  try:
    found = search()
  except _OutOfBudget:
    logging.warning('[exact_hitting_cliques] budget of %d nodes exhausted',
                    budget)
    return OracleResult(
        status=OracleStatus.BUDGET_EXHAUSTED, witness=None, nodes=budget)
  logging.info('[exact_hitting_cliques] %s after %d nodes',
               'SAT' if found else 'UNSAT', counter.nodes)
  if not found:
    return OracleResult(
        status=OracleStatus.UNSAT, witness=None, nodes=counter.nodes)
  cliques = tuple(sorted(tuple(sorted(c)) for c in chosen))
  return OracleResult(
      status=OracleStatus.SAT,
      witness=hg.CliqueSystem(k=k, cliques=cliques),
      nodes=counter.nodes)


def search_shallow_hitting_set(
    h: hg.Hypergraph,
    t: int,
    budget: int = DEFAULT_BUDGET) -> OracleResult:
  """Searches for a vertex set hitting every edge between 1 and `t` times.

  Vertices are decided in id order, excluded before included. An edge already
  hit `t` times excludes its undecided vertices; an unhit edge with a single
  undecided vertex includes it.

  Args:
    h: the hypergraph.
    t: shallowness.
    budget: maximum number of search nodes.

  Returns:
    an `OracleResult` whose witness is the sorted tuple of chosen ids when SAT.
  """
  if t < 1:
    raise ValueError(f'Shallowness must be positive, got {t}.')
  counter = _Counter(budget)
  decision: List[Optional[bool]] = [None] * h.n
  hits = [0] * h.num_edges
  undecided = [len(e) for e in h.edges]
  trail: List[int] = []

  def undo(mark: int):
    while len(trail) > mark:
      v = trail.pop()
      for e in h.vertex_edges[v]:
        undecided[e] += 1
        hits[e] -= decision[v]
      decision[v] = None

  def decide(v: int, include: bool) -> bool:
    queue = [(v, include)]
    while queue:
      v, include = queue.pop()
      if decision[v] is not None:
        if decision[v] != include:
          return False
        continue
      decision[v] = include
      trail.append(v)
      for e in h.vertex_edges[v]:
        undecided[e] -= 1
        hits[e] += include
      for e in h.vertex_edges[v]:
        if hits[e] > t or (not hits[e] and not undecided[e]):
          return False
        free = [u for u in h.edges[e] if decision[u] is None]
        if hits[e] == t:
          queue.extend((u, False) for u in free)
        elif not hits[e] and len(free) == 1:
          queue.append((free[0], True))
    return True

  def search() -> bool:
    # Frame: [vertex, number of choices tried, trail mark].
    frames = []
    v = 0
    while True:
      while v < h.n and decision[v] is not None:
        v += 1
      if v == h.n:
        return True
      frames.append([v, 0, len(trail)])
      while True:
        if not frames:
          return False
        frame = frames[-1]
        u, tried, mark = frame
        undo(mark)
        if tried == 2:
          frames.pop()
          continue
        frame[1] = tried + 1
        counter.tick()
        if decide(u, bool(tried)):
          v = u + 1
          break

  if any(not e for e in h.edges):
    return OracleResult(status=OracleStatus.UNSAT, witness=None, nodes=0)
  try:
    found = search()
  except _OutOfBudget:
    logging.warning('[search_shallow_hitting_set] budget of %d nodes exhausted',
                    budget)
    return OracleResult(
        status=OracleStatus.BUDGET_EXHAUSTED, witness=None, nodes=budget)
  logging.info('[search_shallow_hitting_set] t=%d: %s after %d nodes', t,
               'SAT' if found else 'UNSAT', counter.nodes)
  if not found:
    return OracleResult(
        status=OracleStatus.UNSAT, witness=None, nodes=counter.nodes)
  return OracleResult(
      status=OracleStatus.SAT,
      witness=tuple(v for v in range(h.n) if decision[v]),
      nodes=counter.nodes)
