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
"""Polychrome: polychromatic colorings of geometric range hypergraphs."""

from polychrome._src.base import canonical_edge
from polychrome._src.base import color_counts
from polychrome._src.base import hit_counts
from polychrome._src.base import incidence_matrix
from polychrome._src.coloring import base_color_exact
from polychrome._src.coloring import BaseColorer
from polychrome._src.coloring import BudgetExhaustedError
from polychrome._src.coloring import CitedBoundFalsifiedError
from polychrome._src.coloring import color_strips
from polychrome._src.coloring import peel_pipeline
from polychrome._src.coloring import peel_single
from polychrome._src.coloring import PipelineConfig
from polychrome._src.coloring import PipelineRun
from polychrome._src.coloring import preset_case
from polychrome._src.coloring import PRESETS
from polychrome._src.coloring import run_pipeline
from polychrome._src.coloring import strip_cliques
from polychrome._src.constructions import check_containment
from polychrome._src.constructions import Construction
from polychrome._src.constructions import ConstructionTooLargeError
from polychrome._src.constructions import LabeledRealization
from polychrome._src.constructions import mary_tree_hypergraph
from polychrome._src.constructions import RealizationError
from polychrome._src.constructions import RealizationReport
from polychrome._src.constructions import realize_stages
from polychrome._src.constructions import realize_tree
from polychrome._src.constructions import RootedForest
from polychrome._src.constructions import stage_hypergraph
from polychrome._src.constructions import stage_witness_rectangles
from polychrome._src.constructions import tree_witness_ranges
from polychrome._src.constructions import verify_realization
from polychrome._src.edge_coloring import BipartiteMultigraph
from polychrome._src.edge_coloring import edge_color_bipartite
from polychrome._src.geometry import as_rational
from polychrome._src.geometry import check_general_position
from polychrome._src.geometry import from_points
from polychrome._src.geometry import GeneralPositionError
from polychrome._src.geometry import GeneralPositionReport
from polychrome._src.geometry import order_by
from polychrome._src.geometry import OrderKey
from polychrome._src.geometry import Point
from polychrome._src.geometry import point_set
from polychrome._src.geometry import PointSet
from polychrome._src.geometry import random_point_set
from polychrome._src.geometry import Rational
from polychrome._src.geometry import reflect
from polychrome._src.geometry import Reflection
from polychrome._src.hitting_sets import check_shallow_hitting_properties
from polychrome._src.hitting_sets import HIT_BOUNDS
from polychrome._src.hitting_sets import HitCountCertificate
from polychrome._src.hitting_sets import quadrant_hitting_profile
from polychrome._src.hitting_sets import quadrant_shallow_hitting_set
from polychrome._src.hitting_sets import shallowness
from polychrome._src.hitting_sets import ShallowHittingSet
from polychrome._src.hitting_sets import ShallowHittingReport
from polychrome._src.hypergraph import CliqueSystem
from polychrome._src.hypergraph import Coloring
from polychrome._src.hypergraph import coloring
from polychrome._src.hypergraph import hit_profile
from polychrome._src.hypergraph import HitProfile
from polychrome._src.hypergraph import Hypergraph
from polychrome._src.hypergraph import hypergraph
from polychrome._src.hypergraph import is_polychromatic
from polychrome._src.hypergraph import PolychromaticReport
from polychrome._src.hypergraph import union
from polychrome._src.oracles import exact_hitting_cliques
from polychrome._src.oracles import exact_polychromatic
from polychrome._src.oracles import OracleResult
from polychrome._src.oracles import OracleStatus
from polychrome._src.oracles import search_shallow_hitting_set
from polychrome._src.ranges import captures
from polychrome._src.ranges import enumerate_hyperedges
from polychrome._src.ranges import enumerate_union
from polychrome._src.ranges import enumerate_with_witnesses
from polychrome._src.ranges import Family
from polychrome._src.ranges import is_captured
from polychrome._src.ranges import make_range
from polychrome._src.ranges import north_west_quadrants
from polychrome._src.ranges import NotAHyperedgeError
from polychrome._src.ranges import parse_families
from polychrome._src.ranges import QUADRANTS
from polychrome._src.ranges import Range
from polychrome._src.ranges import shrink_witness
from polychrome._src.ranges import STRIPS
from polychrome._src.ranges import witness
from polychrome._src.squares import stretch_to_squares
from polychrome._src.squares import StretchResult
from polychrome._src.svg import render as render_svg

__version__ = "0.1.0"

__all__ = (
    "as_rational",
    "base_color_exact",
    "BaseColorer",
    "BipartiteMultigraph",
    "BudgetExhaustedError",
    "canonical_edge",
    "captures",
    "check_containment",
    "check_general_position",
    "check_shallow_hitting_properties",
    "CitedBoundFalsifiedError",
    "CliqueSystem",
    "color_counts",
    "color_strips",
    "Coloring",
    "coloring",
    "Construction",
    "ConstructionTooLargeError",
    "edge_color_bipartite",
    "enumerate_hyperedges",
    "enumerate_union",
    "enumerate_with_witnesses",
    "exact_hitting_cliques",
    "exact_polychromatic",
    "Family",
    "from_points",
    "GeneralPositionError",
    "GeneralPositionReport",
    "HIT_BOUNDS",
    "hit_counts",
    "hit_profile",
    "HitCountCertificate",
    "HitProfile",
    "Hypergraph",
    "hypergraph",
    "incidence_matrix",
    "is_captured",
    "is_polychromatic",
    "LabeledRealization",
    "make_range",
    "mary_tree_hypergraph",
    "north_west_quadrants",
    "NotAHyperedgeError",
    "OracleResult",
    "OracleStatus",
    "order_by",
    "OrderKey",
    "parse_families",
    "peel_pipeline",
    "peel_single",
    "PipelineConfig",
    "PipelineRun",
    "Point",
    "point_set",
    "PointSet",
    "PolychromaticReport",
    "preset_case",
    "PRESETS",
    "quadrant_hitting_profile",
    "quadrant_shallow_hitting_set",
    "QUADRANTS",
    "random_point_set",
    "Range",
    "Rational",
    "RealizationError",
    "RealizationReport",
    "realize_stages",
    "realize_tree",
    "reflect",
    "Reflection",
    "render_svg",
    "RootedForest",
    "run_pipeline",
    "search_shallow_hitting_set",
    "shallowness",
    "ShallowHittingSet",
    "ShallowHittingReport",
    "shrink_witness",
    "stage_hypergraph",
    "stage_witness_rectangles",
    "stretch_to_squares",
    "StretchResult",
    "strip_cliques",
    "STRIPS",
    "tree_witness_ranges",
    "union",
    "verify_realization",
    "witness",
)

#  _______________________________________________
# / Please don't use symbols in `_src` they are    \
# \ not part of the Polychrome public API.         /
#  -----------------------------------------------
#         \   ^__^
#          \  (oo)\_______
#             (__)\       )\/\
#                 ||----w |
#                 ||     ||
#
