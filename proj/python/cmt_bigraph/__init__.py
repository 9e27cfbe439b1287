# Copyright 2026 The cmt-bigraph Authors.
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

"""Cohen-Macaulay codimension of bipartite graphs."""

import json

from ._core import (
    BipartiteGraph,
    CmtError,
    ParseError,
    SizeLimitError,
    builtin_names,
    cm_codim,
    contract,
    disjoint_union,
    enumerate_cm,
    enumerate_unmixed,
    expand,
    predicted_codim,
)
from . import _core

__all__ = [
    "BipartiteGraph",
    "CmtError",
    "ParseError",
    "SizeLimitError",
    "builtin_names",
    "classify",
    "cm_codim",
    "contract",
    "disjoint_union",
    "enumerate_cm",
    "enumerate_sharp_cmt",
    "enumerate_unmixed",
    "expand",
    "oracle",
    "parse_graph",
    "predicted_codim",
    "verify",
    "verify_graph",
]


def parse_graph(text):
    return BipartiteGraph.parse(text)


def classify(g):
    """Structural classification as a dict (same fields as `cmt classify`)."""
    return json.loads(_core._classify(g))


def oracle(g, max_t=-1):
    """Homological data of Ind(g); CM_t rows for t <= max_t when max_t >= 0."""
    return json.loads(_core._oracle(g, max_t))


def verify_graph(g):
    return json.loads(_core._verify_graph(g))


def verify(d):
    """Classifier against oracle on every unmixed graph with d matched pairs."""
    return json.loads(_core._verify(d))


def enumerate_sharp_cmt(t, max_total=0):
    return json.loads(_core._enumerate_sharp_cmt(t, max_total))
