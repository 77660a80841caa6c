# Copyright 2026 The ccskp Authors. All Rights Reserved.
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
"""Reversible CCS with keyed prefixes and proof-labelled transitions."""

import json as _json

from ._core import (
    ParseError,
    Path,
    Process,
    ProofLabel,
    Session,
    StateCapExceeded,
    Transition,
    TransitionGraph,
    backward_steps,
    build_graph,
    connected,
    derive,
    enumerate_valid,
    explain,
    forward_steps,
    holds,
    is_reachable,
    origin,
    parse,
    parse_label,
    realise,
    realize_connected,
    reverse,
)
from ._core import verify as _verify


def verify(suite, **scale):
    """Runs a verification suite and returns its reports as dicts."""
    return _json.loads(_verify(suite, **scale))


__all__ = [
    "ParseError",
    "Path",
    "Process",
    "ProofLabel",
    "Session",
    "StateCapExceeded",
    "Transition",
    "TransitionGraph",
    "backward_steps",
    "build_graph",
    "connected",
    "derive",
    "enumerate_valid",
    "explain",
    "forward_steps",
    "holds",
    "is_reachable",
    "origin",
    "parse",
    "parse_label",
    "realise",
    "realize_connected",
    "reverse",
    "verify",
]
