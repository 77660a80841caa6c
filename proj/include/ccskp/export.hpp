/* Copyright 2026 The ccskp Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CCSKP_EXPORT_HPP
#define CCSKP_EXPORT_HPP

#include <string>

#include "ccskp/reach.hpp"

namespace ccskp {

/// Graphviz digraph; standard states are drawn as double circles.
std::string to_dot(const TransitionGraph& g);

/// Compact JSON: {"states":[...],"edges":[{"src","dir","label","tgt"}...]}.
/// Edge endpoints are indices into "states".
std::string to_json(const TransitionGraph& g);

/// Compact JSON: {"source","dir","label","target"}.
std::string to_json(const Transition& t);

/// Compact JSON: {"source","target","steps":[transition...]}.
std::string to_json(const Path& p);

}  // namespace ccskp

#endif  // CCSKP_EXPORT_HPP
