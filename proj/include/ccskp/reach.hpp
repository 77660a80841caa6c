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

#ifndef CCSKP_REACH_HPP
#define CCSKP_REACH_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ccskp/lts.hpp"

namespace ccskp {

inline constexpr std::size_t kDefaultStateCap = 100000;

struct GraphOptions {
  std::size_t state_cap = kDefaultStateCap;
  /// Extra keys offered to forward steps besides the least absent one.
  /// Needed to reach states whose keys are not canonical.
  std::vector<Key> key_pool;
};

class StateCapExceeded : public std::runtime_error {
 public:
  explicit StateCapExceeded(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class StateNotInGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotReachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonUniqueOrigin : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A sequence of composable combined transitions.
struct Path {
  Process source;
  Process target;
  std::vector<Transition> steps;

  std::size_t length() const { return steps.size(); }
};

/// Re-derives every step and checks that consecutive steps compose.
bool is_valid_path(const Path& p);

/// The combined-transition closure of one or more roots. States are
/// alpha-canonical; each edge is stored once as a forward transition, its
/// backward dual being reverse(edge).
class TransitionGraph {
 public:
  struct Edge {
    std::size_t source;
    std::size_t target;
    Transition transition;
  };

  const std::vector<Process>& roots() const { return roots_; }
  const std::vector<Process>& states() const { return states_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Index of the state alpha-equivalent to `p`, if any.
  std::optional<std::size_t> find_state(const Process& p) const;
  std::size_t component_of(std::size_t state) const { return component_[state]; }
  std::size_t component_count() const { return component_count_; }
  /// Edge indices touching `state`, in either direction.
  const std::vector<std::size_t>& incident(std::size_t state) const { return incident_[state]; }

 private:
  friend TransitionGraph build_graph(const std::vector<Process>& roots, const GraphOptions& options);

  std::vector<Process> roots_;
  std::vector<Process> states_;
  std::vector<Edge> edges_;
  std::unordered_map<Process, std::size_t, ProcessHash> index_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::size_t> component_;
  std::size_t component_count_ = 0;
};

/// Breadth-first closure under forward and backward steps. Deterministic
/// state and edge order. Throws StateCapExceeded past options.state_cap.
TransitionGraph build_graph(const std::vector<Process>& roots, const GraphOptions& options = {});
TransitionGraph build_graph(const Process& root, const GraphOptions& options = {});

/// A shortest combined path inside `g`. Throws StateNotInGraph.
std::optional<Path> find_path(const TransitionGraph& g, const Process& x, const Process& y);

/// True iff some standard state shares a component with `p`.
bool is_reachable(const Process& p, const GraphOptions& options = {});

/// The unique standard state connected to `p`. Throws NotReachable, or
/// NonUniqueOrigin if the component holds several standard states.
Process origin(const Process& p, const GraphOptions& options = {});

/// A path from t1's source to t2's source, searched in the graph rooted at
/// t1's source with the keys of both sources on offer.
std::optional<Path> connected(const Transition& t1, const Transition& t2, const GraphOptions& options = {});

/// Undoes the first enabled backward step until none is left. Ends in the
/// origin exactly when `p` is reachable.
Path backward_normalize(const Process& p);

/// Projects a path between sums onto the left addends, dropping the steps
/// taken by the right addend. Empty when the source is not a sum or a
/// projected step fails to re-derive.
std::optional<Path> project_left(const Path& p);

}  // namespace ccskp

#endif  // CCSKP_REACH_HPP
