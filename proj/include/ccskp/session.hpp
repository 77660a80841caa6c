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

#ifndef CCSKP_SESSION_HPP
#define CCSKP_SESSION_HPP

#include <optional>
#include <vector>

#include "ccskp/lts.hpp"

namespace ccskp {

/// A reversible stepper. Replaying history() from initial() gives current().
class Session {
 public:
  explicit Session(Process start);

  const Process& initial() const { return initial_; }
  const Process& current() const { return current_; }
  const std::vector<Transition>& history() const { return history_; }

  /// Enabled steps of the current process, in listing order.
  std::vector<Transition> steps(Direction d) const;

  /// Applies the `index`-th enabled step in direction `d`. Empty, with the
  /// session unchanged, when there is no such step.
  std::optional<Transition> apply(Direction d, std::size_t index);

  /// Applies the reverse of the last step and drops it from the history.
  /// Empty when the history is empty.
  std::optional<Transition> undo();

  /// The process obtained by replaying the history from initial().
  Process replay() const;

 private:
  Process initial_;
  Process current_;
  std::vector<Transition> history_;
};

}  // namespace ccskp

#endif  // CCSKP_SESSION_HPP
