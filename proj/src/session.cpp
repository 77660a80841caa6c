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

#include "ccskp/session.hpp"

namespace ccskp {

Session::Session(Process start) : initial_(start), current_(std::move(start)) {}

std::vector<Transition> Session::steps(Direction d) const {
  return d == Direction::Forward ? forward_steps(current_) : backward_steps(current_);
}

std::optional<Transition> Session::apply(Direction d, std::size_t index) {
  auto enabled = steps(d);
  if (index >= enabled.size()) return std::nullopt;
  Transition t = std::move(enabled[index]);
  current_ = t.target;
  history_.push_back(t);
  return t;
}

std::optional<Transition> Session::undo() {
  if (history_.empty()) return std::nullopt;
  Transition back = reverse(history_.back());
  history_.pop_back();
  current_ = back.target;
  return back;
}

Process Session::replay() const {
  Process at = initial_;
  for (const auto& t : history_) {
    auto step = derive(at, t.direction, t.label);
    if (!step) return at;
    at = step->target;
  }
  return at;
}

}  // namespace ccskp
