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

#include <unordered_set>

#include "ccskp/theorems.hpp"

namespace ccskp {

std::vector<Process> enumerate_processes(const std::vector<Name>& names, std::size_t max_ops) {
  std::vector<Label> actions;
  for (const auto& n : names) {
    actions.push_back(Label::input(n));
    actions.push_back(Label::output(n));
  }
  actions.push_back(Label::tau());

  // by_size[n]: every term with exactly n operators, raw.
  std::vector<std::vector<Process>> by_size(max_ops + 1);
  by_size[0].push_back(Process::nil());
  for (std::size_t n = 1; n <= max_ops; ++n) {
    auto& out = by_size[n];
    for (const auto& body : by_size[n - 1]) {
      for (const auto& a : actions) out.push_back(Process::prefix(a, body));
      for (const auto& x : names) out.push_back(Process::restrict(x, body));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& l : by_size[i]) {
        for (const auto& r : by_size[n - 1 - i]) {
          out.push_back(Process::sum(l, r));
          out.push_back(Process::par(l, r));
        }
      }
    }
  }

  std::vector<Process> result;
  std::unordered_set<Process, ProcessHash> seen;
  for (const auto& bucket : by_size) {
    for (const auto& p : bucket) {
      Process c = canonicalize(p);
      if (seen.insert(c).second) result.push_back(c);
    }
  }
  return result;
}

std::vector<Process> example_processes() {
  return {parse("m | l"), parse("m[0] | l"), parse("a.b | ~b"), parse("a[1].b[1]"),
          parse("a[1].b[2] | ~b[2].~a[1]")};
}

std::vector<Process> faulty_processes() { return {parse("a[1].b[1]"), parse("a[1].b[2] | ~b[2].~a[1]")}; }

}  // namespace ccskp
