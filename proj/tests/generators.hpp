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

// Random term generators for property tests. Seeded, so failures replay.

#ifndef CCSKP_TESTS_GENERATORS_HPP
#define CCSKP_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include "ccskp/prooflabel.hpp"
#include "ccskp/syntax.hpp"

namespace ccskp::testing {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Label label() {
    static const char* kNames[] = {"a", "b", "c"};
    std::size_t i = below(7);
    if (i == 6) return Label::tau();
    Name n{kNames[i / 2]};
    return i % 2 ? Label::output(n) : Label::input(n);
  }

  // Terms up to `depth`, keyed prefixes included when `keyed` is set.
  Process process(int depth, bool keyed = true) {
    if (depth <= 0) return Process::nil();
    switch (below(keyed ? 7 : 6)) {
      case 0:
        return Process::nil();
      case 1:
      case 2:
        return Process::prefix(label(), process(depth - 1, keyed));
      case 3:
        return Process::sum(process(depth - 1, keyed), process(depth - 1, keyed));
      case 4:
        return Process::par(process(depth - 1, keyed), process(depth - 1, keyed));
      case 5:
        return Process::restrict(Name{below(2) ? "a" : "b"}, process(depth - 1, keyed));
      default:
        return Process::keyed(label(), Key{below(3)}, process(depth - 1, keyed));
    }
  }

  DecoratorPath path(std::size_t max_len) {
    DecoratorPath p(below(max_len + 1));
    for (auto& d : p) d = static_cast<Decorator>(below(4));
    return p;
  }

  // Arbitrary labels, including ill-formed pairs.
  ProofLabel any_label(std::size_t max_len) {
    if (below(3) == 0) {
      Label a = label();
      Label b = label();
      return ProofLabel::sync(path(max_len), Branch{path(max_len), a, Key{below(3)}},
                              Branch{path(max_len), b, Key{below(3)}});
    }
    return ProofLabel::base(path(max_len), label(), Key{below(3)});
  }

 private:
  std::mt19937 rng_;
};

}  // namespace ccskp::testing

#endif  // CCSKP_TESTS_GENERATORS_HPP
