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

#ifndef CCSKP_PROOFLABEL_HPP
#define CCSKP_PROOFLABEL_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccskp/syntax.hpp"

namespace ccskp {

/// One step of the location string of a proof label.
enum class Decorator : std::uint8_t { SumL, SumR, ParL, ParR };

Decorator opposite(Decorator d);
bool is_par(Decorator d);
std::string to_string(Decorator d);

/// Outermost decorator first.
using DecoratorPath = std::vector<Decorator>;

/// One side of a synchronisation: the location inside the component
/// (below the implicit leading |L or |R), the action and its key.
struct Branch {
  DecoratorPath path;
  Label label;
  Key key;

  auto operator<=>(const Branch&) const = default;
};

/// A decorated keyed label: either a single action `v a[k]` or a
/// synchronisation pair `v <|L v1 a[k], |R v2 ~a[k]>`.
///
/// The representation admits pairs whose branches do not match; is_valid()
/// tells those apart. Transitions only ever carry valid labels.
class ProofLabel {
 public:
  struct Action {
    Label label;
    Key key;
    auto operator<=>(const Action&) const = default;
  };
  struct Pair {
    Branch left;
    Branch right;
    auto operator<=>(const Pair&) const = default;
  };

  static ProofLabel base(DecoratorPath prefix, Label a, Key k);
  static ProofLabel sync(DecoratorPath prefix, Branch left, Branch right);
  /// A branch read as a label on its own (its inner path becomes the prefix).
  static ProofLabel of_branch(const Branch& b);

  const DecoratorPath& prefix() const { return prefix_; }
  bool is_sync() const { return std::holds_alternative<Pair>(core_); }
  bool is_bare() const { return prefix_.empty(); }

  // Valid only for the matching alternative.
  const Action& action() const { return std::get<Action>(core_); }
  const Pair& pair() const { return std::get<Pair>(core_); }

  ProofLabel prepend(Decorator d) const;
  std::optional<Decorator> head() const;
  /// Drops the outermost decorator. Requires a non-empty prefix.
  ProofLabel tail() const;
  /// Total number of decorators, including those inside sync branches.
  std::size_t decorator_count() const;

  auto operator<=>(const ProofLabel&) const = default;

 private:
  ProofLabel(DecoratorPath prefix, std::variant<Action, Pair> core)
      : prefix_(std::move(prefix)), core_(std::move(core)) {}

  DecoratorPath prefix_;
  std::variant<Action, Pair> core_;
};

/// The underlying label: the action for a base label, tau for a pair.
Label label_of(const ProofLabel& t);
/// The key; for a pair, the key of the left branch.
Key key_of(const ProofLabel& t);
/// Pairs must join complementary non-tau actions under one key.
bool is_valid(const ProofLabel& t);

/// All valid labels over the given names (with complements and tau) and
/// keys whose total decorator count is at most `max_decorators`. Order is
/// deterministic: by decorator count, then base labels before pairs.
std::vector<ProofLabel> enumerate_valid(std::span<const Name> names, std::span<const Key> keys,
                                        std::size_t max_decorators);

/// `|L.+R.a[1]`, `tau[0]`, `|R.<|L a[2], |R +L.~a[2]>`.
std::string to_string(const ProofLabel& t);
ProofLabel parse_label(std::string_view text);

struct ProofLabelHash {
  std::size_t operator()(const ProofLabel& t) const;
};

}  // namespace ccskp

#endif  // CCSKP_PROOFLABEL_HPP
