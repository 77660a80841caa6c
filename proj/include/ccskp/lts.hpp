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

#ifndef CCSKP_LTS_HPP
#define CCSKP_LTS_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccskp/prooflabel.hpp"
#include "ccskp/syntax.hpp"

namespace ccskp {

enum class Direction : std::uint8_t { Forward, Backward };

inline Direction flip(Direction d) { return d == Direction::Forward ? Direction::Backward : Direction::Forward; }
std::string to_string(Direction d);

/// Rule names of the proved transition system. Backward derivations use
/// the same names with Direction::Backward.
enum class StepRule : std::uint8_t { Pref, KPref, SumL, SumR, ParL, ParR, Syn, Nu };

std::string rule_name(StepRule r, Direction d);

/// One rule instance, with its conclusion and the evidence for its side
/// condition. Re-checkable by well_formed().
struct DerivationTree {
  StepRule rule = StepRule::Pref;
  Direction direction = Direction::Forward;
  Process source;
  ProofLabel label = ProofLabel::base({}, Label::tau(), Key{});
  Process target;
  std::vector<DerivationTree> premises;

  // kpref: the key of the enclosing prefix, which must differ from key_of(label).
  std::optional<Key> guard_key;
  // parL / parR: keys of the idle component, which must not contain key_of(label).
  std::vector<Key> idle_keys;
  // nu: the restricted name, which label_of(label) must not mention.
  std::optional<Name> restricted;
};

/// Checks every node: rule shape, premise/conclusion agreement and side
/// conditions. Independent of the enumeration and search code.
bool well_formed(const DerivationTree& d);
std::string render(const DerivationTree& d);

struct Transition {
  Process source;
  Direction direction = Direction::Forward;
  ProofLabel label = ProofLabel::base({}, Label::tau(), Key{});
  Process target;
  DerivationTree derivation;

  static Transition from(DerivationTree d);
};

/// Same endpoints, direction and label. Derivations are determined by those.
bool operator==(const Transition& a, const Transition& b);

/// Picks the key used by `pref` during forward enumeration.
using FreshKeyPolicy = std::function<Key(const Process& root)>;
FreshKeyPolicy least_absent_policy();

std::vector<Transition> forward_steps(const Process& p, const FreshKeyPolicy& fresh = least_absent_policy());
std::vector<Transition> backward_steps(const Process& p);
/// Forward steps followed by backward steps.
std::vector<Transition> combined_steps(const Process& p);

/// Checks whether `p` can make a `dir` step labelled exactly `t`. The key
/// inside `t` is taken as given.
std::optional<Transition> derive(const Process& p, Direction dir, const ProofLabel& t);

class LoopLemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The transition run the other way with the same label. Throws
/// LoopLemmaViolation if the reverse cannot be derived.
Transition reverse(const Transition& t);

/// `<source> --F <label>--> <target>`
std::string to_line(const Transition& t);

}  // namespace ccskp

#endif  // CCSKP_LTS_HPP
