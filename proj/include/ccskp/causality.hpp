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

#ifndef CCSKP_CAUSALITY_HPP
#define CCSKP_CAUSALITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccskp/prooflabel.hpp"

namespace ccskp {

/// Connectivity, dependence and independence of proof labels.
enum class Relation : std::uint8_t { Conn, Dep, Indep };

std::string to_string(Relation r);
/// "conn", "dep" or "indep".
std::optional<Relation> parse_relation(std::string_view text);

enum class CausalRule : std::uint8_t { A1, A2, C1, C2, P1, P2, S1, S2, S3 };

enum class Side : std::uint8_t { L, R };

struct CausalDerivation {
  Relation relation = Relation::Conn;
  CausalRule rule = CausalRule::A1;
  // C, P, S1, S2: the decorator side d of the rule. S3 under Dep: the
  // branch carrying the Dep premise. Unused otherwise.
  Side side = Side::L;
  // S3: [left branches, right branches]. Others: at most one.
  std::vector<CausalDerivation> premises;
  // P2 under Dep and Indep: the two keys compared.
  std::optional<std::pair<Key, Key>> keys;
};

/// Rule name with its side, e.g. "P2_L", "A1", "S3".
std::string rule_name(const CausalDerivation& d);

/// Deciders. Structural recursion on the labels; rules are tried in the
/// order A1, A2, C1, C2, P1, P2, S1, S2, S3 and the first derivation found
/// is returned.
std::optional<CausalDerivation> check(Relation r, const ProofLabel& t1, const ProofLabel& t2);
std::optional<CausalDerivation> check_conn(const ProofLabel& t1, const ProofLabel& t2);
std::optional<CausalDerivation> check_dep(const ProofLabel& t1, const ProofLabel& t2);
std::optional<CausalDerivation> check_indep(const ProofLabel& t1, const ProofLabel& t2);

/// Same verdicts without building derivations.
bool holds(Relation r, const ProofLabel& t1, const ProofLabel& t2);

/// True iff `d` is a well-formed derivation of its relation on (t1, t2).
/// Does not search.
bool check_derivation(const CausalDerivation& d, const ProofLabel& t1, const ProofLabel& t2);

/// Indented rule tree, one rule per line with its conclusion.
std::string render(const CausalDerivation& d, const ProofLabel& t1, const ProofLabel& t2);

}  // namespace ccskp

#endif  // CCSKP_CAUSALITY_HPP
