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

#ifndef CCSKP_THEOREMS_HPP
#define CCSKP_THEOREMS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccskp/causality.hpp"
#include "ccskp/reach.hpp"

namespace ccskp {

class InvalidLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal soundness failure: a constructed witness did not re-derive.
class WitnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Realisation

/// The standard process r(t): one prefix per action, `+ 0` / `0 +` and
/// `| 0` / `0 |` per decorator, a parallel pair per synchronisation.
Process realiser(const ProofLabel& t);

struct RealisationWitness {
  Process realiser;
  Transition step;
};

/// Throws InvalidLabel unless is_valid(t).
RealisationWitness realise(const ProofLabel& t);

/// Empty when the witness is standard, forward, labelled `t` and derivable;
/// otherwise the reason it is not.
std::optional<std::string> realisation_problem(const RealisationWitness& w, const ProofLabel& t);

// ---------------------------------------------------------------------------
// Connected transitions from connected labels

struct ConnWitness {
  Transition t1;
  Transition t2;
  Path link;  // from t1.source to t2.source
};

/// Neither label may be tau. The link has at most one step and one of the
/// two sources is standard. Throws PreconditionViolation.
ConnWitness realize_connected_base(const CausalDerivation& d, const ProofLabel& t1, const ProofLabel& t2);

/// Any connected pair of valid labels; the link has at most two steps.
ConnWitness realize_connected(const CausalDerivation& d, const ProofLabel& t1, const ProofLabel& t2);

/// Re-checks a witness: both steps forward, derivable and labelled as
/// asked; the link a valid path between the sources; t1's source
/// reachable; length bounds (and the base-case shape when `base`).
std::optional<std::string> witness_problem(const ConnWitness& w, const ProofLabel& t1, const ProofLabel& t2,
                                           bool base);

// ---------------------------------------------------------------------------
// Corpora

/// Every process with at most `max_ops` operators (prefixes over the names,
/// their complements and tau; restriction on the names; + and |), one per
/// alpha-class, in canonical form. Deterministic order.
std::vector<Process> enumerate_processes(const std::vector<Name>& names, std::size_t max_ops);

/// The processes of the worked examples, including the faulty ones.
std::vector<Process> example_processes();

/// The faulty processes that must be unreachable.
std::vector<Process> faulty_processes();

// ---------------------------------------------------------------------------
// Reports

struct Report {
  std::string name;
  std::string corpus;
  std::vector<std::pair<std::string, std::uint64_t>> counters;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples;  // first few only

  bool ok() const { return failures == 0; }
  void add(const std::string& counter, std::uint64_t n = 1);
  std::uint64_t get(const std::string& counter) const;
  void fail(const std::string& what);
};

std::string to_json(const std::vector<Report>& reports);
std::string summary_table(const std::vector<Report>& reports);

struct Scale {
  std::vector<Name> process_names{Name{"a"}, Name{"b"}};
  std::size_t max_ops = 4;
  std::vector<Name> label_names{Name{"a"}};
  std::vector<Key> label_keys{Key{1}, Key{2}};
  std::size_t depth = 3;
  std::size_t state_cap = kDefaultStateCap;
};

std::string describe_processes(const Scale& s);
std::string describe_labels(const Scale& s);

/// For every pair of transitions of `g` with connected sources, their
/// labels are connected.
Report verify_theorem1_forward(const TransitionGraph& g);
/// Implications between the three relations over every ordered pair.
Report verify_complementarity(const std::vector<ProofLabel>& labels);
/// Symmetry of all three relations, irreflexivity of indep, reflexivity
/// of dep.
Report verify_relation_algebra(const std::vector<ProofLabel>& labels);
/// realise() on every label, re-checked.
Report verify_realisation(const std::vector<ProofLabel>& labels);
/// realize_connected() on every connected ordered pair, re-checked.
Report verify_theorem1_constructive(const std::vector<ProofLabel>& labels);

// Corpus suites. The process corpus is enumerate_processes() plus the
// example processes.
Report suite_loop(const Scale& s);
Report suite_validity(const Scale& s);
Report suite_theorem1_forward(const Scale& s);
Report suite_origins(const Scale& s);

/// "loop", "validity", "thm1", "thm2", "lemmas" or "all". Throws
/// StateCapExceeded when a corpus graph outgrows the state cap.
std::vector<Report> run_suite(const std::string& suite, const Scale& s);
bool is_suite(const std::string& suite);

}  // namespace ccskp

#endif  // CCSKP_THEOREMS_HPP
