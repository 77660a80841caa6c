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

#include "ccskp/theorems.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ccskp {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

std::string join_names(const std::vector<Name>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ",") + n.id;
  return "{" + out + "}";
}

std::string join_keys(const std::vector<Key>& keys) {
  std::string out;
  for (const auto& k : keys) out += (out.empty() ? "" : ",") + std::to_string(k.value);
  return "{" + out + "}";
}

std::vector<Process> process_corpus(const Scale& s) {
  auto out = enumerate_processes(s.process_names, s.max_ops);
  for (const auto& p : example_processes()) out.push_back(p);
  return out;
}

std::vector<ProofLabel> label_corpus(const Scale& s) {
  return enumerate_valid(s.label_names, s.label_keys, s.depth);
}

// Throws StateCapExceeded.
TransitionGraph graph_of(const Process& p, const Scale& s) {
  return build_graph(p, GraphOptions{s.state_cap, {}});
}

}  // namespace

// ---------------------------------------------------------------------------
// Reports

void Report::add(const std::string& counter, std::uint64_t n) {
  for (auto& [name, value] : counters) {
    if (name == counter) {
      value += n;
      return;
    }
  }
  counters.emplace_back(counter, n);
}

std::uint64_t Report::get(const std::string& counter) const {
  for (const auto& [name, value] : counters) {
    if (name == counter) return value;
  }
  return 0;
}

void Report::fail(const std::string& what) {
  ++failures;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(what);
}

std::string to_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["corpus"] = r.corpus;
    j["ok"] = r.ok();
    j["failures"] = r.failures;
    nlohmann::ordered_json counters = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.counters) counters[name] = value;
    j["counters"] = counters;
    j["counterexamples"] = r.counterexamples;
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

std::string summary_table(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << "  [" << r.corpus << "]\n";
    for (const auto& [name, value] : r.counters) out << "    " << name << ": " << value << "\n";
    if (!r.ok()) {
      out << "    failures: " << r.failures << "\n";
      for (const auto& c : r.counterexamples) out << "    counterexample: " << c << "\n";
    }
  }
  return out.str();
}

std::string describe_processes(const Scale& s) {
  return "processes over " + join_names(s.process_names) + " with at most " + std::to_string(s.max_ops) +
         " operators, plus the worked examples";
}

std::string describe_labels(const Scale& s) {
  return "valid labels over " + join_names(s.label_names) + ", keys " + join_keys(s.label_keys) +
         ", decorator depth at most " + std::to_string(s.depth);
}

// ---------------------------------------------------------------------------
// Label-level verifiers

Report verify_theorem1_forward(const TransitionGraph& g) {
  Report r{"connected transitions have connected labels", "one graph", {}, 0, {}};
  std::vector<bool> reachable(g.component_count(), false);
  for (std::size_t i = 0; i < g.states().size(); ++i) {
    if (is_std(g.states()[i])) reachable[g.component_of(i)] = true;
  }
  // Reversal keeps the label and the component, so the distinct labels of
  // each component's forward edges cover every pair of transitions.
  std::map<std::size_t, std::set<ProofLabel>> labels;
  std::map<std::size_t, std::uint64_t> edges;
  for (const auto& e : g.edges()) {
    std::size_t c = g.component_of(e.source);
    if (!reachable[c]) continue;
    labels[c].insert(e.transition.label);
    ++edges[c];
  }
  r.add("components", labels.size());
  for (const auto& [c, set] : labels) {
    std::uint64_t n = 2 * edges[c];
    r.add("transition pairs", n * n);
    for (const auto& x : set) {
      for (const auto& y : set) {
        r.add("label pairs");
        if (!holds(Relation::Conn, x, y)) r.fail(to_string(x) + " and " + to_string(y) + " are not connected");
      }
    }
  }
  return r;
}

Report verify_complementarity(const std::vector<ProofLabel>& labels) {
  Report r{"complementarity", "given labels", {}, 0, {}};
  r.add("labels", labels.size());
  for (const auto& x : labels) {
    for (const auto& y : labels) {
      bool c = holds(Relation::Conn, x, y);
      bool d = holds(Relation::Dep, x, y);
      bool i = holds(Relation::Indep, x, y);
      r.add("pairs");
      if (c) r.add("connected");
      if (d) r.add("dependent");
      if (i) r.add("independent");
      if (i && !c) r.fail("indep without conn: " + to_string(x) + ", " + to_string(y));
      if (d && !c) r.fail("dep without conn: " + to_string(x) + ", " + to_string(y));
      if (c && d == i) {
        r.fail(std::string(d ? "both dep and indep: " : "conn but neither dep nor indep: ") + to_string(x) + ", " +
               to_string(y));
      }
    }
  }
  return r;
}

Report verify_relation_algebra(const std::vector<ProofLabel>& labels) {
  Report r{"relation algebra", "given labels", {}, 0, {}};
  r.add("labels", labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& x = labels[i];
    if (holds(Relation::Indep, x, x)) r.fail("indep is reflexive at " + to_string(x));
    if (!holds(Relation::Dep, x, x)) r.fail("dep is not reflexive at " + to_string(x));
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const auto& y = labels[j];
      r.add("unordered pairs");
      for (Relation rel : {Relation::Conn, Relation::Dep, Relation::Indep}) {
        if (holds(rel, x, y) != holds(rel, y, x)) {
          r.fail(to_string(rel) + " is not symmetric on " + to_string(x) + ", " + to_string(y));
        }
      }
    }
  }
  return r;
}

Report verify_realisation(const std::vector<ProofLabel>& labels) {
  Report r{"every valid label is realised", "given labels", {}, 0, {}};
  for (const auto& t : labels) {
    r.add("labels");
    try {
      auto w = realise(t);
      if (auto problem = realisation_problem(w, t)) r.fail(to_string(t) + ": " + *problem);
    } catch (const std::exception& e) {
      r.fail(to_string(t) + ": " + e.what());
    }
  }
  return r;
}

Report verify_theorem1_constructive(const std::vector<ProofLabel>& labels) {
  Report r{"connected labels have connected transitions", "given labels", {}, 0, {}};
  r.add("labels", labels.size());
  std::vector<bool> base(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) base[i] = !label_of(labels[i]).is_tau();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const auto& x = labels[i];
      const auto& y = labels[j];
      r.add("pairs");
      auto d = check_conn(x, y);
      if (!d) continue;
      r.add("connected pairs");
      try {
        ConnWitness w = base[i] && base[j] ? realize_connected_base(*d, x, y) : realize_connected(*d, x, y);
        r.add(base[i] && base[j] ? "base witnesses" : "general witnesses");
        r.add("link length " + std::to_string(w.link.length()));
      } catch (const std::exception& e) {
        r.fail(to_string(x) + ", " + to_string(y) + ": " + e.what());
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Corpus suites

Report suite_loop(const Scale& s) {
  Report r{"every transition reverses", describe_processes(s), {}, 0, {}};
  for (const auto& p : process_corpus(s)) {
    r.add("processes");
    auto g = graph_of(p, s);
    r.add("states", g.states().size());
    for (const auto& x : g.states()) {
      for (const auto& t : combined_steps(x)) {
        r.add("transitions");
        try {
          Transition back = reverse(t);
          if (back.direction == t.direction || !(back.label == t.label) || !(back.source == t.target) ||
              !(back.target == t.source)) {
            r.fail("bad reverse of " + to_line(t));
            continue;
          }
          auto again = derive(back.source, back.direction, back.label);
          if (!again || !(again->target == back.target)) r.fail("reverse does not re-derive: " + to_line(t));
          if (!(reverse(back) == t)) r.fail("double reversal differs: " + to_line(t));
        } catch (const std::exception& e) {
          r.fail(to_line(t) + ": " + e.what());
        }
      }
    }
  }
  return r;
}

Report suite_validity(const Scale& s) {
  Report r{"every transition label is valid", describe_processes(s), {}, 0, {}};
  for (const auto& p : process_corpus(s)) {
    r.add("processes");
    auto g = graph_of(p, s);
    for (const auto& x : g.states()) {
      for (const auto& t : combined_steps(x)) {
        r.add("transitions");
        if (!is_valid(t.label)) r.fail("invalid label on " + to_line(t));
        if (!well_formed(t.derivation)) r.fail("malformed derivation for " + to_line(t));
      }
    }
  }
  return r;
}

Report suite_theorem1_forward(const Scale& s) {
  Report r{"connected transitions have connected labels", describe_processes(s), {}, 0, {}};
  for (const auto& p : process_corpus(s)) {
    r.add("processes");
    auto g = graph_of(p, s);
    Report one = verify_theorem1_forward(g);
    for (const auto& [name, value] : one.counters) r.add(name, value);
    for (const auto& c : one.counterexamples) r.fail(pretty_print(p) + ": " + c);
    for (std::uint64_t k = one.counterexamples.size(); k < one.failures; ++k) r.fail(pretty_print(p));
  }
  return r;
}

Report suite_origins(const Scale& s) {
  Report r{"reachability and origins", describe_processes(s), {}, 0, {}};
  for (const auto& p : process_corpus(s)) {
    if (!is_std(p)) continue;
    auto g = graph_of(p, s);
    r.add("standard roots");
    std::size_t standard = 0;
    for (const auto& x : g.states()) standard += is_std(x) ? 1 : 0;
    if (standard != 1) r.fail(pretty_print(p) + " has " + std::to_string(standard) + " standard states");
    if (g.component_count() != 1) r.fail(pretty_print(p) + " graph is not connected");
    Process root = canonicalize(p);
    for (const auto& x : g.states()) {
      r.add("states");
      Path back = backward_normalize(x);
      if (!is_valid_path(back) || !alpha_equivalent(back.target, root)) {
        r.fail("backward normalisation of " + pretty_print(x) + " misses " + pretty_print(p));
      }
    }
    if (p.kind() == ProcessKind::Sum) {
      for (const auto& x : g.states()) {
        r.add("sum states");
        if (x.kind() != ProcessKind::Sum) {
          r.fail(pretty_print(x) + " is not a sum");
          continue;
        }
        if (!is_std(x.left()) && !is_std(x.right())) r.fail("both addends of " + pretty_print(x) + " have moved");
        auto path = find_path(g, root, x);
        if (!path) {
          r.fail("no path to " + pretty_print(x));
          continue;
        }
        auto left = project_left(*path);
        if (!left) r.fail("left projection fails towards " + pretty_print(x));
      }
    }
  }
  for (const auto& p : faulty_processes()) {
    r.add("faulty processes");
    if (is_reachable(p, GraphOptions{s.state_cap, {}})) r.fail(pretty_print(p) + " is reachable");
    auto steps = combined_steps(p);
    r.add("faulty enabled transitions", steps.size());
    if (!steps.empty()) r.fail(pretty_print(p) + " has " + std::to_string(steps.size()) + " enabled transitions");
  }
  return r;
}

std::vector<Report> run_suite(const std::string& suite, const Scale& s) {
  std::vector<Report> out;
  auto labelled = [&](Report r) {
    r.corpus = describe_labels(s);
    out.push_back(std::move(r));
  };
  bool all = suite == "all";
  if (all || suite == "loop") out.push_back(suite_loop(s));
  if (all || suite == "validity") out.push_back(suite_validity(s));
  if (all || suite == "thm1") {
    out.push_back(suite_theorem1_forward(s));
    auto labels = label_corpus(s);
    labelled(verify_realisation(labels));
    labelled(verify_theorem1_constructive(labels));
  }
  if (all || suite == "thm2") {
    auto labels = label_corpus(s);
    labelled(verify_complementarity(labels));
    labelled(verify_relation_algebra(labels));
  }
  if (all || suite == "lemmas") out.push_back(suite_origins(s));
  return out;
}

bool is_suite(const std::string& suite) {
  static const std::set<std::string> kSuites{"loop", "validity", "thm1", "thm2", "lemmas", "all"};
  return kSuites.count(suite) > 0;
}

}  // namespace ccskp
