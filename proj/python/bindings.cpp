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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccskp/export.hpp"
#include "ccskp/session.hpp"
#include "ccskp/theorems.hpp"

namespace py = pybind11;
using namespace ccskp;

namespace {

Direction direction(const std::string& d) {
  if (d == "F" || d == "forward") return Direction::Forward;
  if (d == "B" || d == "backward") return Direction::Backward;
  throw py::value_error("direction must be 'F' or 'B'");
}

Relation relation(const std::string& r) {
  auto parsed = parse_relation(r);
  if (!parsed) throw py::value_error("relation must be 'conn', 'dep' or 'indep'");
  return *parsed;
}

std::vector<Key> keys(const std::vector<std::uint64_t>& values) {
  std::vector<Key> out;
  for (auto v : values) out.push_back(Key{v});
  return out;
}

std::vector<Name> names(const std::vector<std::string>& ids) {
  std::vector<Name> out;
  for (const auto& id : ids) out.push_back(Name{id});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reversible CCS with keyed prefixes and proof-labelled transitions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StateCapExceeded>(m, "StateCapExceeded", PyExc_RuntimeError);

  py::class_<Process>(m, "Process")
      .def("__str__", [](const Process& p) { return pretty_print(p); })
      .def("__repr__", [](const Process& p) { return "Process('" + pretty_print(p) + "')"; })
      .def("__eq__", [](const Process& a, const Process& b) { return a == b; })
      .def("__hash__", [](const Process& p) { return p.hash(); })
      .def_property_readonly("is_standard", [](const Process& p) { return is_std(p); })
      .def_property_readonly("keys",
                             [](const Process& p) {
                               std::vector<std::uint64_t> out;
                               for (Key k : keys_of(p)) out.push_back(k.value);
                               return out;
                             })
      .def_property_readonly("size", &Process::size)
      .def("structure", [](const Process& p) { return structure(p); })
      .def("canonical", [](const Process& p) { return canonicalize(p); });

  py::class_<ProofLabel>(m, "ProofLabel")
      .def("__str__", [](const ProofLabel& t) { return to_string(t); })
      .def("__repr__", [](const ProofLabel& t) { return "ProofLabel('" + to_string(t) + "')"; })
      .def("__eq__", [](const ProofLabel& a, const ProofLabel& b) { return a == b; })
      .def("__hash__", [](const ProofLabel& t) { return ProofLabelHash{}(t); })
      .def_property_readonly("is_valid", [](const ProofLabel& t) { return is_valid(t); })
      .def_property_readonly("is_sync", &ProofLabel::is_sync)
      .def_property_readonly("key", [](const ProofLabel& t) { return key_of(t).value; })
      .def_property_readonly("action", [](const ProofLabel& t) { return to_string(label_of(t)); });

  py::class_<Transition>(m, "Transition")
      .def_readonly("source", &Transition::source)
      .def_readonly("target", &Transition::target)
      .def_readonly("label", &Transition::label)
      .def_property_readonly("direction", [](const Transition& t) { return to_string(t.direction); })
      .def("derivation", [](const Transition& t) { return render(t.derivation); })
      .def("to_json", [](const Transition& t) { return to_json(t); })
      .def("__str__", [](const Transition& t) { return to_line(t); })
      .def("__repr__", [](const Transition& t) { return "Transition('" + to_line(t) + "')"; })
      .def("__eq__", [](const Transition& a, const Transition& b) { return a == b; });

  py::class_<Path>(m, "Path")
      .def_readonly("source", &Path::source)
      .def_readonly("target", &Path::target)
      .def_readonly("steps", &Path::steps)
      .def("__len__", &Path::length)
      .def("is_valid", [](const Path& p) { return is_valid_path(p); })
      .def("to_json", [](const Path& p) { return to_json(p); });

  py::class_<TransitionGraph>(m, "TransitionGraph")
      .def_property_readonly("states", &TransitionGraph::states)
      .def_property_readonly("edges",
                             [](const TransitionGraph& g) {
                               std::vector<Transition> out;
                               for (const auto& e : g.edges()) out.push_back(e.transition);
                               return out;
                             })
      .def_property_readonly("component_count", &TransitionGraph::component_count)
      .def("to_dot", [](const TransitionGraph& g) { return to_dot(g); })
      .def("to_json", [](const TransitionGraph& g) { return to_json(g); })
      .def("find_path", [](const TransitionGraph& g, const Process& x, const Process& y) { return find_path(g, x, y); });

  py::class_<Session>(m, "Session")
      .def(py::init<Process>())
      .def_property_readonly("initial", &Session::initial)
      .def_property_readonly("current", &Session::current)
      .def_property_readonly("history", &Session::history)
      .def("steps", [](const Session& s, const std::string& d) { return s.steps(direction(d)); })
      .def("apply", [](Session& s, const std::string& d, std::size_t i) { return s.apply(direction(d), i); })
      .def("undo", &Session::undo)
      .def("replay", &Session::replay);

  m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));
  m.def("parse_label", [](const std::string& text) { return parse_label(text); }, py::arg("text"));
  m.def("forward_steps", [](const Process& p) { return forward_steps(p); });
  m.def("backward_steps", &backward_steps);
  m.def("derive", [](const Process& p, const std::string& d, const ProofLabel& t) { return derive(p, direction(d), t); });
  m.def("reverse", &reverse);

  m.def("build_graph", [](const Process& p, std::size_t state_cap) { return build_graph(p, GraphOptions{state_cap, {}}); },
        py::arg("process"), py::arg("state_cap") = kDefaultStateCap);
  m.def("is_reachable", [](const Process& p) { return is_reachable(p); });
  m.def("origin", [](const Process& p) -> std::optional<Process> {
    try {
      return origin(p);
    } catch (const NotReachable&) {
      return std::nullopt;
    }
  });
  m.def("connected", [](const Transition& a, const Transition& b) { return connected(a, b); });

  m.def("holds", [](const std::string& r, const ProofLabel& a, const ProofLabel& b) { return holds(relation(r), a, b); });
  m.def(
      "explain",
      [](const std::string& r, const ProofLabel& a, const ProofLabel& b) -> std::optional<std::string> {
        auto d = check(relation(r), a, b);
        if (!d) return std::nullopt;
        return render(*d, a, b);
      },
      "The derivation tree when the relation holds, else None");
  m.def("enumerate_valid",
        [](const std::vector<std::string>& n, const std::vector<std::uint64_t>& k, std::size_t depth) {
          auto ns = names(n);
          auto ks = keys(k);
          return enumerate_valid(ns, ks, depth);
        });

  m.def("realise", [](const ProofLabel& t) {
    try {
      auto w = realise(t);
      return py::make_tuple(w.realiser, w.step);
    } catch (const InvalidLabel& e) {
      throw py::value_error(e.what());
    }
  });
  m.def("realize_connected", [](const ProofLabel& a, const ProofLabel& b) -> py::object {
    if (!is_valid(a) || !is_valid(b)) throw py::value_error("labels must be valid");
    auto d = check_conn(a, b);
    if (!d) return py::none();
    auto w = realize_connected(*d, a, b);
    return py::make_tuple(w.t1, w.t2, w.link);
  });

  m.def(
      "verify",
      [](const std::string& suite, std::vector<std::string> process_names, std::size_t max_size,
         std::vector<std::string> label_names, std::vector<std::uint64_t> label_keys, std::size_t depth,
         std::size_t state_cap) {
        if (!is_suite(suite)) throw py::value_error("unknown suite " + suite);
        Scale s;
        s.process_names = names(process_names);
        s.max_ops = max_size;
        s.label_names = names(label_names);
        s.label_keys = keys(label_keys);
        s.depth = depth;
        s.state_cap = state_cap;
        return to_json(run_suite(suite, s));
      },
      py::arg("suite"), py::arg("process_names") = std::vector<std::string>{"a", "b"}, py::arg("max_size") = 4,
      py::arg("label_names") = std::vector<std::string>{"a"}, py::arg("label_keys") = std::vector<std::uint64_t>{1, 2},
      py::arg("depth") = 3, py::arg("state_cap") = kDefaultStateCap, "Runs a suite; returns the JSON report");
}
