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

#include "ccskp/export.hpp"

#include "json.hpp"

namespace ccskp {

namespace {

using Json = nlohmann::ordered_json;

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Json transition_json(const Transition& t) {
  Json j;
  j["source"] = pretty_print(t.source);
  j["dir"] = to_string(t.direction);
  j["label"] = to_string(t.label);
  j["target"] = pretty_print(t.target);
  return j;
}

}  // namespace

std::string to_dot(const TransitionGraph& g) {
  std::string out = "digraph ccskp {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < g.states().size(); ++i) {
    const auto& s = g.states()[i];
    out += "  n" + std::to_string(i) + " [label=" + quoted(pretty_print(s)) +
           (is_std(s) ? ", shape=doublecircle" : ", shape=ellipse") + "];\n";
  }
  for (const auto& e : g.edges()) {
    out += "  n" + std::to_string(e.source) + " -> n" + std::to_string(e.target) +
           " [label=" + quoted(to_string(e.transition.label)) + "];\n";
  }
  return out + "}\n";
}

std::string to_json(const TransitionGraph& g) {
  Json j;
  j["states"] = Json::array();
  for (const auto& s : g.states()) j["states"].push_back(pretty_print(s));
  j["edges"] = Json::array();
  for (const auto& e : g.edges()) {
    Json edge;
    edge["src"] = e.source;
    edge["dir"] = to_string(e.transition.direction);
    edge["label"] = to_string(e.transition.label);
    edge["tgt"] = e.target;
    j["edges"].push_back(edge);
  }
  return j.dump();
}

std::string to_json(const Transition& t) { return transition_json(t).dump(); }

std::string to_json(const Path& p) {
  Json j;
  j["source"] = pretty_print(p.source);
  j["target"] = pretty_print(p.target);
  j["steps"] = Json::array();
  for (const auto& s : p.steps) j["steps"].push_back(transition_json(s));
  return j.dump();
}

}  // namespace ccskp
