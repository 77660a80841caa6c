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

#include "ccskp/reach.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace ccskp {

StateCapExceeded::StateCapExceeded(std::size_t cap)
    : std::runtime_error("state cap of " + std::to_string(cap) + " exceeded"), cap_(cap) {}

bool is_valid_path(const Path& p) {
  Process at = p.source;
  for (const auto& t : p.steps) {
    if (!(t.source == at)) return false;
    auto again = derive(t.source, t.direction, t.label);
    if (!again || !(again->target == t.target)) return false;
    at = t.target;
  }
  return at == p.target;
}

std::optional<std::size_t> TransitionGraph::find_state(const Process& p) const {
  auto it = index_.find(canonicalize(p));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

Key least_absent_over(const Process& p, const std::vector<Key>& pool) {
  KeySet used = keys_of(p);
  used.insert(pool.begin(), pool.end());
  std::uint64_t k = 0;
  for (Key u : used) {
    if (u.value != k) break;
    ++k;
  }
  return Key{k};
}

}  // namespace

TransitionGraph build_graph(const std::vector<Process>& roots, const GraphOptions& options) {
  TransitionGraph g;
  std::deque<std::size_t> frontier;
  auto intern = [&](const Process& p) {
    auto [it, fresh] = g.index_.emplace(p, g.states_.size());
    if (fresh) {
      if (g.states_.size() >= options.state_cap) throw StateCapExceeded(options.state_cap);
      g.states_.push_back(p);
      frontier.push_back(it->second);
    }
    return it->second;
  };
  for (const auto& r : roots) {
    Process c = canonicalize(r);
    g.roots_.push_back(c);
    intern(c);
  }

  std::set<std::tuple<std::size_t, ProofLabel, std::size_t>> seen;
  auto add_edge = [&](std::size_t src, std::size_t tgt, Transition t) {
    if (seen.emplace(src, t.label, tgt).second) g.edges_.push_back({src, tgt, std::move(t)});
  };

  while (!frontier.empty()) {
    std::size_t i = frontier.front();
    frontier.pop_front();
    Process s = g.states_[i];

    std::vector<Key> offered{least_absent_over(s, options.key_pool)};
    for (Key k : options.key_pool) {
      if (!s.has_key(k)) offered.push_back(k);
    }
    for (Key k : offered) {
      for (auto& t : forward_steps(s, [k](const Process&) { return k; })) {
        std::size_t j = intern(t.target);
        add_edge(i, j, std::move(t));
      }
    }
    for (auto& b : backward_steps(s)) {
      std::size_t j = intern(b.target);
      add_edge(j, i, reverse(b));
    }
  }

  g.incident_.assign(g.states_.size(), {});
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    g.incident_[g.edges_[e].source].push_back(e);
    if (g.edges_[e].target != g.edges_[e].source) g.incident_[g.edges_[e].target].push_back(e);
  }

  const std::size_t none = g.states_.size();
  g.component_.assign(g.states_.size(), none);
  for (std::size_t s = 0; s < g.states_.size(); ++s) {
    if (g.component_[s] != none) continue;
    std::size_t c = g.component_count_++;
    std::deque<std::size_t> todo{s};
    g.component_[s] = c;
    while (!todo.empty()) {
      std::size_t u = todo.front();
      todo.pop_front();
      for (std::size_t e : g.incident_[u]) {
        std::size_t v = g.edges_[e].source == u ? g.edges_[e].target : g.edges_[e].source;
        if (g.component_[v] == none) {
          g.component_[v] = c;
          todo.push_back(v);
        }
      }
    }
  }
  return g;
}

TransitionGraph build_graph(const Process& root, const GraphOptions& options) {
  return build_graph(std::vector<Process>{root}, options);
}

std::optional<Path> find_path(const TransitionGraph& g, const Process& x, const Process& y) {
  auto from = g.find_state(x);
  auto to = g.find_state(y);
  if (!from) throw StateNotInGraph("not a state of the graph: " + pretty_print(x));
  if (!to) throw StateNotInGraph("not a state of the graph: " + pretty_print(y));

  const auto& states = g.states();
  Path path{states[*from], states[*to], {}};
  if (g.component_of(*from) != g.component_of(*to)) return std::nullopt;

  // Breadth-first, remembering the edge used to enter each state.
  const std::size_t none = states.size();
  std::vector<std::size_t> via(states.size(), none);
  std::vector<bool> visited(states.size(), false);
  std::deque<std::size_t> todo{*from};
  visited[*from] = true;
  while (!todo.empty() && !visited[*to]) {
    std::size_t u = todo.front();
    todo.pop_front();
    for (std::size_t e : g.incident(u)) {
      const auto& edge = g.edges()[e];
      std::size_t v = edge.source == u ? edge.target : edge.source;
      if (visited[v]) continue;
      visited[v] = true;
      via[v] = e;
      todo.push_back(v);
    }
  }
  if (!visited[*to]) return std::nullopt;

  for (std::size_t v = *to; v != *from;) {
    const auto& edge = g.edges()[via[v]];
    if (edge.target == v) {
      path.steps.push_back(edge.transition);
      v = edge.source;
    } else {
      path.steps.push_back(reverse(edge.transition));
      v = edge.target;
    }
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

namespace {

std::vector<std::size_t> standard_states_with(const TransitionGraph& g, std::size_t state) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < g.states().size(); ++s) {
    if (g.component_of(s) == g.component_of(state) && is_std(g.states()[s])) out.push_back(s);
  }
  return out;
}

}  // namespace

bool is_reachable(const Process& p, const GraphOptions& options) {
  TransitionGraph g = build_graph(p, options);
  return !standard_states_with(g, 0).empty();
}

Process origin(const Process& p, const GraphOptions& options) {
  TransitionGraph g = build_graph(p, options);
  auto found = standard_states_with(g, 0);
  if (found.empty()) throw NotReachable("no standard process reaches " + pretty_print(p));
  if (found.size() > 1) {
    throw NonUniqueOrigin("several standard processes reach " + pretty_print(p) + ": " +
                          pretty_print(g.states()[found[0]]) + ", " + pretty_print(g.states()[found[1]]));
  }
  return g.states()[found[0]];
}

std::optional<Path> connected(const Transition& t1, const Transition& t2, const GraphOptions& options) {
  GraphOptions opts = options;
  for (Key k : keys_of(t1.source)) opts.key_pool.push_back(k);
  for (Key k : keys_of(t2.source)) opts.key_pool.push_back(k);
  TransitionGraph g = build_graph(t1.source, opts);
  if (!g.find_state(t2.source)) return std::nullopt;
  return find_path(g, t1.source, t2.source);
}

Path backward_normalize(const Process& p) {
  Path path{p, p, {}};
  for (;;) {
    auto steps = backward_steps(path.target);
    if (steps.empty()) return path;
    path.target = steps.front().target;
    path.steps.push_back(std::move(steps.front()));
  }
}

std::optional<Path> project_left(const Path& p) {
  if (p.source.kind() != ProcessKind::Sum || p.target.kind() != ProcessKind::Sum) return std::nullopt;
  Path out{p.source.left(), p.target.left(), {}};
  for (const auto& t : p.steps) {
    if (t.source.kind() != ProcessKind::Sum) return std::nullopt;
    if (t.label.head() != Decorator::SumL) continue;
    auto step = derive(t.source.left(), t.direction, t.label.tail());
    if (!step) return std::nullopt;
    out.steps.push_back(std::move(*step));
  }
  if (!is_valid_path(out)) return std::nullopt;
  return out;
}

}  // namespace ccskp
