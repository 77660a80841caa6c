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

#include "ccskp/lts.hpp"

#include <algorithm>

namespace ccskp {

std::string to_string(Direction d) { return d == Direction::Forward ? "F" : "B"; }

std::string rule_name(StepRule r, Direction d) {
  std::string base;
  switch (r) {
    case StepRule::Pref:
      base = "pref";
      break;
    case StepRule::KPref:
      base = "kpref";
      break;
    case StepRule::SumL:
      base = "sumL";
      break;
    case StepRule::SumR:
      base = "sumR";
      break;
    case StepRule::ParL:
      base = "parL";
      break;
    case StepRule::ParR:
      base = "parR";
      break;
    case StepRule::Syn:
      base = "syn";
      break;
    case StepRule::Nu:
      base = "nu";
      break;
  }
  return d == Direction::Forward ? base : "rev-" + base;
}

Transition Transition::from(DerivationTree d) {
  Transition t;
  t.source = d.source;
  t.direction = d.direction;
  t.label = d.label;
  t.target = d.target;
  t.derivation = std::move(d);
  return t;
}

bool operator==(const Transition& a, const Transition& b) {
  return a.direction == b.direction && a.label == b.label && a.source == b.source && a.target == b.target;
}

FreshKeyPolicy least_absent_policy() {
  return [](const Process& root) { return least_absent_key(root); };
}

namespace {

// Rule instances. Each returns nullopt when its side condition fails, so
// enumeration and guided search share the exact same rule semantics.

std::optional<DerivationTree> pref_leaf(const Process& p, Direction dir, Key k) {
  DerivationTree d;
  d.rule = StepRule::Pref;
  d.direction = dir;
  d.source = p;
  if (dir == Direction::Forward) {
    if (p.kind() != ProcessKind::Prefix || !p.body().is_standard()) return std::nullopt;
    d.target = Process::keyed(p.label(), k, p.body());
  } else {
    if (p.kind() != ProcessKind::KeyedPrefix || !p.body().is_standard() || p.key() != k) return std::nullopt;
    d.target = Process::prefix(p.label(), p.body());
  }
  d.label = ProofLabel::base({}, p.label(), k);
  return d;
}

std::optional<DerivationTree> kpref_node(const Process& p, DerivationTree premise) {
  if (key_of(premise.label) == p.key()) return std::nullopt;
  DerivationTree d;
  d.rule = StepRule::KPref;
  d.direction = premise.direction;
  d.source = p;
  d.label = premise.label;
  d.target = Process::keyed(p.label(), p.key(), premise.target);
  d.guard_key = p.key();
  d.premises.push_back(std::move(premise));
  return d;
}

std::optional<DerivationTree> sum_node(const Process& p, bool left, DerivationTree premise) {
  const Process& idle = left ? p.right() : p.left();
  if (!idle.is_standard()) return std::nullopt;
  DerivationTree d;
  d.rule = left ? StepRule::SumL : StepRule::SumR;
  d.direction = premise.direction;
  d.source = p;
  d.label = premise.label.prepend(left ? Decorator::SumL : Decorator::SumR);
  d.target = left ? Process::sum(premise.target, idle) : Process::sum(idle, premise.target);
  d.premises.push_back(std::move(premise));
  return d;
}

std::optional<DerivationTree> par_node(const Process& p, bool left, DerivationTree premise) {
  const Process& idle = left ? p.right() : p.left();
  if (idle.has_key(key_of(premise.label))) return std::nullopt;
  DerivationTree d;
  d.rule = left ? StepRule::ParL : StepRule::ParR;
  d.direction = premise.direction;
  d.source = p;
  d.label = premise.label.prepend(left ? Decorator::ParL : Decorator::ParR);
  d.target = left ? Process::par(premise.target, idle) : Process::par(idle, premise.target);
  d.idle_keys = idle.sorted_keys();
  d.premises.push_back(std::move(premise));
  return d;
}

std::optional<DerivationTree> syn_node(const Process& p, DerivationTree lhs, DerivationTree rhs) {
  if (lhs.label.is_sync() || rhs.label.is_sync()) return std::nullopt;
  const auto& a = lhs.label.action();
  const auto& b = rhs.label.action();
  if (!a.label.is_complement_of(b.label) || a.key != b.key) return std::nullopt;
  DerivationTree d;
  d.rule = StepRule::Syn;
  d.direction = lhs.direction;
  d.source = p;
  d.label = ProofLabel::sync({}, Branch{lhs.label.prefix(), a.label, a.key}, Branch{rhs.label.prefix(), b.label, b.key});
  d.target = Process::par(lhs.target, rhs.target);
  d.premises.push_back(std::move(lhs));
  d.premises.push_back(std::move(rhs));
  return d;
}

std::optional<DerivationTree> nu_node(const Process& p, DerivationTree premise) {
  if (label_of(premise.label).on(p.bound_name())) return std::nullopt;
  DerivationTree d;
  d.rule = StepRule::Nu;
  d.direction = premise.direction;
  d.source = p;
  d.label = premise.label;
  d.target = Process::restrict(p.bound_name(), premise.target);
  d.restricted = p.bound_name();
  d.premises.push_back(std::move(premise));
  return d;
}

template <typename Opt>
void keep(std::vector<DerivationTree>& out, Opt&& d) {
  if (d) out.push_back(std::move(*d));
}

std::vector<DerivationTree> enumerate(const Process& p, Direction dir, Key fresh) {
  std::vector<DerivationTree> out;
  switch (p.kind()) {
    case ProcessKind::Nil:
      break;
    case ProcessKind::Prefix:
      if (dir == Direction::Forward) keep(out, pref_leaf(p, dir, fresh));
      break;
    case ProcessKind::KeyedPrefix:
      if (dir == Direction::Backward) keep(out, pref_leaf(p, dir, p.key()));
      for (auto& d : enumerate(p.body(), dir, fresh)) keep(out, kpref_node(p, std::move(d)));
      break;
    case ProcessKind::Sum:
      if (p.right().is_standard()) {
        for (auto& d : enumerate(p.left(), dir, fresh)) keep(out, sum_node(p, true, std::move(d)));
      }
      if (p.left().is_standard()) {
        for (auto& d : enumerate(p.right(), dir, fresh)) keep(out, sum_node(p, false, std::move(d)));
      }
      break;
    case ProcessKind::Par: {
      auto ls = enumerate(p.left(), dir, fresh);
      auto rs = enumerate(p.right(), dir, fresh);
      for (const auto& d : ls) keep(out, par_node(p, true, d));
      for (const auto& d : rs) keep(out, par_node(p, false, d));
      for (const auto& l : ls) {
        if (l.label.is_sync() || l.label.action().label.is_tau()) continue;
        for (const auto& r : rs) keep(out, syn_node(p, l, r));
      }
      break;
    }
    case ProcessKind::Restrict:
      for (auto& d : enumerate(p.body(), dir, fresh)) keep(out, nu_node(p, std::move(d)));
      break;
  }
  return out;
}

std::optional<DerivationTree> search(const Process& p, Direction dir, const ProofLabel& t) {
  switch (p.kind()) {
    case ProcessKind::Nil:
      return std::nullopt;
    case ProcessKind::Prefix:
      if (dir != Direction::Forward || !t.is_bare() || t.is_sync() || t.action().label != p.label()) return std::nullopt;
      return pref_leaf(p, dir, t.action().key);
    case ProcessKind::KeyedPrefix: {
      if (dir == Direction::Backward && t.is_bare() && !t.is_sync() && t.action().label == p.label() &&
          t.action().key == p.key() && p.body().is_standard()) {
        return pref_leaf(p, dir, p.key());
      }
      auto sub = search(p.body(), dir, t);
      if (!sub) return std::nullopt;
      return kpref_node(p, std::move(*sub));
    }
    case ProcessKind::Sum: {
      auto h = t.head();
      if (h != Decorator::SumL && h != Decorator::SumR) return std::nullopt;
      bool left = *h == Decorator::SumL;
      auto sub = search(left ? p.left() : p.right(), dir, t.tail());
      if (!sub) return std::nullopt;
      return sum_node(p, left, std::move(*sub));
    }
    case ProcessKind::Par: {
      auto h = t.head();
      if (!h) {
        if (!t.is_sync() || !is_valid(t)) return std::nullopt;
        auto l = search(p.left(), dir, ProofLabel::of_branch(t.pair().left));
        if (!l) return std::nullopt;
        auto r = search(p.right(), dir, ProofLabel::of_branch(t.pair().right));
        if (!r) return std::nullopt;
        return syn_node(p, std::move(*l), std::move(*r));
      }
      if (!is_par(*h)) return std::nullopt;
      bool left = *h == Decorator::ParL;
      auto sub = search(left ? p.left() : p.right(), dir, t.tail());
      if (!sub) return std::nullopt;
      return par_node(p, left, std::move(*sub));
    }
    case ProcessKind::Restrict: {
      auto sub = search(p.body(), dir, t);
      if (!sub) return std::nullopt;
      return nu_node(p, std::move(*sub));
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Transition> forward_steps(const Process& p, const FreshKeyPolicy& fresh) {
  Key k = fresh(p);
  std::vector<Transition> out;
  for (auto& d : enumerate(p, Direction::Forward, k)) out.push_back(Transition::from(std::move(d)));
  return out;
}

std::vector<Transition> backward_steps(const Process& p) {
  std::vector<Transition> out;
  for (auto& d : enumerate(p, Direction::Backward, Key{})) out.push_back(Transition::from(std::move(d)));
  return out;
}

std::vector<Transition> combined_steps(const Process& p) {
  auto out = forward_steps(p);
  for (auto& t : backward_steps(p)) out.push_back(std::move(t));
  return out;
}

std::optional<Transition> derive(const Process& p, Direction dir, const ProofLabel& t) {
  auto d = search(p, dir, t);
  if (!d) return std::nullopt;
  return Transition::from(std::move(*d));
}

Transition reverse(const Transition& t) {
  auto r = derive(t.target, flip(t.direction), t.label);
  if (!r || !(r->target == t.source)) {
    throw LoopLemmaViolation("no reverse for " + to_line(t));
  }
  return *r;
}

std::string to_line(const Transition& t) {
  return pretty_print(t.source) + " --" + to_string(t.direction) + " " + to_string(t.label) + "--> " +
         pretty_print(t.target);
}

// ---------------------------------------------------------------------------
// Re-checking derivations

bool well_formed(const DerivationTree& d) {
  for (const auto& p : d.premises) {
    if (p.direction != d.direction || !well_formed(p)) return false;
  }
  const bool fwd = d.direction == Direction::Forward;
  const Process& s = d.source;
  switch (d.rule) {
    case StepRule::Pref: {
      if (!d.premises.empty() || d.label.is_sync() || !d.label.is_bare()) return false;
      const Process& before = fwd ? s : d.target;
      const Process& after = fwd ? d.target : s;
      if (before.kind() != ProcessKind::Prefix || after.kind() != ProcessKind::KeyedPrefix) return false;
      const auto& act = d.label.action();
      return before.body().is_standard() && before.label() == act.label && after.label() == act.label &&
             after.key() == act.key && before.body() == after.body();
    }
    case StepRule::KPref: {
      if (d.premises.size() != 1 || !d.guard_key || s.kind() != ProcessKind::KeyedPrefix) return false;
      const auto& p = d.premises[0];
      return *d.guard_key == s.key() && key_of(d.label) != s.key() && p.source == s.body() &&
             p.label == d.label && d.target == Process::keyed(s.label(), s.key(), p.target);
    }
    case StepRule::SumL:
    case StepRule::SumR: {
      if (d.premises.size() != 1 || s.kind() != ProcessKind::Sum) return false;
      bool left = d.rule == StepRule::SumL;
      const auto& p = d.premises[0];
      const Process& active = left ? s.left() : s.right();
      const Process& idle = left ? s.right() : s.left();
      Process expect = left ? Process::sum(p.target, idle) : Process::sum(idle, p.target);
      return idle.is_standard() && p.source == active && d.target == expect &&
             d.label == p.label.prepend(left ? Decorator::SumL : Decorator::SumR);
    }
    case StepRule::ParL:
    case StepRule::ParR: {
      if (d.premises.size() != 1 || s.kind() != ProcessKind::Par) return false;
      bool left = d.rule == StepRule::ParL;
      const auto& p = d.premises[0];
      const Process& active = left ? s.left() : s.right();
      const Process& idle = left ? s.right() : s.left();
      Process expect = left ? Process::par(p.target, idle) : Process::par(idle, p.target);
      Key k = key_of(p.label);
      return d.idle_keys == idle.sorted_keys() &&
             std::find(d.idle_keys.begin(), d.idle_keys.end(), k) == d.idle_keys.end() && p.source == active &&
             d.target == expect && d.label == p.label.prepend(left ? Decorator::ParL : Decorator::ParR);
    }
    case StepRule::Syn: {
      if (d.premises.size() != 2 || s.kind() != ProcessKind::Par) return false;
      const auto& l = d.premises[0];
      const auto& r = d.premises[1];
      if (l.label.is_sync() || r.label.is_sync()) return false;
      const auto& a = l.label.action();
      const auto& b = r.label.action();
      ProofLabel expect = ProofLabel::sync({}, Branch{l.label.prefix(), a.label, a.key},
                                           Branch{r.label.prefix(), b.label, b.key});
      return a.label.is_complement_of(b.label) && a.key == b.key && l.source == s.left() &&
             r.source == s.right() && d.target == Process::par(l.target, r.target) && d.label == expect;
    }
    case StepRule::Nu: {
      if (d.premises.size() != 1 || s.kind() != ProcessKind::Restrict || !d.restricted) return false;
      const auto& p = d.premises[0];
      return *d.restricted == s.bound_name() && !label_of(d.label).on(s.bound_name()) && p.source == s.body() &&
             p.label == d.label && d.target == Process::restrict(s.bound_name(), p.target);
    }
  }
  return false;
}

namespace {

void render(const DerivationTree& d, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += rule_name(d.rule, d.direction);
  out += ": ";
  out += pretty_print(d.source) + " --" + to_string(d.direction) + " " + to_string(d.label) + "--> " +
         pretty_print(d.target);
  if (d.guard_key) out += "  [key " + std::to_string(key_of(d.label).value) + " != " + std::to_string(d.guard_key->value) + "]";
  if (d.rule == StepRule::ParL || d.rule == StepRule::ParR) {
    out += "  [key " + std::to_string(key_of(d.label).value) + " not in {";
    for (std::size_t i = 0; i < d.idle_keys.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(d.idle_keys[i].value);
    }
    out += "}]";
  }
  if (d.restricted) out += "  [" + to_string(label_of(d.label)) + " not on " + d.restricted->id + "]";
  if (d.rule == StepRule::Pref) out += "  [std]";
  out += '\n';
  for (const auto& p : d.premises) render(p, depth + 1, out);
}

}  // namespace

std::string render(const DerivationTree& d) {
  std::string out;
  render(d, 0, out);
  return out;
}

}  // namespace ccskp
