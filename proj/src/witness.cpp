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

// Realisers and connected-transition witnesses, built by recursion on
// labels and connectivity derivations. Every step is obtained from derive(),
// so nothing here is trusted without the transition rules agreeing.

#include <algorithm>

#include "ccskp/theorems.hpp"

namespace ccskp {

namespace {

Process wrap(const Process& x, Decorator d, const Process& other) {
  switch (d) {
    case Decorator::SumL:
      return Process::sum(x, other);
    case Decorator::SumR:
      return Process::sum(other, x);
    case Decorator::ParL:
      return Process::par(x, other);
    case Decorator::ParR:
      return Process::par(other, x);
  }
  return x;
}

Decorator par_side(Side s) { return s == Side::L ? Decorator::ParL : Decorator::ParR; }

Transition step(const Process& p, Direction dir, const ProofLabel& t) {
  auto s = derive(p, dir, t);
  if (!s) throw WitnessError("cannot derive " + to_string(t) + " from " + pretty_print(p));
  return *s;
}

void collect_keys(const ProofLabel& t, KeySet& out) {
  if (t.is_sync()) {
    out.insert(t.pair().left.key);
    out.insert(t.pair().right.key);
  } else {
    out.insert(t.action().key);
  }
}

ProofLabel branch_label(const ProofLabel& pair, Side s) {
  return ProofLabel::of_branch(s == Side::L ? pair.pair().left : pair.pair().right);
}

Path reversed(const Path& p) {
  Path out{p.target, p.source, {}};
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) out.steps.push_back(reverse(*it));
  return out;
}

struct Built {
  Transition t1;
  Transition t2;
  Path link;
};

class Builder {
 public:
  Builder(const ProofLabel& t1, const ProofLabel& t2) {
    collect_keys(t1, avoid_);
    collect_keys(t2, avoid_);
  }

  Built run(const CausalDerivation& d, const ProofLabel& a, const ProofLabel& b) {
    if (a == b) {
      Process x = realiser(a);
      Transition t = step(x, Direction::Forward, a);
      return {t, t, Path{x, x, {}}};
    }
    switch (d.rule) {
      case CausalRule::A1:
        return action_first(a, b);
      case CausalRule::A2: {
        Built w = action_first(b, a);
        return {w.t2, w.t1, reversed(w.link)};
      }
      case CausalRule::C1:
      case CausalRule::P1: {
        Built w = run(d.premises.at(0), a.tail(), b.tail());
        Decorator h = *a.head();
        return {lift(w.t1, h, Process::nil()), lift(w.t2, h, Process::nil()), lift(w.link, h, Process::nil())};
      }
      case CausalRule::C2:
      case CausalRule::P2: {
        Process p = wrap(realiser(a.tail()), *a.head(), realiser(b.tail()));
        Transition t1 = step(p, Direction::Forward, a);
        if (d.rule == CausalRule::P2 && key_of(a) != key_of(b)) {
          Transition t2 = step(t1.target, Direction::Forward, b);
          return {t1, t2, Path{p, t1.target, {t1}}};
        }
        return {t1, step(p, Direction::Forward, b), Path{p, p, {}}};
      }
      case CausalRule::S1: {
        Built w = run(d.premises.at(0), a.tail(), branch_label(b, d.side));
        Decorator h = par_side(d.side);
        Process other = realiser(branch_label(b, d.side == Side::L ? Side::R : Side::L));
        Transition t2 = step(wrap(w.t2.source, h, other), Direction::Forward, b);
        return {lift(w.t1, h, other), t2, lift(w.link, h, other)};
      }
      case CausalRule::S2: {
        Built w = run(d.premises.at(0), branch_label(a, d.side), b.tail());
        Decorator h = par_side(d.side);
        Process other = realiser(branch_label(a, d.side == Side::L ? Side::R : Side::L));
        Transition t1 = step(wrap(w.t1.source, h, other), Direction::Forward, a);
        return {t1, lift(w.t2, h, other), lift(w.link, h, other)};
      }
      case CausalRule::S3:
        return pairs(d, a, b);
    }
    throw WitnessError("unknown rule");
  }

 private:
  Key fresh() {
    std::uint64_t k = 0;
    while (avoid_.count(Key{k})) ++k;
    avoid_.insert(Key{k});
    return Key{k};
  }

  // a = alpha[k], bare: alpha.r(b) fires a, then b fires under the key
  // left by a, or under a fresh key if b reuses k.
  Built action_first(const ProofLabel& a, const ProofLabel& b) {
    const Label& alpha = a.action().label;
    Process x1 = Process::prefix(alpha, realiser(b));
    Transition t1 = step(x1, Direction::Forward, a);
    Transition hop = key_of(b) != key_of(a) ? t1 : step(x1, Direction::Forward, ProofLabel::base({}, alpha, fresh()));
    Transition t2 = step(hop.target, Direction::Forward, b);
    return {t1, t2, Path{x1, hop.target, {hop}}};
  }

  static Transition lift(const Transition& t, Decorator d, const Process& other) {
    return step(wrap(t.source, d, other), t.direction, t.label.prepend(d));
  }
  static Path lift(const Path& p, Decorator d, const Process& other) {
    Path out{wrap(p.source, d, other), wrap(p.target, d, other), {}};
    for (const auto& s : p.steps) out.steps.push_back(lift(s, d, other));
    return out;
  }

  // Both labels are pairs: their branches are never tau, so the component
  // witnesses have the base-case shape and the two links combine into at
  // most two steps.
  Built pairs(const CausalDerivation& d, const ProofLabel& a, const ProofLabel& b) {
    Built l = run(d.premises.at(0), branch_label(a, Side::L), branch_label(b, Side::L));
    Built r = run(d.premises.at(1), branch_label(a, Side::R), branch_label(b, Side::R));
    Process p = Process::par(l.t1.source, r.t1.source);
    Process q = Process::par(l.t2.source, r.t2.source);
    Transition t1 = step(p, Direction::Forward, a);
    Transition t2 = step(q, Direction::Forward, b);
    for (auto& link : candidate_links(p, q, l.link, r.link)) {
      if (link) return {t1, t2, std::move(*link)};
    }
    throw WitnessError("no link between " + pretty_print(p) + " and " + pretty_print(q));
  }

  static std::optional<Path> sequence(const Process& p, const Path& first, Decorator d1, const Path& second,
                                      Decorator d2) {
    Path out{p, p, {}};
    Process at = p;
    auto push = [&](const Transition& s, Decorator d) {
      auto next = derive(at, s.direction, s.label.prepend(d));
      if (!next) return false;
      at = next->target;
      out.steps.push_back(std::move(*next));
      return true;
    };
    for (const auto& s : first.steps) {
      if (!push(s, d1)) return std::nullopt;
    }
    for (const auto& s : second.steps) {
      if (!push(s, d2)) return std::nullopt;
    }
    out.target = at;
    return out;
  }

  std::vector<std::optional<Path>> candidate_links(const Process& p, const Process& q, const Path& left,
                                                    const Path& right) {
    std::vector<std::optional<Path>> out;
    auto check = [&](std::optional<Path> c) {
      if (c && !(c->target == q)) c.reset();
      out.push_back(std::move(c));
    };
    check(sequence(p, left, Decorator::ParL, right, Decorator::ParR));
    if (out.back()) return out;
    check(sequence(p, right, Decorator::ParR, left, Decorator::ParL));
    if (out.back()) return out;
    // One synchronisation doing both single steps at once.
    if (left.length() == 1 && right.length() == 1) {
      const Transition& x = left.steps[0];
      const Transition& y = right.steps[0];
      if (x.direction == y.direction && !x.label.is_sync() && !y.label.is_sync()) {
        ProofLabel sync = ProofLabel::sync({}, Branch{x.label.prefix(), x.label.action().label, x.label.action().key},
                                           Branch{y.label.prefix(), y.label.action().label, y.label.action().key});
        if (is_valid(sync)) {
          auto s = derive(p, x.direction, sync);
          if (s && s->target == q) {
            out.push_back(Path{p, q, {*s}});
            return out;
          }
        }
      }
    }
    out.push_back(std::nullopt);
    return out;
  }

  KeySet avoid_;
};

}  // namespace

Process realiser(const ProofLabel& t) {
  Process core;
  if (t.is_sync()) {
    core = Process::par(realiser(ProofLabel::of_branch(t.pair().left)),
                        realiser(ProofLabel::of_branch(t.pair().right)));
  } else {
    core = Process::prefix(t.action().label, Process::nil());
  }
  const auto& path = t.prefix();
  for (auto it = path.rbegin(); it != path.rend(); ++it) core = wrap(core, *it, Process::nil());
  return core;
}

RealisationWitness realise(const ProofLabel& t) {
  if (!is_valid(t)) throw InvalidLabel("not a valid proof label: " + to_string(t));
  Process x = realiser(t);
  return {x, step(x, Direction::Forward, t)};
}

std::optional<std::string> realisation_problem(const RealisationWitness& w, const ProofLabel& t) {
  if (!is_std(w.realiser)) return "realiser is not standard";
  if (!(w.step.source == w.realiser)) return "step does not start at the realiser";
  if (w.step.direction != Direction::Forward) return "step is not forward";
  if (!(w.step.label == t)) return "step carries " + to_string(w.step.label);
  auto again = derive(w.realiser, Direction::Forward, t);
  if (!again || !(again->target == w.step.target)) return "step does not re-derive";
  if (!well_formed(w.step.derivation)) return "derivation is malformed";
  return std::nullopt;
}

namespace {

void require_conn(const CausalDerivation& d, const ProofLabel& t1, const ProofLabel& t2) {
  if (!is_valid(t1) || !is_valid(t2)) throw PreconditionViolation("labels must be valid");
  if (d.relation != Relation::Conn || !check_derivation(d, t1, t2)) {
    throw PreconditionViolation("not a connectivity derivation for " + to_string(t1) + ", " + to_string(t2));
  }
}

ConnWitness build_checked(const CausalDerivation& d, const ProofLabel& t1, const ProofLabel& t2, bool base) {
  Builder b(t1, t2);
  Built w = b.run(d, t1, t2);
  ConnWitness out{std::move(w.t1), std::move(w.t2), std::move(w.link)};
  if (auto problem = witness_problem(out, t1, t2, base)) {
    throw WitnessError("witness for " + to_string(t1) + ", " + to_string(t2) + " rejected: " + *problem);
  }
  return out;
}

}  // namespace

ConnWitness realize_connected_base(const CausalDerivation& d, const ProofLabel& t1, const ProofLabel& t2) {
  require_conn(d, t1, t2);
  if (label_of(t1).is_tau() || label_of(t2).is_tau()) throw PreconditionViolation("labels must not be tau");
  return build_checked(d, t1, t2, true);
}

ConnWitness realize_connected(const CausalDerivation& d, const ProofLabel& t1, const ProofLabel& t2) {
  require_conn(d, t1, t2);
  bool base = !label_of(t1).is_tau() && !label_of(t2).is_tau();
  return build_checked(d, t1, t2, base);
}

std::optional<std::string> witness_problem(const ConnWitness& w, const ProofLabel& t1, const ProofLabel& t2,
                                           bool base) {
  auto check_step = [](const Transition& t, const ProofLabel& want, const char* name) -> std::optional<std::string> {
    if (t.direction != Direction::Forward) return std::string(name) + " is not forward";
    if (!(t.label == want)) return std::string(name) + " carries " + to_string(t.label);
    auto again = derive(t.source, Direction::Forward, want);
    if (!again || !(again->target == t.target)) return std::string(name) + " does not re-derive";
    return std::nullopt;
  };
  if (auto p = check_step(w.t1, t1, "t1")) return p;
  if (auto p = check_step(w.t2, t2, "t2")) return p;
  if (!(w.link.source == w.t1.source)) return "link does not start at t1's source";
  if (!(w.link.target == w.t2.source)) return "link does not end at t2's source";
  if (!is_valid_path(w.link)) return "link is not a valid path";
  if (w.link.length() > 2) return "link has " + std::to_string(w.link.length()) + " steps";
  if (!is_std(backward_normalize(w.t1.source).target)) return "t1's source is not reachable";
  if (base) {
    if (w.link.length() > 1) return "base-case link has " + std::to_string(w.link.length()) + " steps";
    if (!is_std(w.t1.source) && !is_std(w.t2.source)) return "neither source is standard";
  }
  return std::nullopt;
}

}  // namespace ccskp
