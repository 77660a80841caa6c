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

#include "ccskp/causality.hpp"

namespace ccskp {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Conn:
      return "conn";
    case Relation::Dep:
      return "dep";
    case Relation::Indep:
      return "indep";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view text) {
  if (text == "conn") return Relation::Conn;
  if (text == "dep") return Relation::Dep;
  if (text == "indep") return Relation::Indep;
  return std::nullopt;
}

std::string rule_name(const CausalDerivation& d) {
  static const char* kNames[] = {"A1", "A2", "C1", "C2", "P1", "P2", "S1", "S2", "S3"};
  std::string out = kNames[static_cast<int>(d.rule)];
  switch (d.rule) {
    case CausalRule::A1:
    case CausalRule::A2:
    case CausalRule::S3:
      return out;
    default:
      return out + (d.side == Side::L ? "_L" : "_R");
  }
}

namespace {

// A proof label, or a sync branch read as one, with some outer decorators
// already peeled off. Borrowed; never outlives the labels it points into.
struct View {
  const Decorator* path = nullptr;
  std::size_t len = 0;
  const Label* label = nullptr;  // base labels and branches
  Key key;
  const ProofLabel::Pair* pair = nullptr;

  static View of(const ProofLabel& t) {
    View v{t.prefix().data(), t.prefix().size(), nullptr, Key{}, nullptr};
    if (t.is_sync()) {
      v.pair = &t.pair();
    } else {
      v.label = &t.action().label;
      v.key = t.action().key;
    }
    return v;
  }
  static View of(const Branch& b) { return View{b.path.data(), b.path.size(), &b.label, b.key, nullptr}; }

  bool bare_base() const { return len == 0 && !pair; }
  bool bare_pair() const { return len == 0 && pair; }
  bool has_head() const { return len > 0; }
  Decorator head() const { return path[0]; }
  View tail() const {
    View v = *this;
    ++v.path;
    --v.len;
    return v;
  }
  Key key_of() const { return pair ? pair->left.key : key; }
  View branch(Side s) const { return of(s == Side::L ? pair->left : pair->right); }

  ProofLabel materialize() const {
    DecoratorPath p(path, path + len);
    if (pair) return ProofLabel::sync(std::move(p), pair->left, pair->right);
    return ProofLabel::base(std::move(p), *label, key);
  }
};

Side side_of(Decorator d) { return d == Decorator::SumL || d == Decorator::ParL ? Side::L : Side::R; }

CausalDerivation node(Relation r, CausalRule rule, Side side = Side::L) {
  CausalDerivation d;
  d.relation = r;
  d.rule = rule;
  d.side = side;
  return d;
}

// Decides r(a, b). Builds the derivation into `out` when it is non-null.
bool decide(Relation r, const View& a, const View& b, CausalDerivation* out) {
  if (r != Relation::Indep) {
    if (a.bare_base()) {
      if (out) *out = node(r, CausalRule::A1);
      return true;
    }
    if (b.bare_base()) {
      if (out) *out = node(r, CausalRule::A2);
      return true;
    }
  }

  if (a.has_head() && b.has_head()) {
    Decorator x = a.head(), y = b.head();
    if (is_par(x) != is_par(y)) return false;
    Side s = side_of(x);
    bool par = is_par(x);
    if (x == y) {
      CausalDerivation sub;
      if (!decide(r, a.tail(), b.tail(), out ? &sub : nullptr)) return false;
      if (out) {
        *out = node(r, par ? CausalRule::P1 : CausalRule::C1, s);
        out->premises.push_back(std::move(sub));
      }
      return true;
    }
    if (!par) {
      if (r == Relation::Indep) return false;
      if (out) *out = node(r, CausalRule::C2, s);
      return true;
    }
    Key k1 = a.key_of(), k2 = b.key_of();
    if (r == Relation::Dep && k1 != k2) return false;
    if (r == Relation::Indep && k1 == k2) return false;
    if (out) {
      *out = node(r, CausalRule::P2, s);
      if (r != Relation::Conn) out->keys = std::make_pair(k1, k2);
    }
    return true;
  }

  if (a.has_head() && b.bare_pair()) {
    if (!is_par(a.head())) return false;
    Side s = side_of(a.head());
    CausalDerivation sub;
    if (!decide(r, a.tail(), b.branch(s), out ? &sub : nullptr)) return false;
    if (out) {
      *out = node(r, CausalRule::S1, s);
      out->premises.push_back(std::move(sub));
    }
    return true;
  }

  if (a.bare_pair() && b.has_head()) {
    if (!is_par(b.head())) return false;
    Side s = side_of(b.head());
    CausalDerivation sub;
    if (!decide(r, a.branch(s), b.tail(), out ? &sub : nullptr)) return false;
    if (out) {
      *out = node(r, CausalRule::S2, s);
      out->premises.push_back(std::move(sub));
    }
    return true;
  }

  if (a.bare_pair() && b.bare_pair()) {
    View al = a.branch(Side::L), ar = a.branch(Side::R);
    View bl = b.branch(Side::L), br = b.branch(Side::R);
    CausalDerivation left, right;
    CausalDerivation* lp = out ? &left : nullptr;
    CausalDerivation* rp = out ? &right : nullptr;
    Side side = Side::L;
    if (r == Relation::Dep) {
      if (decide(Relation::Dep, al, bl, lp) && decide(Relation::Conn, ar, br, rp)) {
        side = Side::L;
      } else if (decide(Relation::Dep, ar, br, rp) && decide(Relation::Conn, al, bl, lp)) {
        side = Side::R;
      } else {
        return false;
      }
    } else if (!decide(r, al, bl, lp) || !decide(r, ar, br, rp)) {
      return false;
    }
    if (out) {
      *out = node(r, CausalRule::S3, side);
      out->premises.push_back(std::move(left));
      out->premises.push_back(std::move(right));
    }
    return true;
  }
  return false;
}

bool recheck(const CausalDerivation& d, Relation r, const View& a, const View& b) {
  if (d.relation != r) return false;
  auto premise_count = [&](std::size_t n) { return d.premises.size() == n; };
  switch (d.rule) {
    case CausalRule::A1:
      return r != Relation::Indep && a.bare_base() && premise_count(0);
    case CausalRule::A2:
      return r != Relation::Indep && b.bare_base() && premise_count(0);
    case CausalRule::C1:
    case CausalRule::P1: {
      Decorator want = d.rule == CausalRule::C1 ? (d.side == Side::L ? Decorator::SumL : Decorator::SumR)
                                                : (d.side == Side::L ? Decorator::ParL : Decorator::ParR);
      return a.has_head() && b.has_head() && a.head() == want && b.head() == want && premise_count(1) &&
             recheck(d.premises[0], r, a.tail(), b.tail());
    }
    case CausalRule::C2: {
      Decorator want = d.side == Side::L ? Decorator::SumL : Decorator::SumR;
      return r != Relation::Indep && a.has_head() && b.has_head() && a.head() == want &&
             b.head() == opposite(want) && premise_count(0);
    }
    case CausalRule::P2: {
      Decorator want = d.side == Side::L ? Decorator::ParL : Decorator::ParR;
      if (!(a.has_head() && b.has_head() && a.head() == want && b.head() == opposite(want) && premise_count(0))) {
        return false;
      }
      if (r == Relation::Conn) return !d.keys;
      if (!d.keys || d.keys->first != a.key_of() || d.keys->second != b.key_of()) return false;
      return r == Relation::Dep ? d.keys->first == d.keys->second : d.keys->first != d.keys->second;
    }
    case CausalRule::S1: {
      Decorator want = d.side == Side::L ? Decorator::ParL : Decorator::ParR;
      return a.has_head() && a.head() == want && b.bare_pair() && premise_count(1) &&
             recheck(d.premises[0], r, a.tail(), b.branch(d.side));
    }
    case CausalRule::S2: {
      Decorator want = d.side == Side::L ? Decorator::ParL : Decorator::ParR;
      return b.has_head() && b.head() == want && a.bare_pair() && premise_count(1) &&
             recheck(d.premises[0], r, a.branch(d.side), b.tail());
    }
    case CausalRule::S3: {
      if (!(a.bare_pair() && b.bare_pair() && premise_count(2))) return false;
      Relation lr = r, rr = r;
      if (r == Relation::Dep) {
        lr = d.side == Side::L ? Relation::Dep : Relation::Conn;
        rr = d.side == Side::L ? Relation::Conn : Relation::Dep;
      }
      return recheck(d.premises[0], lr, a.branch(Side::L), b.branch(Side::L)) &&
             recheck(d.premises[1], rr, a.branch(Side::R), b.branch(Side::R));
    }
  }
  return false;
}

const char* symbol(Relation r) {
  switch (r) {
    case Relation::Conn:
      return " conn ";
    case Relation::Dep:
      return " dep ";
    case Relation::Indep:
      return " indep ";
  }
  return " ? ";
}

void render(const CausalDerivation& d, const View& a, const View& b, int depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += rule_name(d) + ": " + to_string(a.materialize()) + symbol(d.relation) + to_string(b.materialize());
  if (d.keys) {
    out += "  [key " + std::to_string(d.keys->first.value) + (d.keys->first == d.keys->second ? " = " : " != ") +
           std::to_string(d.keys->second.value) + "]";
  }
  out += "\n";
  switch (d.rule) {
    case CausalRule::C1:
    case CausalRule::P1:
      if (!d.premises.empty()) render(d.premises[0], a.tail(), b.tail(), depth + 1, out);
      break;
    case CausalRule::S1:
      if (!d.premises.empty()) render(d.premises[0], a.tail(), b.branch(d.side), depth + 1, out);
      break;
    case CausalRule::S2:
      if (!d.premises.empty()) render(d.premises[0], a.branch(d.side), b.tail(), depth + 1, out);
      break;
    case CausalRule::S3:
      if (d.premises.size() == 2) {
        render(d.premises[0], a.branch(Side::L), b.branch(Side::L), depth + 1, out);
        render(d.premises[1], a.branch(Side::R), b.branch(Side::R), depth + 1, out);
      }
      break;
    default:
      break;
  }
}

}  // namespace

std::optional<CausalDerivation> check(Relation r, const ProofLabel& t1, const ProofLabel& t2) {
  CausalDerivation d;
  if (!decide(r, View::of(t1), View::of(t2), &d)) return std::nullopt;
  return d;
}

std::optional<CausalDerivation> check_conn(const ProofLabel& t1, const ProofLabel& t2) {
  return check(Relation::Conn, t1, t2);
}
std::optional<CausalDerivation> check_dep(const ProofLabel& t1, const ProofLabel& t2) {
  return check(Relation::Dep, t1, t2);
}
std::optional<CausalDerivation> check_indep(const ProofLabel& t1, const ProofLabel& t2) {
  return check(Relation::Indep, t1, t2);
}

bool holds(Relation r, const ProofLabel& t1, const ProofLabel& t2) {
  return decide(r, View::of(t1), View::of(t2), nullptr);
}

bool check_derivation(const CausalDerivation& d, const ProofLabel& t1, const ProofLabel& t2) {
  return recheck(d, d.relation, View::of(t1), View::of(t2));
}

std::string render(const CausalDerivation& d, const ProofLabel& t1, const ProofLabel& t2) {
  std::string out;
  render(d, View::of(t1), View::of(t2), 0, out);
  return out;
}

}  // namespace ccskp
