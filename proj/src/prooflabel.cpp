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

#include "ccskp/prooflabel.hpp"

#include <functional>

#include "scanner.hpp"

namespace ccskp {

Decorator opposite(Decorator d) {
  switch (d) {
    case Decorator::SumL:
      return Decorator::SumR;
    case Decorator::SumR:
      return Decorator::SumL;
    case Decorator::ParL:
      return Decorator::ParR;
    case Decorator::ParR:
      break;
  }
  return Decorator::ParL;
}

bool is_par(Decorator d) { return d == Decorator::ParL || d == Decorator::ParR; }

std::string to_string(Decorator d) {
  switch (d) {
    case Decorator::SumL:
      return "+L";
    case Decorator::SumR:
      return "+R";
    case Decorator::ParL:
      return "|L";
    case Decorator::ParR:
      break;
  }
  return "|R";
}

ProofLabel ProofLabel::base(DecoratorPath prefix, Label a, Key k) {
  return ProofLabel(std::move(prefix), Action{std::move(a), k});
}

ProofLabel ProofLabel::sync(DecoratorPath prefix, Branch left, Branch right) {
  return ProofLabel(std::move(prefix), Pair{std::move(left), std::move(right)});
}

ProofLabel ProofLabel::of_branch(const Branch& b) { return base(b.path, b.label, b.key); }

ProofLabel ProofLabel::prepend(Decorator d) const {
  DecoratorPath p;
  p.reserve(prefix_.size() + 1);
  p.push_back(d);
  p.insert(p.end(), prefix_.begin(), prefix_.end());
  return ProofLabel(std::move(p), core_);
}

std::optional<Decorator> ProofLabel::head() const {
  if (prefix_.empty()) return std::nullopt;
  return prefix_.front();
}

ProofLabel ProofLabel::tail() const {
  return ProofLabel(DecoratorPath(prefix_.begin() + 1, prefix_.end()), core_);
}

std::size_t ProofLabel::decorator_count() const {
  std::size_t n = prefix_.size();
  if (is_sync()) n += pair().left.path.size() + pair().right.path.size();
  return n;
}

Label label_of(const ProofLabel& t) { return t.is_sync() ? Label::tau() : t.action().label; }

Key key_of(const ProofLabel& t) { return t.is_sync() ? t.pair().left.key : t.action().key; }

bool is_valid(const ProofLabel& t) {
  if (!t.is_sync()) return true;
  const auto& [l, r] = t.pair();
  return l.label.is_complement_of(r.label) && l.key == r.key;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

constexpr Decorator kAllDecorators[] = {Decorator::SumL, Decorator::SumR, Decorator::ParL, Decorator::ParR};

// All decorator strings of exactly length n, in lexicographic order.
std::vector<DecoratorPath> paths_of_length(std::size_t n) {
  std::vector<DecoratorPath> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<DecoratorPath> next;
    next.reserve(out.size() * 4);
    for (const auto& p : out) {
      for (Decorator d : kAllDecorators) {
        auto q = p;
        q.push_back(d);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<ProofLabel> enumerate_valid(std::span<const Name> names, std::span<const Key> keys,
                                        std::size_t max_decorators) {
  std::vector<Label> actions;
  std::vector<Label> visible;
  for (const auto& n : names) {
    visible.push_back(Label::input(n));
    visible.push_back(Label::output(n));
  }
  actions = visible;
  actions.push_back(Label::tau());

  std::vector<std::vector<DecoratorPath>> by_length;
  for (std::size_t n = 0; n <= max_decorators; ++n) by_length.push_back(paths_of_length(n));

  std::vector<ProofLabel> out;
  for (std::size_t total = 0; total <= max_decorators; ++total) {
    for (const auto& v : by_length[total]) {
      for (const auto& a : actions) {
        for (Key k : keys) out.push_back(ProofLabel::base(v, a, k));
      }
    }
    // Split `total` across the outer prefix and the two branch paths.
    for (std::size_t outer = 0; outer <= total; ++outer) {
      for (std::size_t left = 0; outer + left <= total; ++left) {
        std::size_t right = total - outer - left;
        for (const auto& v : by_length[outer]) {
          for (const auto& v1 : by_length[left]) {
            for (const auto& v2 : by_length[right]) {
              for (const auto& a : visible) {
                for (Key k : keys) {
                  out.push_back(ProofLabel::sync(v, Branch{v1, a, k}, Branch{v2, *a.complement(), k}));
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

void append_path(const DecoratorPath& p, std::string& out) {
  for (Decorator d : p) {
    out += to_string(d);
    out += '.';
  }
}

void append_action(const Label& a, Key k, std::string& out) {
  out += to_string(a);
  out += '[';
  out += std::to_string(k.value);
  out += ']';
}

class LabelReader {
 public:
  explicit LabelReader(std::string_view text) : in_(text) {}

  ProofLabel read() {
    ProofLabel t = label();
    if (!in_.at_end()) in_.fail("unexpected trailing input");
    return t;
  }

 private:
  // Reads `+L.` / `|R.` style decorators; stops before `<` or an action.
  DecoratorPath path() {
    DecoratorPath p;
    for (;;) {
      char c = in_.peek();
      if (c != '+' && c != '|') return p;
      p.push_back(decorator());
      in_.expect('.');
    }
  }

  Decorator decorator() {
    bool sum = in_.accept('+');
    if (!sum) in_.expect('|');
    char side = in_.peek_raw();
    if (side != 'L' && side != 'R') in_.fail("expected 'L' or 'R' after decorator");
    in_.expect(side);
    if (sum) return side == 'L' ? Decorator::SumL : Decorator::SumR;
    return side == 'L' ? Decorator::ParL : Decorator::ParR;
  }

  std::pair<Label, Key> keyed_action() {
    Label a = in_.action();
    in_.expect('[');
    Key k = in_.natural();
    in_.expect(']');
    return {std::move(a), k};
  }

  Branch branch(Decorator side) {
    if (decorator() != side) in_.fail(side == Decorator::ParL ? "expected '|L'" : "expected '|R'");
    DecoratorPath inner = path();
    auto [a, k] = keyed_action();
    return Branch{std::move(inner), std::move(a), k};
  }

  ProofLabel label() {
    DecoratorPath prefix = path();
    if (in_.accept('<')) {
      Branch l = branch(Decorator::ParL);
      in_.expect(',');
      Branch r = branch(Decorator::ParR);
      in_.expect('>');
      return ProofLabel::sync(std::move(prefix), std::move(l), std::move(r));
    }
    auto [a, k] = keyed_action();
    return ProofLabel::base(std::move(prefix), std::move(a), k);
  }

  detail::Scanner in_;
};

}  // namespace

std::string to_string(const ProofLabel& t) {
  std::string out;
  append_path(t.prefix(), out);
  if (!t.is_sync()) {
    append_action(t.action().label, t.action().key, out);
    return out;
  }
  const auto& [l, r] = t.pair();
  out += "<|L ";
  append_path(l.path, out);
  append_action(l.label, l.key, out);
  out += ", |R ";
  append_path(r.path, out);
  append_action(r.label, r.key, out);
  out += '>';
  return out;
}

ProofLabel parse_label(std::string_view text) { return LabelReader(text).read(); }

std::size_t ProofLabelHash::operator()(const ProofLabel& t) const { return std::hash<std::string>{}(to_string(t)); }

}  // namespace ccskp
