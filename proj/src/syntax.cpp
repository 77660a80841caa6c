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

#include "ccskp/syntax.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "scanner.hpp"

namespace ccskp {

std::optional<Label> Label::complement() const {
  switch (kind_) {
    case Kind::Input:
      return Label::output(name_);
    case Kind::Output:
      return Label::input(name_);
    case Kind::Tau:
      break;
  }
  return std::nullopt;
}

bool Label::is_complement_of(const Label& other) const {
  if (is_tau() || other.is_tau()) return false;
  return kind_ != other.kind_ && name_ == other.name_;
}

struct Process::Node {
  ProcessKind kind = ProcessKind::Nil;
  Label label = Label::tau();
  Key key;
  Name name;
  Process a;
  Process b;
  std::vector<Key> keys;
  std::size_t hash = 0;
  std::size_t size = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t label_hash(const Label& a) {
  return mix(static_cast<std::size_t>(a.kind()), std::hash<std::string>{}(a.name().id));
}

std::vector<Key> merge_keys(const std::vector<Key>& x, const std::vector<Key>& y) {
  std::vector<Key> out;
  out.reserve(x.size() + y.size());
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

// 0 is the null node; accessors fall back to this shared empty node.
const std::shared_ptr<const Process::Node>& nil_node() {
  static const std::shared_ptr<const Process::Node> n = [] {
    auto node = std::make_shared<Process::Node>();
    node->hash = 0x51ed270b;
    return std::shared_ptr<const Process::Node>(node);
  }();
  return n;
}

}  // namespace

Process::Process() : node_(nullptr) {}

Process Process::nil() { return Process(); }

Process Process::prefix(Label a, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::Prefix;
  n->hash = mix(mix(1, label_hash(a)), body.hash());
  n->keys = body.sorted_keys();
  n->size = body.size() + 1;
  n->label = std::move(a);
  n->a = std::move(body);
  return Process(std::move(n));
}

Process Process::keyed(Label a, Key k, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::KeyedPrefix;
  n->hash = mix(mix(mix(2, label_hash(a)), std::hash<std::uint64_t>{}(k.value)), body.hash());
  n->keys = merge_keys(body.sorted_keys(), {k});
  n->size = body.size() + 1;
  n->label = std::move(a);
  n->key = k;
  n->a = std::move(body);
  return Process(std::move(n));
}

Process Process::sum(Process left, Process right) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::Sum;
  n->hash = mix(mix(3, left.hash()), right.hash());
  n->keys = merge_keys(left.sorted_keys(), right.sorted_keys());
  n->size = left.size() + right.size() + 1;
  n->a = std::move(left);
  n->b = std::move(right);
  return Process(std::move(n));
}

Process Process::par(Process left, Process right) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::Par;
  n->hash = mix(mix(4, left.hash()), right.hash());
  n->keys = merge_keys(left.sorted_keys(), right.sorted_keys());
  n->size = left.size() + right.size() + 1;
  n->a = std::move(left);
  n->b = std::move(right);
  return Process(std::move(n));
}

Process Process::restrict(Name nm, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::Restrict;
  n->hash = mix(mix(5, std::hash<std::string>{}(nm.id)), body.hash());
  n->keys = body.sorted_keys();
  n->size = body.size() + 1;
  n->name = std::move(nm);
  n->a = std::move(body);
  return Process(std::move(n));
}

ProcessKind Process::kind() const { return node_ ? node_->kind : ProcessKind::Nil; }
const Label& Process::label() const { return (node_ ? node_ : nil_node())->label; }
Key Process::key() const { return node_ ? node_->key : Key{}; }
const Process& Process::body() const { return (node_ ? node_ : nil_node())->a; }
const Process& Process::left() const { return (node_ ? node_ : nil_node())->a; }
const Process& Process::right() const { return (node_ ? node_ : nil_node())->b; }
const Name& Process::bound_name() const { return (node_ ? node_ : nil_node())->name; }
const std::vector<Key>& Process::sorted_keys() const { return (node_ ? node_ : nil_node())->keys; }
std::size_t Process::hash() const { return (node_ ? node_ : nil_node())->hash; }
std::size_t Process::size() const { return node_ ? node_->size : 0; }

bool Process::has_key(Key k) const {
  const auto& ks = sorted_keys();
  return std::binary_search(ks.begin(), ks.end(), k);
}

bool operator==(const Process& x, const Process& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind() || x.hash() != y.hash() || x.size() != y.size()) return false;
  switch (x.kind()) {
    case ProcessKind::Nil:
      return true;
    case ProcessKind::Prefix:
      return x.label() == y.label() && x.body() == y.body();
    case ProcessKind::KeyedPrefix:
      return x.label() == y.label() && x.key() == y.key() && x.body() == y.body();
    case ProcessKind::Sum:
    case ProcessKind::Par:
      return x.left() == y.left() && x.right() == y.right();
    case ProcessKind::Restrict:
      return x.bound_name() == y.bound_name() && x.body() == y.body();
  }
  return false;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ProcessReader {
 public:
  explicit ProcessReader(std::string_view text) : in_(text) {}

  Process read() {
    Process p = sum();
    if (!in_.at_end()) in_.fail("unexpected trailing input");
    return p;
  }

 private:
  Process sum() {
    Process p = par();
    while (in_.accept('+')) p = Process::sum(p, par());
    return p;
  }

  Process par() {
    Process p = pref();
    while (in_.accept('|')) p = Process::par(p, pref());
    return p;
  }

  Process pref() {
    char c = in_.peek();
    if (c == '0' || c == '(') return atom();
    if (c != '~' && !in_.lower_ahead()) in_.fail("expected a process");
    Label a = in_.action();
    std::optional<Key> k;
    if (in_.accept('[')) {
      k = in_.natural();
      in_.expect(']');
    }
    Process body = in_.accept('.') ? pref() : Process::nil();
    return k ? Process::keyed(std::move(a), *k, std::move(body)) : Process::prefix(std::move(a), std::move(body));
  }

  Process atom() {
    Process p;
    if (in_.accept('(')) {
      p = sum();
      in_.expect(')');
    } else {
      in_.expect('0');
      if (std::isdigit(static_cast<unsigned char>(in_.peek_raw()))) in_.fail("expected '0'");
    }
    while (in_.accept('\\')) p = Process::restrict(in_.name(), std::move(p));
    return p;
  }

  detail::Scanner in_;
};

// Binding levels, loosest first.
enum Level { kSum = 0, kPar = 1, kPref = 2, kAtom = 3 };

void print(const Process& p, int ctx, std::string& out) {
  auto open = [&](int own) {
    if (ctx > own) out += '(';
  };
  auto close = [&](int own) {
    if (ctx > own) out += ')';
  };
  switch (p.kind()) {
    case ProcessKind::Nil:
      out += '0';
      return;
    case ProcessKind::Prefix:
    case ProcessKind::KeyedPrefix:
      open(kPref);
      out += to_string(p.label());
      if (p.kind() == ProcessKind::KeyedPrefix) out += "[" + std::to_string(p.key().value) + "]";
      if (p.body().kind() != ProcessKind::Nil) {
        out += '.';
        print(p.body(), kPref, out);
      }
      close(kPref);
      return;
    case ProcessKind::Sum:
      open(kSum);
      print(p.left(), kSum, out);
      out += " + ";
      print(p.right(), kPar, out);
      close(kSum);
      return;
    case ProcessKind::Par:
      open(kPar);
      print(p.left(), kPar, out);
      out += " | ";
      print(p.right(), kPref, out);
      close(kPar);
      return;
    case ProcessKind::Restrict:
      print(p.body(), kAtom, out);
      out += '\\';
      out += p.bound_name().id;
      return;
  }
}

void structure(const Process& p, std::string& out) {
  auto lab = [](const Label& a) {
    switch (a.kind()) {
      case Label::Kind::Input:
        return "in " + a.name().id;
      case Label::Kind::Output:
        return "out " + a.name().id;
      case Label::Kind::Tau:
        break;
    }
    return std::string("tau");
  };
  switch (p.kind()) {
    case ProcessKind::Nil:
      out += "Nil";
      return;
    case ProcessKind::Prefix:
      out += "Prefix(" + lab(p.label()) + ", ";
      structure(p.body(), out);
      out += ')';
      return;
    case ProcessKind::KeyedPrefix:
      out += "KeyedPrefix(" + lab(p.label()) + ", " + std::to_string(p.key().value) + ", ";
      structure(p.body(), out);
      out += ')';
      return;
    case ProcessKind::Sum:
    case ProcessKind::Par:
      out += p.kind() == ProcessKind::Sum ? "Sum(" : "Par(";
      structure(p.left(), out);
      out += ", ";
      structure(p.right(), out);
      out += ')';
      return;
    case ProcessKind::Restrict:
      out += "Restrict(" + p.bound_name().id + ", ";
      structure(p.body(), out);
      out += ')';
      return;
  }
}

}  // namespace

Process parse(std::string_view text) { return ProcessReader(text).read(); }

std::string pretty_print(const Process& p) {
  std::string out;
  print(p, kSum, out);
  return out;
}

std::string to_string(const Label& a) {
  switch (a.kind()) {
    case Label::Kind::Input:
      return a.name().id;
    case Label::Kind::Output:
      return "~" + a.name().id;
    case Label::Kind::Tau:
      break;
  }
  return "tau";
}

std::string structure(const Process& p) {
  std::string out;
  structure(p, out);
  return out;
}

KeySet keys_of(const Process& p) {
  const auto& ks = p.sorted_keys();
  return KeySet(ks.begin(), ks.end());
}

bool is_std(const Process& p) { return p.is_standard(); }

Key least_absent_key(const Process& p) {
  std::uint64_t k = 0;
  for (Key used : p.sorted_keys()) {
    if (used.value != k) break;
    ++k;
  }
  return Key{k};
}

// ---------------------------------------------------------------------------
// Bound names

namespace {

void collect_free(const Process& p, std::vector<Name>& bound, std::set<Name>& out) {
  auto note = [&](const Label& a) {
    if (a.is_tau()) return;
    if (std::find(bound.begin(), bound.end(), a.name()) == bound.end()) out.insert(a.name());
  };
  switch (p.kind()) {
    case ProcessKind::Nil:
      return;
    case ProcessKind::Prefix:
    case ProcessKind::KeyedPrefix:
      note(p.label());
      collect_free(p.body(), bound, out);
      return;
    case ProcessKind::Sum:
    case ProcessKind::Par:
      collect_free(p.left(), bound, out);
      collect_free(p.right(), bound, out);
      return;
    case ProcessKind::Restrict:
      bound.push_back(p.bound_name());
      collect_free(p.body(), bound, out);
      bound.pop_back();
      return;
  }
}

class Canonicalizer {
 public:
  explicit Canonicalizer(std::set<Name> free) : free_(std::move(free)) {}

  Process run(const Process& p) {
    switch (p.kind()) {
      case ProcessKind::Nil:
        return p;
      case ProcessKind::Prefix:
        return Process::prefix(rename(p.label()), run(p.body()));
      case ProcessKind::KeyedPrefix:
        return Process::keyed(rename(p.label()), p.key(), run(p.body()));
      case ProcessKind::Sum:
        return Process::sum(run(p.left()), run(p.right()));
      case ProcessKind::Par:
        return Process::par(run(p.left()), run(p.right()));
      case ProcessKind::Restrict: {
        Name fresh = binder_name(scope_.size());
        scope_.emplace_back(p.bound_name(), fresh);
        Process body = run(p.body());
        scope_.pop_back();
        return Process::restrict(std::move(fresh), std::move(body));
      }
    }
    return p;
  }

 private:
  Label rename(const Label& a) const {
    if (a.is_tau()) return a;
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == a.name()) {
        return a.kind() == Label::Kind::Input ? Label::input(it->second) : Label::output(it->second);
      }
    }
    return a;
  }

  const Name& binder_name(std::size_t depth) {
    while (levels_.size() <= depth) {
      Name candidate{"n" + std::to_string(next_++)};
      if (!free_.count(candidate)) levels_.push_back(std::move(candidate));
    }
    return levels_[depth];
  }

  std::set<Name> free_;
  std::vector<Name> levels_;
  std::size_t next_ = 0;
  std::vector<std::pair<Name, Name>> scope_;
};

}  // namespace

std::set<Name> free_names(const Process& p) {
  std::set<Name> out;
  std::vector<Name> bound;
  collect_free(p, bound, out);
  return out;
}

Process canonicalize(const Process& p) { return Canonicalizer(free_names(p)).run(p); }

bool alpha_equivalent(const Process& a, const Process& b) { return canonicalize(a) == canonicalize(b); }

}  // namespace ccskp
