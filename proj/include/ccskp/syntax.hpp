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

#ifndef CCSKP_SYNTAX_HPP
#define CCSKP_SYNTAX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccskp {

/// A channel name. Identifiers start with a lowercase letter.
struct Name {
  std::string id;

  auto operator<=>(const Name&) const = default;
};

/// A key attached to an executed prefix. Keys are plain naturals.
struct Key {
  std::uint64_t value = 0;

  auto operator<=>(const Key&) const = default;
};

using KeySet = std::set<Key>;

/// Input `a`, output `~a`, or the silent action `tau`.
class Label {
 public:
  enum class Kind : std::uint8_t { Input, Output, Tau };

  static Label input(Name n) { return Label(Kind::Input, std::move(n)); }
  static Label output(Name n) { return Label(Kind::Output, std::move(n)); }
  static Label tau() { return Label(Kind::Tau, Name{}); }

  Kind kind() const { return kind_; }
  bool is_tau() const { return kind_ == Kind::Tau; }
  // Empty for tau.
  const Name& name() const { return name_; }

  /// Swaps input and output; tau has no complement.
  std::optional<Label> complement() const;
  bool is_complement_of(const Label& other) const;
  /// True when the label is `a` or `~a`.
  bool on(const Name& n) const { return !is_tau() && name_ == n; }

  auto operator<=>(const Label&) const = default;

 private:
  Label(Kind k, Name n) : kind_(k), name_(std::move(n)) {}

  Kind kind_;
  Name name_;
};

enum class ProcessKind : std::uint8_t { Nil, Prefix, KeyedPrefix, Sum, Par, Restrict };

/// Immutable process term. Copies share structure.
///
/// Equality is structural on the raw tree. Use canonicalize() or
/// alpha_equivalent() to identify terms that differ only in bound names.
class Process {
 public:
  Process();  // 0

  static Process nil();
  static Process prefix(Label a, Process body);
  static Process keyed(Label a, Key k, Process body);
  static Process sum(Process left, Process right);
  static Process par(Process left, Process right);
  static Process restrict(Name n, Process body);

  ProcessKind kind() const;

  // Accessors below are only meaningful for the matching kinds.
  const Label& label() const;
  Key key() const;
  const Process& body() const;
  const Process& left() const;
  const Process& right() const;
  const Name& bound_name() const;

  /// Sorted, duplicate-free keys of this term (cached).
  const std::vector<Key>& sorted_keys() const;
  bool has_key(Key k) const;
  bool is_standard() const { return sorted_keys().empty(); }
  std::size_t hash() const;
  /// Number of operators: prefixes, keyed prefixes, sums, pars and restrictions.
  std::size_t size() const;

  friend bool operator==(const Process& a, const Process& b);

  struct Node;  // opaque

 private:
  explicit Process(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct ProcessHash {
  std::size_t operator()(const Process& p) const { return p.hash(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Process parse(std::string_view text);
std::string pretty_print(const Process& p);
std::string to_string(const Label& a);
/// Debug form, e.g. `Par(Prefix(in m, Nil), Prefix(in l, Nil))`.
std::string structure(const Process& p);

KeySet keys_of(const Process& p);
bool is_std(const Process& p);

/// Renames every binder to a name chosen by its nesting depth so that
/// alpha-equivalent terms become identical. Free names are left untouched
/// and are never reused as binder names.
Process canonicalize(const Process& p);
bool alpha_equivalent(const Process& a, const Process& b);
std::set<Name> free_names(const Process& p);

/// Least natural number that is not a key of `p`.
Key least_absent_key(const Process& p);

}  // namespace ccskp

#endif  // CCSKP_SYNTAX_HPP
