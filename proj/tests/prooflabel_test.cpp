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

#include <set>

#include "ccskp/prooflabel.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace ccskp;

namespace {

const Name a{"a"};
const Name m{"m"};

ProofLabel base(DecoratorPath v, Label l, std::uint64_t k) { return ProofLabel::base(std::move(v), std::move(l), Key{k}); }

std::size_t pow4(std::size_t n) {
  std::size_t r = 1;
  while (n--) r *= 4;
  return r;
}

// Closed-form count of the valid labels: base labels over 2N+1 actions,
// pairs over 2N visible actions with the decorator budget split three ways.
std::size_t expected_count(std::size_t names, std::size_t keys, std::size_t depth) {
  std::size_t total = 0;
  for (std::size_t n = 0; n <= depth; ++n) {
    total += pow4(n) * (2 * names + 1) * keys;
    total += (n + 2) * (n + 1) / 2 * pow4(n) * 2 * names * keys;
  }
  return total;
}

// Every label of the raw representation (valid or not) within the budget.
std::vector<ProofLabel> brute_force(const std::vector<Label>& actions, const std::vector<Key>& keys, std::size_t depth) {
  std::vector<DecoratorPath> paths{{}};
  for (std::size_t i = 0, start = 0; i < depth; ++i) {
    std::size_t end = paths.size();
    for (std::size_t j = start; j < end; ++j) {
      for (int d = 0; d < 4; ++d) {
        auto q = paths[j];
        q.push_back(static_cast<Decorator>(d));
        paths.push_back(q);
      }
    }
    start = end;
  }
  std::vector<ProofLabel> out;
  for (const auto& v : paths) {
    for (const auto& x : actions) {
      for (Key k : keys) out.push_back(ProofLabel::base(v, x, k));
    }
    for (const auto& v1 : paths) {
      for (const auto& v2 : paths) {
        if (v.size() + v1.size() + v2.size() > depth) continue;
        for (const auto& x : actions) {
          for (const auto& y : actions) {
            for (Key k1 : keys) {
              for (Key k2 : keys) out.push_back(ProofLabel::sync(v, Branch{v1, x, k1}, Branch{v2, y, k2}));
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("decorators") {
  CHECK(opposite(Decorator::SumL) == Decorator::SumR);
  CHECK(opposite(Decorator::ParR) == Decorator::ParL);
  for (int d = 0; d < 4; ++d) CHECK(opposite(opposite(static_cast<Decorator>(d))) == static_cast<Decorator>(d));
}

TEST_CASE("label_of and key_of") {
  CHECK(label_of(base({Decorator::ParL}, Label::input(m), 4)) == Label::input(m));
  CHECK(key_of(base({Decorator::ParL}, Label::input(m), 4)) == Key{4});
  ProofLabel pair = ProofLabel::sync({}, Branch{{}, Label::input(a), Key{5}}, Branch{{}, Label::output(a), Key{5}});
  CHECK(label_of(pair).is_tau());
  CHECK(key_of(pair) == Key{5});
  CHECK(label_of(base({Decorator::SumR, Decorator::ParL}, Label::input(a), 3)) == Label::input(a));
  CHECK(key_of(base({}, Label::tau(), 0)) == Key{0});
  // Totalised on ill-formed pairs: the left key wins.
  ProofLabel odd = ProofLabel::sync({}, Branch{{}, Label::input(a), Key{1}}, Branch{{}, Label::input(m), Key{2}});
  CHECK(key_of(odd) == Key{1});
}

TEST_CASE("is_valid") {
  CHECK(is_valid(base({Decorator::ParL}, Label::input(m), 1)));
  CHECK(is_valid(ProofLabel::sync({}, Branch{{}, Label::input(a), Key{1}}, Branch{{}, Label::output(a), Key{1}})));
  CHECK_FALSE(is_valid(ProofLabel::sync({}, Branch{{}, Label::input(a), Key{1}}, Branch{{}, Label::input(Name{"b"}), Key{2}})));
  CHECK_FALSE(is_valid(ProofLabel::sync({}, Branch{{}, Label::input(a), Key{1}}, Branch{{}, Label::output(a), Key{2}})));
  CHECK_FALSE(is_valid(ProofLabel::sync({}, Branch{{}, Label::tau(), Key{1}}, Branch{{}, Label::tau(), Key{1}})));
}

TEST_CASE("decorator prepending preserves projections and validity") {
  testing::Gen gen(19);
  for (int i = 0; i < 5000; ++i) {
    ProofLabel t = gen.any_label(3);
    auto d = static_cast<Decorator>(gen.below(4));
    ProofLabel u = t.prepend(d);
    REQUIRE(label_of(u) == label_of(t));
    REQUIRE(key_of(u) == key_of(t));
    REQUIRE(is_valid(u) == is_valid(t));
    REQUIRE(u.head() == d);
    REQUIRE(u.tail() == t);
  }
}

TEST_CASE("text form round trips") {
  CHECK(to_string(base({Decorator::ParL}, Label::input(m), 1)) == "|L.m[1]");
  CHECK(parse_label("|L.m[1]") == base({Decorator::ParL}, Label::input(m), 1));
  CHECK(parse_label(" +R . |L . ~a [ 2 ] ") == base({Decorator::SumR, Decorator::ParL}, Label::output(a), 2));
  ProofLabel pair = parse_label("<|L a[1], |R ~a[1]>");
  CHECK(pair == ProofLabel::sync({}, Branch{{}, Label::input(a), Key{1}}, Branch{{}, Label::output(a), Key{1}}));
  CHECK(to_string(parse_label("|R.<|L +L.a[2], |R |R.~a[2]>")) == "|R.<|L +L.a[2], |R |R.~a[2]>");
  CHECK(parse_label("tau[0]") == base({}, Label::tau(), 0));
  CHECK_THROWS_AS(parse_label("a"), ParseError);
  CHECK_THROWS_AS(parse_label("|X.a[1]"), ParseError);
  CHECK_THROWS_AS(parse_label("<|R a[1], |L ~a[1]>"), ParseError);
  CHECK_THROWS_AS(parse_label("a[1] b"), ParseError);

  testing::Gen gen(23);
  for (int i = 0; i < 3000; ++i) {
    ProofLabel t = gen.any_label(3);
    REQUIRE(parse_label(to_string(t)) == t);
  }
}

TEST_CASE("enumerate_valid small cases") {
  std::vector<Name> names{a};
  std::vector<Key> keys{Key{1}};
  auto zero = enumerate_valid(names, keys, 0);
  REQUIRE(zero.size() == 5);
  std::set<ProofLabel> got(zero.begin(), zero.end());
  CHECK(got.count(base({}, Label::input(a), 1)));
  CHECK(got.count(base({}, Label::output(a), 1)));
  CHECK(got.count(base({}, Label::tau(), 1)));
  CHECK(got.count(ProofLabel::sync({}, Branch{{}, Label::input(a), Key{1}}, Branch{{}, Label::output(a), Key{1}})));
  CHECK(got.count(ProofLabel::sync({}, Branch{{}, Label::output(a), Key{1}}, Branch{{}, Label::input(a), Key{1}})));
  for (const auto& t : zero) CHECK(is_valid(t));

  std::size_t previous = 0;
  for (std::size_t d = 0; d <= 3; ++d) {
    auto all = enumerate_valid(names, keys, d);
    CHECK(all.size() >= previous);
    previous = all.size();
  }
}

TEST_CASE("enumerate_valid matches the closed-form count") {
  std::vector<Name> one{a};
  std::vector<Name> two{a, Name{"b"}};
  std::vector<Key> k2{Key{1}, Key{2}};
  for (std::size_t d = 0; d <= 3; ++d) {
    CHECK(enumerate_valid(one, k2, d).size() == expected_count(1, 2, d));
    CHECK(enumerate_valid(two, k2, d).size() == expected_count(2, 2, d));
  }
  CHECK(enumerate_valid(one, k2, 3).size() == 3506);
}

TEST_CASE("enumerate_valid equals brute force filtered by validity") {
  std::vector<Name> names{a};
  std::vector<Key> keys{Key{1}, Key{2}};
  std::vector<Label> actions{Label::input(a), Label::output(a), Label::tau()};
  for (std::size_t d = 0; d <= 2; ++d) {
    std::set<ProofLabel> expect;
    for (auto& t : brute_force(actions, keys, d)) {
      if (is_valid(t)) expect.insert(t);
    }
    auto got = enumerate_valid(names, keys, d);
    std::set<ProofLabel> got_set(got.begin(), got.end());
    CHECK(got_set.size() == got.size());  // no duplicates
    CHECK(got_set == expect);
    for (const auto& t : got) CHECK(t.decorator_count() <= d);
  }
  // Deterministic order.
  CHECK(enumerate_valid(names, keys, 2) == enumerate_valid(names, keys, 2));
}
