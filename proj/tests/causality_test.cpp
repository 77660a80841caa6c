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
#include "doctest.h"
#include "generators.hpp"

using namespace ccskp;

namespace {

ProofLabel L(const char* text) { return parse_label(text); }

bool bare_base(const ProofLabel& t) { return t.is_bare() && !t.is_sync(); }
bool bare_pair(const ProofLabel& t) { return t.is_bare() && t.is_sync(); }

// The rule table read literally: a judgement holds if some rule's
// conclusion matches and its premises hold. No trial order, no views.
bool oracle(Relation r, const ProofLabel& x, const ProofLabel& y) {
  bool any = false;
  if (r != Relation::Indep && (bare_base(x) || bare_base(y))) any = true;
  auto hx = x.head(), hy = y.head();
  if (hx && hy) {
    for (Decorator d : {Decorator::SumL, Decorator::SumR, Decorator::ParL, Decorator::ParR}) {
      if (*hx == d && *hy == d && oracle(r, x.tail(), y.tail())) any = true;  // C1, P1
      if (*hx == d && *hy == opposite(d)) {
        if (!is_par(d) && r != Relation::Indep) any = true;  // C2
        if (is_par(d)) {
          if (r == Relation::Conn) any = true;
          if (r == Relation::Dep && key_of(x) == key_of(y)) any = true;
          if (r == Relation::Indep && key_of(x) != key_of(y)) any = true;
        }
      }
    }
  }
  if (hx && bare_pair(y)) {
    if (*hx == Decorator::ParL && oracle(r, x.tail(), ProofLabel::of_branch(y.pair().left))) any = true;
    if (*hx == Decorator::ParR && oracle(r, x.tail(), ProofLabel::of_branch(y.pair().right))) any = true;
  }
  if (hy && bare_pair(x)) {
    if (*hy == Decorator::ParL && oracle(r, ProofLabel::of_branch(x.pair().left), y.tail())) any = true;
    if (*hy == Decorator::ParR && oracle(r, ProofLabel::of_branch(x.pair().right), y.tail())) any = true;
  }
  if (bare_pair(x) && bare_pair(y)) {
    auto xl = ProofLabel::of_branch(x.pair().left), xr = ProofLabel::of_branch(x.pair().right);
    auto yl = ProofLabel::of_branch(y.pair().left), yr = ProofLabel::of_branch(y.pair().right);
    if (r == Relation::Dep) {
      if (oracle(Relation::Dep, xl, yl) && oracle(Relation::Conn, xr, yr)) any = true;
      if (oracle(Relation::Dep, xr, yr) && oracle(Relation::Conn, xl, yl)) any = true;
    } else if (oracle(r, xl, yl) && oracle(r, xr, yr)) {
      any = true;
    }
  }
  return any;
}

std::vector<ProofLabel> corpus() {
  std::vector<Name> names{Name{"a"}};
  std::vector<Key> keys{Key{1}, Key{2}};
  return enumerate_valid(names, keys, 2);
}

}  // namespace

TEST_CASE("connectivity examples") {
  auto a1 = check_conn(L("a[5]"), L("|L.+R.b[1]"));
  REQUIRE(a1);
  CHECK(rule_name(*a1) == "A1");
  auto a2 = check_conn(L("|L.+R.b[1]"), L("a[5]"));
  REQUIRE(a2);
  CHECK(rule_name(*a2) == "A2");
  auto p2 = check_conn(L("|L.a[1]"), L("|R.b[1]"));
  REQUIRE(p2);
  CHECK(rule_name(*p2) == "P2_L");
  CHECK_FALSE(p2->keys);
  auto c2 = check_conn(L("+L.a[1]"), L("+R.b[2]"));
  REQUIRE(c2);
  CHECK(rule_name(*c2) == "C2_L");
  CHECK_FALSE(check_conn(L("+L.a[1]"), L("|R.b[2]")));
  CHECK_FALSE(check_conn(L("+L.a[1]"), L("<|L a[1], |R ~a[1]>")));
}

TEST_CASE("dependence examples") {
  auto d = check_dep(L("|L.a[1]"), L("|L.b[2]"));
  REQUIRE(d);
  CHECK(rule_name(*d) == "P1_L");
  REQUIRE(d->premises.size() == 1);
  CHECK(rule_name(d->premises[0]) == "A1");
  CHECK_FALSE(check_dep(L("|L.a[1]"), L("|R.b[2]")));
  auto p2 = check_dep(L("|L.a[1]"), L("|R.b[1]"));
  REQUIRE(p2);
  CHECK(rule_name(*p2) == "P2_L");
  CHECK(p2->keys == std::make_pair(Key{1}, Key{1}));
}

TEST_CASE("independence examples") {
  auto i = check_indep(L("|L.m[1]"), L("|R.l[2]"));
  REQUIRE(i);
  CHECK(rule_name(*i) == "P2_L");
  CHECK_FALSE(check_indep(L("a[1]"), L("|L.b[2]")));
  CHECK_FALSE(check_indep(L("a[1]"), L("a[1]")));
  CHECK_FALSE(check_indep(L("|L.a[1]"), L("|R.b[1]")));
  CHECK_FALSE(check_indep(L("+L.a[1]"), L("+R.a[2]")));
}

TEST_CASE("synchronisation rules") {
  // |L a[3] against the left branch a[1]: dependent through S1_L over A1.
  auto s1 = check_dep(L("|L.a[3]"), L("<|L a[1], |R ~a[1]>"));
  REQUIRE(s1);
  CHECK(rule_name(*s1) == "S1_L");
  auto s2 = check_indep(L("<|L +L.a[1], |R ~a[1]>"), L("|L.+L.b[2]"));
  CHECK_FALSE(s2);
  auto s3 = check_indep(L("<|L |L.a[1], |R |R.~a[1]>"), L("<|L |R.a[2], |R |L.~a[2]>"));
  REQUIRE(s3);
  CHECK(rule_name(*s3) == "S3");
  auto dep3 = check_dep(L("<|L |L.a[1], |R |R.~a[1]>"), L("<|L |R.a[2], |R |R.~a[2]>"));
  REQUIRE(dep3);
  CHECK(rule_name(*dep3) == "S3");
  CHECK(dep3->premises[0].relation == Relation::Conn);
  CHECK(dep3->premises[1].relation == Relation::Dep);
  CHECK(dep3->side == Side::R);
  CHECK(check_derivation(*dep3, L("<|L |L.a[1], |R |R.~a[1]>"), L("<|L |R.a[2], |R |R.~a[2]>")));
}

TEST_CASE("check_derivation rejects malformed derivations") {
  auto d = check_dep(L("|L.a[1]"), L("|L.b[2]"));
  REQUIRE(d);
  CHECK(check_derivation(*d, L("|L.a[1]"), L("|L.b[2]")));
  CHECK_FALSE(check_derivation(*d, L("|R.a[1]"), L("|L.b[2]")));

  auto indep = check_indep(L("|L.m[1]"), L("|R.l[2]"));
  REQUIRE(indep);
  CausalDerivation bad = *indep;
  bad.keys = std::make_pair(Key{1}, Key{1});
  CHECK_FALSE(check_derivation(bad, L("|L.m[1]"), L("|R.l[1]")));
  CHECK_FALSE(check_derivation(*indep, L("|L.m[1]"), L("|R.l[1]")));

  ProofLabel x = L("<|L |L.a[1], |R |R.~a[1]>");
  ProofLabel y = L("<|L |L.a[2], |R |R.~a[2]>");
  auto dep3 = check_dep(x, y);
  REQUIRE(dep3);
  CHECK(dep3->side == Side::L);
  CausalDerivation both_dep = *dep3;
  auto dr = check_dep(ProofLabel::of_branch(x.pair().right), ProofLabel::of_branch(y.pair().right));
  REQUIRE(dr);
  both_dep.premises[1] = *dr;
  CHECK_FALSE(check_derivation(both_dep, x, y));

  CausalDerivation wrong_rel = *d;
  wrong_rel.relation = Relation::Indep;
  CHECK_FALSE(check_derivation(wrong_rel, L("|L.a[1]"), L("|L.b[2]")));
}

TEST_CASE("render lists one rule per line") {
  auto d = check_dep(L("|L.a[1]"), L("|L.b[2]"));
  REQUIRE(d);
  CHECK(render(*d, L("|L.a[1]"), L("|L.b[2]")) == "P1_L: |L.a[1] dep |L.b[2]\n  A1: a[1] dep b[2]\n");
  auto p2 = check_indep(L("|L.m[1]"), L("|R.l[2]"));
  CHECK(render(*p2, L("|L.m[1]"), L("|R.l[2]")) == "P2_L: |L.m[1] indep |R.l[2]  [key 1 != 2]\n");
}

TEST_CASE("deciders agree with the literal rule table") {
  auto labels = corpus();
  REQUIRE(labels.size() == 562);
  for (const auto& x : labels) {
    for (const auto& y : labels) {
      for (Relation r : {Relation::Conn, Relation::Dep, Relation::Indep}) {
        bool expect = oracle(r, x, y);
        auto d = check(r, x, y);
        REQUIRE(d.has_value() == expect);
        REQUIRE(holds(r, x, y) == expect);
        if (d) REQUIRE(check_derivation(*d, x, y));
      }
    }
  }
}

TEST_CASE("deciders are total on arbitrary labels") {
  testing::Gen gen(67);
  for (int i = 0; i < 20000; ++i) {
    ProofLabel x = gen.any_label(3), y = gen.any_label(3);
    for (Relation r : {Relation::Conn, Relation::Dep, Relation::Indep}) {
      auto d = check(r, x, y);
      REQUIRE(d.has_value() == oracle(r, x, y));
      if (d) REQUIRE(check_derivation(*d, x, y));
    }
  }
}

TEST_CASE("symmetry, irreflexivity and reflexivity") {
  auto labels = corpus();
  for (const auto& x : labels) {
    CHECK_FALSE(holds(Relation::Indep, x, x));
    CHECK(holds(Relation::Dep, x, x));
    CHECK(holds(Relation::Conn, x, x));
    for (const auto& y : labels) {
      for (Relation r : {Relation::Conn, Relation::Dep, Relation::Indep}) {
        REQUIRE(holds(r, x, y) == holds(r, y, x));
      }
    }
  }
}

TEST_CASE("complementarity") {
  auto labels = corpus();
  for (const auto& x : labels) {
    for (const auto& y : labels) {
      bool c = holds(Relation::Conn, x, y);
      bool d = holds(Relation::Dep, x, y);
      bool i = holds(Relation::Indep, x, y);
      REQUIRE((!i || c));
      REQUIRE((!d || c));
      REQUIRE(c == (d != i));
    }
  }
}
