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

#include "ccskp/theorems.hpp"

#include <set>

#include "doctest.h"
#include "generators.hpp"

using namespace ccskp;

namespace {

ProofLabel L(const char* text) { return parse_label(text); }
Process P(const char* text) { return parse(text); }

ConnWitness conn(const char* a, const char* b) {
  auto d = check_conn(L(a), L(b));
  REQUIRE(d);
  return realize_connected(*d, L(a), L(b));
}

// Independent count of terms with exactly n operators over `m` actions and
// `r` restrictable names, before alpha-identification.
std::uint64_t raw_count(std::size_t n, std::uint64_t m, std::uint64_t r) {
  std::vector<std::uint64_t> t(n + 1, 0);
  t[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    t[k] = (m + r) * t[k - 1];
    for (std::size_t i = 0; i < k; ++i) t[k] += 2 * t[i] * t[k - 1 - i];
  }
  return t[n];
}

}  // namespace

TEST_CASE("realise") {
  auto w = realise(L("m[4]"));
  CHECK(pretty_print(w.realiser) == "m");
  CHECK(pretty_print(w.step.target) == "m[4]");

  w = realise(L("|L.m[3]"));
  CHECK(w.realiser == P("m | 0"));
  CHECK(w.step.label == L("|L.m[3]"));
  CHECK_FALSE(realisation_problem(w, L("|L.m[3]")));

  w = realise(L("<|L a[2], |R ~a[2]>"));
  CHECK(w.realiser == P("a | ~a"));
  CHECK(w.step.target == P("a[2] | ~a[2]"));

  w = realise(L("+R.|L.<|L +L.a[1], |R ~a[1]>"));
  CHECK(w.realiser == P("0 + (((a + 0) | ~a) | 0)"));
  CHECK_FALSE(realisation_problem(w, L("+R.|L.<|L +L.a[1], |R ~a[1]>")));

  CHECK_THROWS_AS(realise(L("<|L a[1], |R a[1]>")), InvalidLabel);
  CHECK_THROWS_AS(realise(L("<|L a[1], |R ~a[2]>")), InvalidLabel);
}

TEST_CASE("realisation_problem rejects doctored witnesses") {
  auto w = realise(L("|L.m[3]"));
  CHECK(realisation_problem(w, L("|L.m[4]")));
  auto keyed = w;
  keyed.realiser = P("m[1] | 0");
  CHECK(realisation_problem(keyed, L("|L.m[3]")));
  auto back = w;
  back.step = reverse(w.step);
  CHECK(realisation_problem(back, L("|L.m[3]")));
}

TEST_CASE("base-case witnesses") {
  SUBCASE("independent steps on either side") {
    auto w = conn("|L.m[1]", "|R.l[2]");
    CHECK(w.t1.source == P("m | l"));
    CHECK(w.t1.target == P("m[1] | l"));
    REQUIRE(w.link.length() == 1);
    CHECK(w.link.steps[0] == w.t1);
    CHECK(w.t2.source == P("m[1] | l"));
    CHECK(w.t2.target == P("m[1] | l[2]"));
  }
  SUBCASE("the same label twice") {
    auto w = conn("a[3]", "a[3]");
    CHECK(w.t1 == w.t2);
    CHECK(w.t1.source == P("a"));
    CHECK(w.link.length() == 0);
  }
  SUBCASE("dependent steps on one side") {
    auto w = conn("|L.a[1]", "|L.b[2]");
    CHECK(w.t1.source == P("a.b | 0"));
    CHECK(w.t1.target == P("a[1].b | 0"));
    CHECK(w.link.length() == 1);
    CHECK(w.t2.target == P("a[1].b[2] | 0"));
  }
  SUBCASE("same key forces a fresh one") {
    auto w = conn("a[1]", "b[1]");
    CHECK(w.t1.source == P("a.b"));
    REQUIRE(w.link.length() == 1);
    CHECK(w.link.target == P("a[0].b"));
    CHECK(w.t2.target == P("a[0].b[1]"));
  }
  SUBCASE("same key on both sides of a parallel") {
    auto w = conn("|L.a[1]", "|R.b[1]");
    CHECK(w.link.length() == 0);
    CHECK(w.t1.source == P("a | b"));
  }
  SUBCASE("choice") {
    auto w = conn("+L.a[1]", "+R.b[1]");
    CHECK(w.t1.source == P("a + b"));
    CHECK(w.link.length() == 0);
  }
  SUBCASE("second label bare") {
    auto w = conn("|L.b[2]", "a[1]");
    CHECK(w.t2.source == P("a.(b | 0)"));
    CHECK(w.t1.source == P("a[1].(b | 0)"));
    CHECK(w.link.length() == 1);
    CHECK(w.link.steps[0].direction == Direction::Backward);
  }
}

TEST_CASE("synchronisation witnesses") {
  auto w = conn("<|L a[1], |R ~a[1]>", "<|L a[2], |R ~a[2]>");
  CHECK(w.t1.source == P("a.a | ~a.~a"));
  // Both component links fire under key 1, so they merge into one sync.
  REQUIRE(w.link.length() == 1);
  CHECK(w.link.steps[0].label == L("<|L a[1], |R ~a[1]>"));
  CHECK(w.t2.target == P("a[1].a[2] | ~a[1].~a[2]"));
  REQUIRE(connected(w.t1, w.t2));

  // Reused keys on both sides: each component moves under its own fresh key.
  auto two = conn("<|L a[1], |R ~a[1]>", "<|L ~a[1], |R a[1]>");
  CHECK(two.t1.source == P("a.~a | ~a.a"));
  REQUIRE(two.link.length() == 2);
  CHECK(two.link.steps[0].label == L("|L.a[0]"));
  CHECK(two.link.steps[1].label == L("|R.~a[2]"));
  CHECK(two.t2.source == P("a[0].~a | ~a[2].a"));
  REQUIRE(connected(two.t1, two.t2));

  auto s1 = conn("|L.a[3]", "<|L a[1], |R ~a[1]>");
  CHECK_FALSE(witness_problem(s1, L("|L.a[3]"), L("<|L a[1], |R ~a[1]>"), false));
  CHECK(s1.link.length() <= 2);
}

TEST_CASE("preconditions") {
  auto dep = check_dep(L("|L.a[1]"), L("|L.b[2]"));
  REQUIRE(dep);
  CHECK_THROWS_AS(realize_connected(*dep, L("|L.a[1]"), L("|L.b[2]")), PreconditionViolation);
  auto c = check_conn(L("|L.a[1]"), L("|L.b[2]"));
  REQUIRE(c);
  CHECK_THROWS_AS(realize_connected(*c, L("|R.a[1]"), L("|L.b[2]")), PreconditionViolation);
  auto sync = check_conn(L("<|L a[1], |R ~a[1]>"), L("|L.b[2]"));
  REQUIRE(sync);
  CHECK_THROWS_AS(realize_connected_base(*sync, L("<|L a[1], |R ~a[1]>"), L("|L.b[2]")), PreconditionViolation);
  CHECK_NOTHROW(realize_connected(*sync, L("<|L a[1], |R ~a[1]>"), L("|L.b[2]")));
}

TEST_CASE("witness_problem rejects doctored witnesses") {
  auto w = conn("|L.m[1]", "|R.l[2]");
  CHECK_FALSE(witness_problem(w, L("|L.m[1]"), L("|R.l[2]"), true));
  CHECK(witness_problem(w, L("|L.m[2]"), L("|R.l[2]"), true));
  auto no_link = w;
  no_link.link = Path{w.t1.source, w.t1.source, {}};
  CHECK(witness_problem(no_link, L("|L.m[1]"), L("|R.l[2]"), true));
  auto back = w;
  back.t2 = reverse(w.t2);
  CHECK(witness_problem(back, L("|L.m[1]"), L("|R.l[2]"), true));

  auto two = conn("<|L a[1], |R ~a[1]>", "<|L ~a[1], |R a[1]>");
  CHECK_FALSE(witness_problem(two, L("<|L a[1], |R ~a[1]>"), L("<|L ~a[1], |R a[1]>"), false));
  CHECK(witness_problem(two, L("<|L a[1], |R ~a[1]>"), L("<|L ~a[1], |R a[1]>"), true));
}

TEST_CASE("witnesses agree with graph connectivity on a sample") {
  std::vector<Name> names{Name{"a"}, Name{"b"}};
  std::vector<Key> keys{Key{1}, Key{2}};
  auto labels = enumerate_valid(names, keys, 1);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < labels.size(); i += 7) {
    for (std::size_t j = 0; j < labels.size(); j += 5) {
      auto d = check_conn(labels[i], labels[j]);
      if (!d) continue;
      auto w = realize_connected(*d, labels[i], labels[j]);
      auto path = connected(w.t1, w.t2);
      REQUIRE(path);
      CHECK(is_valid_path(*path));
      // Reversing t2 gives a forward/backward pair with the same endpoints.
      CHECK(reverse(w.t2).source == w.t2.target);
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("verify_theorem1_forward") {
  auto r = verify_theorem1_forward(build_graph(P("m | l")));
  CHECK(r.ok());
  CHECK(r.get("transition pairs") == 16 * 16);
  CHECK(r.get("label pairs") == 16);

  auto nil = verify_theorem1_forward(build_graph(P("0")));
  CHECK(nil.ok());
  CHECK(nil.get("transition pairs") == 0);

  auto sync = verify_theorem1_forward(build_graph(P("a.b | ~b")));
  CHECK(sync.ok());
  CHECK(sync.get("label pairs") > 0);

  auto stuck = verify_theorem1_forward(build_graph(P("a[1].b[2] | ~b[2].~a[1]")));
  CHECK(stuck.get("components") == 0);
}

TEST_CASE("verify_complementarity") {
  std::vector<Name> names{Name{"a"}};
  std::vector<Key> keys{Key{1}, Key{2}};
  auto r = verify_complementarity(enumerate_valid(names, keys, 2));
  CHECK(r.ok());
  CHECK(r.get("pairs") == 562 * 562);
  CHECK(r.get("connected") == r.get("dependent") + r.get("independent"));

  auto one = verify_complementarity({L("a[1]")});
  CHECK(one.ok());
  CHECK(one.get("connected") == 1);
  CHECK(one.get("dependent") == 1);
  CHECK(one.get("independent") == 0);

  auto none = verify_complementarity({});
  CHECK(none.ok());
  CHECK(none.get("pairs") == 0);
}

TEST_CASE("relation algebra and realisation at small scale") {
  std::vector<Name> names{Name{"a"}, Name{"b"}};
  std::vector<Key> keys{Key{1}, Key{2}};
  auto labels = enumerate_valid(names, keys, 1);
  CHECK(verify_relation_algebra(labels).ok());
  CHECK(verify_realisation(labels).ok());
  auto r = verify_theorem1_constructive(labels);
  CHECK(r.ok());
  CHECK(r.get("link length 3") == 0);
}

TEST_CASE("process enumeration") {
  std::vector<Name> names{Name{"a"}};
  for (std::size_t n = 0; n <= 3; ++n) {
    auto all = enumerate_processes(names, n);
    std::set<std::string> printed;
    std::uint64_t raw = 0;
    for (std::size_t k = 0; k <= n; ++k) raw += raw_count(k, 3, 1);
    for (const auto& p : all) {
      CHECK(p.size() <= n);
      CHECK(is_std(p));
      CHECK(canonicalize(p) == p);
      printed.insert(pretty_print(p));
    }
    CHECK(printed.size() == all.size());
    CHECK(all.size() <= raw);
  }
  // Without restriction no two raw terms are alpha-equivalent.
  CHECK(enumerate_processes({}, 3).size() == raw_count(0, 1, 0) + raw_count(1, 1, 0) + raw_count(2, 1, 0) + raw_count(3, 1, 0));
  CHECK(enumerate_processes(names, 4) == enumerate_processes(names, 4));
}

TEST_CASE("reports") {
  Report r{"x", "y", {}, 0, {}};
  r.add("a");
  r.add("a", 2);
  r.add("b");
  CHECK(r.get("a") == 3);
  CHECK(r.ok());
  for (int i = 0; i < 20; ++i) r.fail("bad");
  CHECK(r.failures == 20);
  CHECK(r.counterexamples.size() == 10);
  CHECK(to_json({r}).find("\"failures\": 20") != std::string::npos);
  CHECK(summary_table({r}).rfind("FAIL x", 0) == 0);
  CHECK(is_suite("all"));
  CHECK_FALSE(is_suite("everything"));
}

TEST_CASE("suites pass at reduced scale") {
  Scale s;
  s.max_ops = 2;
  s.depth = 1;
  for (const auto& r : run_suite("all", s)) {
    INFO(summary_table({r}));
    CHECK(r.ok());
  }
}
