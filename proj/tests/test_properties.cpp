// Copyright 2026 The zsum Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "doctest.h"
#include "property_suites.hpp"
#include "support.hpp"
#include "zsum/bounds.hpp"
#include "zsum/constructions.hpp"
#include "zsum/families.hpp"
#include "zsum/formulas.hpp"
#include "zsum/zerosum.hpp"

using namespace zsum;

namespace {

struct Corpus {
  InvariantEngine engine;
  std::vector<IndexedMultiset> all;
  Corpus() : all(properties::corpus(engine)) {}
};

Corpus& corpus() {
  static Corpus c;
  return c;
}

void require_clean(const properties::Outcome& o, std::size_t min_cases) {
  CHECK_MESSAGE(o.failures == 0, o.first_failure);
  CHECK(o.cases >= min_cases);
}

}  // namespace

TEST_CASE("corpus size") { CHECK(corpus().all.size() >= 500); }

TEST_CASE("lifting a subset to its sum") { require_clean(properties::lift(corpus().all, 2000, 5), 500); }

TEST_CASE("zero-sum subsets are unions of blocks") {
  require_clean(properties::zero_sum_subsets_are_unions(corpus().all), 500);
}

TEST_CASE("block length product") {
  InvariantEngine engine;
  require_clean(properties::block_product(engine), 500);
}

TEST_CASE("cross number grows under the standard maps") { require_clean(properties::cross_under_maps(), 500); }

TEST_CASE("kernel and quotient consequences") {
  require_clean(properties::decomposition_consequences(corpus().engine, corpus().all), 500);
}

TEST_CASE("sandwich chain") { require_clean(properties::sandwich(corpus().engine, 16), 100); }

TEST_CASE("size-limit implication on UFIMs") {
  auto& c = corpus();
  for (const auto& s : c.all) {
    const auto& g = s.group();
    if (c.engine.value(g, Invariant::kLittleK) != little_k_star(g)) continue;
    CHECK(check_size_limit(c.engine, s).holds);
  }
}

// Conditional p1-bound: runs only where the hypothesis holds.
TEST_CASE("p1-bound on groups meeting its hypothesis") {
  auto& c = corpus();
  std::size_t active = 0;
  for (const auto& s : c.all) {
    const auto& g = s.group();
    if (!pbound_hypothesis(c.engine, g, Rational(1), 2)) continue;
    CHECK(cross_number(s) <= pbound_value(g, m_p1_of(s)));
    ++active;
  }
  CHECK(active > 0);
}

TEST_CASE("lowest-order bound on UFIMs") {
  auto& c = corpus();
  for (const auto& s : c.all) {
    try {
      auto bound = lowest_order_bound(c.engine, s.group(), m_p1_of(s));
      CHECK(certified_le(cross_number(s), bound));
    } catch (const NotApplicableError&) {
    }
  }
}

TEST_CASE("family verifications") {
  InvariantEngine engine;
  for (const auto& id : family_theorems()) {
    FamilyGrid grid;
    grid.max_order = 16;
    auto report = verify_family(engine, id, grid);
    CHECK_MESSAGE(report.ok(), family_report_json(report));
    CHECK(report.count(InstanceStatus::kPass) > 0);
  }
  CHECK_THROWS_AS(verify_family(engine, "nope", FamilyGrid{}), InvalidArgument);
}

TEST_CASE("family report examples") {
  InvariantEngine engine;
  FamilyGrid grid;
  grid.p = {2};
  grid.m = {2};
  grid.n = {1};
  auto r = verify_family(engine, "mainthm1", grid);
  REQUIRE(r.instances.size() == 1);
  CHECK(r.instances[0].status == InstanceStatus::kPass);
  CHECK(r.instances[0].lhs == "5/2");
  CHECK(r.instances[0].rhs == "5/2");

  FamilyGrid n1k1;
  n1k1.p = {2};
  n1k1.n = {2};
  auto e = verify_family(engine, "n1k1", n1k1);
  REQUIRE(e.instances.size() == 1);
  CHECK(e.instances[0].status == InstanceStatus::kPass);
  CHECK(e.instances[0].lhs == "4");

  FamilyGrid pq;
  pq.pq = {{2, 3}};
  CHECK(verify_family(engine, "maximal-split-pq", pq).ok());

  auto json = family_report_json(r);
  CHECK(json.find("\"summary\"") != std::string::npos);
  CHECK(json.find('\n') == std::string::npos);
}
