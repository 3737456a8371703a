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
#include "support.hpp"
#include "zsum/errors.hpp"
#include "zsum/zerosum.hpp"

using namespace zsum;
using testing_support::cyc;
using testing_support::ms;

TEST_CASE("zero-sum predicates") {
  CHECK(is_zero_sum(cyc(2, {1, 1})));
  CHECK_FALSE(is_zero_sum(cyc(2, {1})));
  CHECK(is_zero_sum(IndexedMultiset(FiniteAbelianGroup::cyclic(2))));

  CHECK(is_minimal_zero_sum(cyc(2, {1, 1})));
  CHECK(is_minimal_zero_sum(cyc(4, {1, 1, 2})));
  CHECK_FALSE(is_minimal_zero_sum(cyc(4, {2, 2, 1, 1, 1, 1})));
  CHECK_FALSE(is_minimal_zero_sum(IndexedMultiset(FiniteAbelianGroup::cyclic(2))));

  CHECK(is_zero_sum_free(cyc(4, {1, 2})));
  CHECK_FALSE(is_zero_sum_free(cyc(2, {1, 1})));
  CHECK(is_zero_sum_free(IndexedMultiset(FiniteAbelianGroup::cyclic(2))));
}

TEST_CASE("zero-sum subsets") {
  auto s = cyc(4, {1, 2, 3, 2});
  auto subsets = zero_sum_subsets(s);
  CHECK(subsets == std::vector<IndexSubset>{IndexSubset{}, IndexSubset{{0, 2}}, IndexSubset{{1, 3}},
                                            IndexSubset{{0, 1, 2, 3}}});
  CHECK(zero_sum_subsets(cyc(2, {1})) == std::vector<IndexSubset>{IndexSubset{}});
  CHECK(zero_sum_subsets(cyc(2, {1, 1, 1, 1})).size() == 8);

  ZeroSumOptions small;
  small.max_size = 3;
  CHECK_THROWS_AS(zero_sum_subsets(s, small), ResourceLimitError);
  small.max_size = 65;
  CHECK_THROWS_AS(zero_sum_subsets(s, small), InvalidArgument);
}

TEST_CASE("UFIM by intersection closure") {
  CHECK(is_ufim_by_intersection(ms("3,3", {{1, 1}, {2, 2}, {1, 2}, {2, 1}})));
  CHECK_FALSE(is_ufim_by_intersection(cyc(3, {1, 2, 1, 2})));
  CHECK(is_ufim_by_intersection(cyc(2, {1, 1})));
  CHECK_THROWS_AS(is_ufim_by_intersection(cyc(4, {1, 2})), PreconditionError);
  CHECK_THROWS_AS(is_ufim_by_intersection(cyc(4, {0, 1, 3})), PreconditionError);
}

TEST_CASE("factorization counts") {
  CHECK(count_factorizations(cyc(2, {1, 1}), 10) == 1);
  CHECK(count_factorizations(cyc(3, {1, 2, 1, 2}), 10) == 2);
  CHECK(count_factorizations(cyc(2, {1, 1, 1, 1}), 10) == 3);
  CHECK(count_factorizations(cyc(2, {1, 1, 1, 1}), 2) == 2);
  CHECK(count_factorizations(cyc(2, {1, 1, 1, 1, 1, 1}), 100) == 15);
}

TEST_CASE("unique factorization") {
  auto s = cyc(4, {1, 2, 3, 2});
  CHECK(is_ufim(s));
  auto f = unique_factorization(s);
  CHECK(f == Factorization::from_blocks({IndexSubset{{1, 3}}, IndexSubset{{0, 2}}}));

  auto v = ms("2,2", {{1, 1}, {1, 0}, {0, 1}});
  CHECK(is_ufim(v));
  CHECK(unique_factorization(v).size() == 1);

  auto bad = cyc(2, {1, 1, 1, 1});
  CHECK_FALSE(is_ufim(bad));
  try {
    unique_factorization(bad);
    FAIL("expected NotUniqueError");
  } catch (const NotUniqueError& e) {
    CHECK_FALSE(e.first == e.second);
    CHECK(e.first.size() == 2);
    CHECK(e.second.size() == 2);
  }

  // the empty multiset has the empty factorization
  IndexedMultiset empty(FiniteAbelianGroup::cyclic(3));
  CHECK(is_ufim(empty));
  CHECK(unique_factorization(empty).size() == 0);
  CHECK(find_factorizations(cyc(2, {1, 1, 1, 1}), 10).size() >= 2);
}

TEST_CASE("factorizations are partitions into atoms") {
  auto s = cyc(6, {1, 5, 2, 4, 3, 3});
  auto all = find_factorizations(s, 100);
  CHECK(all.size() >= 2);
  CHECK(all.size() <= count_factorizations(s, 100));
  for (const auto& f : all) {
    std::vector<Label> seen;
    for (const auto& b : f.blocks) {
      CHECK(is_minimal_zero_sum(s.sub(b)));
      seen.insert(seen.end(), b.labels.begin(), b.labels.end());
    }
    std::sort(seen.begin(), seen.end());
    CHECK(seen == s.labels());
  }
}

TEST_CASE("verify mode runs both algorithms") {
  ZeroSumOptions opt;
  opt.verify = true;
  CHECK(is_ufim(cyc(4, {1, 2, 3, 2}), opt));
  CHECK_FALSE(is_ufim(cyc(3, {1, 2, 1, 2}), opt));
}

// Both UFIM algorithms and the predicates against the brute-force oracle.
TEST_CASE("oracle agreement on small groups") {
  for (const auto& g : testing_support::groups_up_to(8)) {
    auto og = oracle::make(g);
    oracle::for_each_multiset(og, 6, [&](const std::vector<int>& idx) {
      auto s = testing_support::from_positions(g, og, idx);
      auto r = oracle::elems_of(og, idx);
      REQUIRE(is_zero_sum(s) == oracle::zero_sum(og, r));
      CHECK(is_zero_sum_free(s) == oracle::zero_sum_free(og, r));
      CHECK(is_minimal_zero_sum(s) == oracle::minimal_zero_sum(og, r));
      CHECK(zero_sum_masks(s) == oracle::zero_sum_masks(og, r));
      if (!oracle::zero_sum(og, r)) return;
      bool expect = oracle::ufim(og, r);
      CHECK(is_ufim_by_intersection(s) == expect);
      CHECK(count_factorizations(s, 1000) == oracle::count_factorizations(og, r, 1000));
    });
  }
}

TEST_CASE("oracle agreement on random multisets") {
  std::mt19937_64 rng(3);
  auto groups = testing_support::groups_up_to(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& g = groups[rng() % groups.size()];
    auto og = oracle::make(g);
    auto r = testing_support::random_zero_sum(og, 10, rng);
    auto s = IndexedMultiset::from_residues(g, r);
    bool expect = oracle::ufim(og, r);
    CHECK(is_ufim_by_intersection(s) == expect);
    CHECK((count_factorizations(s, 2) == 1) == expect);
  }
}
