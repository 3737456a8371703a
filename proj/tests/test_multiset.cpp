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
#include "zsum/homomorphism.hpp"
#include "zsum/multiset.hpp"

using namespace zsum;
using testing_support::cyc;
using testing_support::ms;

TEST_CASE("sigma") {
  IndexedMultiset empty(FiniteAbelianGroup::cyclic(4));
  CHECK(sigma(empty) == FiniteAbelianGroup::cyclic(4).zero());
  CHECK(sigma(cyc(4, {1, 3})) == FiniteAbelianGroup::cyclic(4).zero());
  auto v = ms("2,2", {{1, 0}, {0, 1}});
  CHECK(sigma(v).residues == std::vector<std::int64_t>{1, 1});
  auto s = cyc(4, {1, 2, 3, 2});
  CHECK(sigma(s, IndexSubset{{1, 3}}).residues == std::vector<std::int64_t>{0});
}

TEST_CASE("cross number") {
  CHECK(cross_number(IndexedMultiset(FiniteAbelianGroup::cyclic(4))) == Rational(0));
  CHECK(cross_number(cyc(4, {1, 1, 2})) == Rational(1));
  CHECK(cross_number(cyc(4, {1, 2, 3, 2})) == Rational(3, 2));
  CHECK(cross_number(cyc(4, {1, 2, 3, 2}), IndexSubset{{0, 2}}) == Rational(1, 2));
}

TEST_CASE("labels and submultisets") {
  auto s = cyc(4, {1, 2, 3, 2});
  CHECK(s.labels() == std::vector<Label>{0, 1, 2, 3});
  auto t = s.sub(IndexSubset{{1, 3}});
  CHECK(t.labels() == std::vector<Label>{1, 3});
  CHECK(t.at(3).residues == std::vector<std::int64_t>{2});
  CHECK(s.without(IndexSubset{{1, 3}}).labels() == std::vector<Label>{0, 2});
  CHECK(s.complement(IndexSubset{{0}}) == IndexSubset{{1, 2, 3}});
  CHECK(s.mask_of(IndexSubset{{0, 3}}) == 9U);
  CHECK(s.subset_of(6U) == IndexSubset{{1, 2}});
  CHECK_THROWS_AS(s.at(9), InvalidArgument);
  CHECK_THROWS_AS(ms("4", {{1, 1}}), InvalidArgument);
}

TEST_CASE("disjoint union") {
  auto one = cyc(2, {1});
  auto u = disjoint_union(one, one);
  CHECK(u.size() == 2);
  CHECK(u.labels() == std::vector<Label>{0, 1});

  auto s = cyc(4, {1, 2, 3});
  auto e = disjoint_union(s, IndexedMultiset(FiniteAbelianGroup::cyclic(4)));
  CHECK(e.same_multiset(s));

  CHECK(cross_number(disjoint_union(cyc(4, {1, 2}), cyc(4, {3}))) == Rational(1));
  CHECK_THROWS_AS(disjoint_union(cyc(4, {1}), cyc(2, {1})), InvalidArgument);
}

TEST_CASE("cross number is additive under union") {
  std::mt19937_64 rng(11);
  auto groups = testing_support::groups_up_to(24);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& g = groups[rng() % groups.size()];
    auto elems = g.elements();
    auto draw = [&] {
      IndexedMultiset s(g);
      auto n = rng() % 6;
      for (std::size_t i = 0; i < n; ++i) s.push_back(elems[rng() % elems.size()]);
      return s;
    };
    auto a = draw();
    auto b = draw();
    auto u = disjoint_union(a, b);
    CHECK(u.size() == a.size() + b.size());
    CHECK(cross_number(u) == cross_number(a) + cross_number(b));
    CHECK(sigma(u) == g.add(sigma(a), sigma(b)));
  }
}

// k(S) <= k(phi(S)) whenever phi(S) avoids the identity: exhaustive over
// short multisets and the standard maps.
TEST_CASE("cross number grows under homomorphisms avoiding the identity") {
  std::size_t checked = 0;
  for (const auto& g : testing_support::groups_up_to(12)) {
    std::vector<Homomorphism> maps{Homomorphism::multiplication(g, 2), Homomorphism::multiplication(g, 3),
                                   Homomorphism::projection(g, g.rank() - 1)};
    for (const auto& pf : factorize(g.order())) maps.push_back(Homomorphism::drop_primes(g, {pf.prime}));
    auto og = oracle::make(g);
    oracle::for_each_multiset(og, 3, [&](const std::vector<int>& idx) {
      auto s = testing_support::from_positions(g, og, idx);
      for (const auto& phi : maps) {
        auto image = apply(phi, s);
        if (image.contains_identity()) continue;
        CHECK(cross_number(s) <= cross_number(image));
        ++checked;
      }
    });
  }
  CHECK(checked > 500);
}
