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

#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "zsum/errors.hpp"
#include "zsum/group.hpp"
#include "zsum/homomorphism.hpp"

using namespace zsum;
using testing_support::grp;

namespace {

std::vector<std::pair<std::int64_t, int>> primary_of(const FiniteAbelianGroup& g) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (const auto& c : g.primary_components()) out.emplace_back(c.prime, c.exponent);
  return out;
}

}  // namespace

TEST_CASE("normalize moduli") {
  auto a = FiniteAbelianGroup::from_moduli({2, 3});
  CHECK(a.invariant_factors() == std::vector<std::int64_t>{6});
  CHECK(primary_of(a) == std::vector<std::pair<std::int64_t, int>>{{2, 1}, {3, 1}});

  auto b = FiniteAbelianGroup::from_moduli({6});
  CHECK(b == a);
  CHECK(primary_of(b) == primary_of(a));

  auto c = FiniteAbelianGroup::from_moduli({4, 2});
  CHECK(c.invariant_factors() == std::vector<std::int64_t>{2, 4});
  CHECK(primary_of(c) == std::vector<std::pair<std::int64_t, int>>{{2, 1}, {2, 2}});
  CHECK(c.key() == "2x4");

  CHECK(FiniteAbelianGroup::trivial().key() == "1");
  CHECK(FiniteAbelianGroup::trivial().order() == 1);
  CHECK_THROWS_AS(FiniteAbelianGroup::from_moduli({2, 1}), InvalidArgument);
  CHECK_THROWS_AS(FiniteAbelianGroup::from_moduli({0}), InvalidArgument);
}

TEST_CASE("group spec parsing") {
  CHECK(grp("2^2,3").invariant_factors() == std::vector<std::int64_t>{12});
  CHECK(grp("2,2").key() == "2x2");
  CHECK(grp("trivial").is_trivial());
  CHECK_THROWS_AS(grp("x"), InvalidArgument);
  CHECK_THROWS_AS(grp(""), InvalidArgument);
  CHECK_THROWS_AS(grp("4^0"), InvalidArgument);
}

TEST_CASE("normal form structure") {
  for (std::int64_t n = 2; n <= 64; ++n) {
    for (const auto& g : all_groups_of_order(n)) {
      const auto& f = g.invariant_factors();
      for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
      std::int64_t prod = 1;
      for (const auto& c : g.primary_components()) prod *= c.modulus();
      CHECK(prod == g.order());
      std::int64_t lcm = 1;
      for (auto x : f) lcm = std::lcm(lcm, x);
      CHECK(lcm == g.exponent());
      // recombining the primary parts gives back the same group
      std::vector<std::int64_t> moduli;
      for (const auto& c : g.primary_components()) moduli.push_back(c.modulus());
      CHECK(FiniteAbelianGroup::from_moduli(moduli) == g);
    }
  }
  CHECK(all_groups_of_order(16).size() == 5);
  CHECK(all_groups_of_order(12).size() == 2);
}

TEST_CASE("element orders") {
  auto c4 = FiniteAbelianGroup::cyclic(4);
  CHECK(element_order(c4, c4.element({2})) == 2);
  auto c6 = FiniteAbelianGroup::cyclic(6);
  CHECK(element_order(c6, c6.zero()) == 1);
  auto g = grp("4,2");
  // residues follow the invariant factors (2, 4)
  CHECK(element_order(g, g.element({1, 1})) == 4);

  for (const auto& h : testing_support::groups_up_to(24)) {
    auto og = oracle::make(h);
    auto elems = h.elements();
    REQUIRE(elems.size() == og.elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      CHECK(elems[i].residues == og.elems[i]);
      CHECK(h.element_order(elems[i]) == oracle::order(og, og.elems[i]));
    }
  }
}

TEST_CASE("prime stats") {
  CHECK(prime_stats(12) == PrimeStats{2, 3, 2});
  CHECK(prime_stats(7) == PrimeStats{7, 7, 1});
  CHECK(prime_stats(30) == PrimeStats{2, 5, 3});
  CHECK_THROWS_AS(prime_stats(1), InvalidArgument);
}

TEST_CASE("primary coordinates round-trip") {
  for (const auto& g : testing_support::groups_up_to(36)) {
    for (const auto& x : g.elements()) CHECK(g.from_primary(g.to_primary(x)) == x);
  }
}

TEST_CASE("presentation of raw moduli") {
  GroupPresentation p({3, 2, 4});
  CHECK(p.group().key() == "2x12");
  std::set<GroupElement> seen;
  for (std::int64_t a = 0; a < 3; ++a) {
    for (std::int64_t b = 0; b < 2; ++b) {
      for (std::int64_t c = 0; c < 4; ++c) {
        std::vector<std::int64_t> raw{a, b, c};
        auto g = p.normalize(raw);
        CHECK(p.raw(g) == raw);
        seen.insert(g);
      }
    }
  }
  CHECK(seen.size() == 24);
  // additive
  auto x = p.normalize(std::vector<std::int64_t>{1, 1, 3});
  auto y = p.normalize(std::vector<std::int64_t>{2, 1, 2});
  CHECK(p.group().add(x, y) == p.normalize(std::vector<std::int64_t>{0, 0, 1}));
}

TEST_CASE("make_hom") {
  auto c4 = FiniteAbelianGroup::cyclic(4);
  auto c2 = FiniteAbelianGroup::cyclic(2);
  auto c3 = FiniteAbelianGroup::cyclic(3);
  auto phi = make_hom(c4, c2, {c2.element({1})});
  CHECK(phi.apply(c4.element({3})) == c2.element({1}));
  CHECK(phi.apply(c4.element({2})) == c2.zero());

  auto v = grp("2,2");
  auto proj = make_hom(v, c2, {c2.element({1}), c2.element({0})});
  CHECK(proj.apply(v.element({1, 1})) == c2.element({1}));

  CHECK_THROWS_AS(make_hom(c2, c3, {c3.element({1})}), IllDefinedHomError);
  CHECK_THROWS_AS(make_hom(c2, c3, {}), InvalidArgument);
}

TEST_CASE("kernels") {
  auto c4 = FiniteAbelianGroup::cyclic(4);
  auto c2 = FiniteAbelianGroup::cyclic(2);
  auto phi = make_hom(c4, c2, {c2.element({1})});
  CHECK(phi.kernel_elements() == std::vector<GroupElement>{c4.element({0}), c4.element({2})});
  CHECK(phi.kernel_structure() == c2);

  auto v = grp("2,2");
  auto proj = Homomorphism::projection(v, 0);
  CHECK(proj.kernel_elements() == std::vector<GroupElement>{v.element({0, 0}), v.element({0, 1})});
  CHECK(proj.kernel_structure() == c2);

  auto id = Homomorphism::identity(FiniteAbelianGroup::cyclic(6));
  CHECK(id.kernel_elements().size() == 1);
  CHECK(id.kernel_structure().is_trivial());
}

TEST_CASE("multiplication by p") {
  struct Case {
    std::int64_t p;
    int m;
    int n;
  };
  for (auto [p, m, n] : {Case{2, 2, 1}, Case{2, 2, 2}, Case{2, 3, 1}, Case{3, 2, 1}, Case{2, 1, 2}}) {
    std::vector<std::int64_t> moduli{ipow(p, m)};
    for (int i = 0; i < n; ++i) moduli.push_back(p);
    auto g = FiniteAbelianGroup::from_moduli(moduli);
    auto phi = Homomorphism::multiplication(g, p);
    // kernel C_p^(n+1), image C_{p^(m-1)}
    std::vector<std::int64_t> kern(static_cast<std::size_t>(n + 1), p);
    CHECK(phi.kernel_structure() == FiniteAbelianGroup::from_moduli(kern));
    if (m == 1) {
      CHECK(phi.quotient_structure().is_trivial());
    } else {
      CHECK(phi.quotient_structure() == FiniteAbelianGroup::cyclic(ipow(p, m - 1)));
    }
    CHECK(static_cast<std::int64_t>(phi.kernel_elements().size() * phi.image_elements().size()) == g.order());
  }
}

TEST_CASE("homomorphisms are additive") {
  std::mt19937_64 rng(7);
  for (const auto& g : testing_support::groups_up_to(16)) {
    std::vector<Homomorphism> maps{Homomorphism::identity(g), Homomorphism::multiplication(g, 2),
                                   Homomorphism::multiplication(g, 3), Homomorphism::projection(g, 0)};
    for (const auto& pf : factorize(g.order())) maps.push_back(Homomorphism::drop_primes(g, {pf.prime}));
    auto elems = g.elements();
    for (const auto& phi : maps) {
      for (const auto& a : elems) {
        for (const auto& b : elems) CHECK(phi.apply(g.add(a, b)) == phi.target().add(phi.apply(a), phi.apply(b)));
      }
    }
  }
}

TEST_CASE("drop primes") {
  auto g = FiniteAbelianGroup::cyclic(12);
  auto phi = Homomorphism::drop_primes(g, {2});
  CHECK(phi.target() == FiniteAbelianGroup::cyclic(3));
  CHECK(phi.kernel_structure() == FiniteAbelianGroup::cyclic(4));
}

TEST_CASE("dense indexing") {
  for (const auto& g : testing_support::groups_up_to(30)) {
    DenseGroup d(g);
    auto elems = g.elements();
    CHECK(d.size() == static_cast<int>(elems.size()));
    CHECK(d.index(g.zero()) == 0);
    for (int i = 0; i < d.size(); ++i) {
      CHECK(d.element(i) == elems[static_cast<std::size_t>(i)]);
      CHECK(d.element(d.neg(i)) == g.negate(elems[static_cast<std::size_t>(i)]));
      for (int j = 0; j < d.size(); j += 3) CHECK(d.element(d.add(i, j)) == g.add(elems[i], elems[j]));
    }
  }
}
