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

#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "oracle.hpp"
#include "zsum/element_set.hpp"
#include "zsum/homomorphism.hpp"
#include "zsum/group.hpp"
#include "zsum/invariants.hpp"
#include "zsum/multiset.hpp"
#include "zsum/search.hpp"

namespace testing_support {

inline zsum::FiniteAbelianGroup grp(std::string_view spec) { return zsum::FiniteAbelianGroup::parse(spec); }

inline zsum::IndexedMultiset ms(std::string_view spec, const std::vector<std::vector<std::int64_t>>& residues) {
  return zsum::IndexedMultiset::from_residues(grp(spec), residues);
}

// Multiset over the cyclic group C_n.
inline zsum::IndexedMultiset cyc(std::int64_t n, const std::vector<std::int64_t>& values) {
  std::vector<std::vector<std::int64_t>> residues;
  for (auto v : values) residues.push_back({v});
  return zsum::IndexedMultiset::from_residues(zsum::FiniteAbelianGroup::cyclic(n), residues);
}

inline std::vector<oracle::Elem> raw(const zsum::IndexedMultiset& s) {
  std::vector<oracle::Elem> out;
  for (const auto& g : s.elements()) out.push_back(g.residues);
  return out;
}

inline zsum::IndexedMultiset from_positions(const zsum::FiniteAbelianGroup& g, const oracle::Group& og,
                                            const std::vector<int>& idx) {
  return zsum::IndexedMultiset::from_residues(g, oracle::elems_of(og, idx));
}

// Random zero-sum multiset over G \ {0} with 2 <= size <= max_len, or
// nullopt-like empty result if the last element would be the identity.
inline std::vector<oracle::Elem> random_zero_sum(const oracle::Group& g, int max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> pick(1, g.order - 1);
  std::uniform_int_distribution<int> len(2, max_len);
  for (;;) {
    int n = len(rng);
    std::vector<oracle::Elem> s;
    oracle::Elem acc(g.mod.size(), 0);
    for (int i = 0; i + 1 < n; ++i) {
      s.push_back(g.elems[static_cast<std::size_t>(pick(rng))]);
      acc = oracle::add(g, acc, s.back());
    }
    oracle::Elem last(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j) last[j] = (g.mod[j] - acc[j]) % g.mod[j];
    if (oracle::is_zero(last)) continue;
    s.push_back(last);
    return s;
  }
}

// All groups with 2 <= |G| <= bound.
inline std::vector<zsum::FiniteAbelianGroup> groups_up_to(std::int64_t bound) {
  std::vector<zsum::FiniteAbelianGroup> out;
  for (std::int64_t n = 2; n <= bound; ++n) {
    for (auto& g : zsum::all_groups_of_order(n)) out.push_back(g);
  }
  return out;
}

// Nonempty UFIMs over G \ {0}, in enumeration order, at most `limit`.
inline std::vector<zsum::IndexedMultiset> ufims(zsum::InvariantEngine& engine, const zsum::FiniteAbelianGroup& g,
                                                std::size_t limit, bool product_pruning = true) {
  auto cat = engine.catalog(g);
  auto dense = zsum::shared_dense(g);
  std::vector<zsum::IndexedMultiset> out;
  zsum::EnumerateOptions opt;
  opt.product_pruning = product_pruning;
  zsum::for_each_ufim(
      *cat,
      [&](const std::vector<std::size_t>& blocks) {
        zsum::IndexedMultiset s(g);
        for (int x : zsum::union_of_atoms(*cat, blocks)) s.push_back(dense->element(x));
        out.push_back(std::move(s));
        return out.size() < limit;
      },
      opt);
  return out;
}

// The maps the decomposition properties are exercised with.
inline std::vector<zsum::Homomorphism> test_maps(const zsum::FiniteAbelianGroup& g) {
  std::vector<zsum::Homomorphism> maps{zsum::Homomorphism::multiplication(g, 2),
                                      zsum::Homomorphism::multiplication(g, 3)};
  for (int j = 0; j < g.rank(); ++j) maps.push_back(zsum::Homomorphism::projection(g, j));
  auto primes = zsum::factorize(g.order());
  if (primes.size() > 1) {
    for (const auto& pf : primes) maps.push_back(zsum::Homomorphism::drop_primes(g, {pf.prime}));
  }
  return maps;
}

}  // namespace testing_support
