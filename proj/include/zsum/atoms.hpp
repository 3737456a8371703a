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
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "zsum/group.hpp"
#include "zsum/multiset.hpp"

namespace zsum {

// Minimal zero-sum multisets over G \ {0}, each stored as a nondecreasing
// list of dense element indices. Sorted by length, then lexicographically.
struct AtomCatalog {
  static constexpr int kFormatVersion = 1;

  FiniteAbelianGroup group;
  std::vector<std::vector<int>> atoms;
  // Orbit sizes under Aut(G), parallel to `atoms`; empty unless the catalog
  // was reduced to orbit representatives.
  std::vector<std::int64_t> orbit_sizes;
  int max_length_enumerated = 0;
  // True iff every atom of the group is listed (the enumeration reached D(G)).
  bool complete = false;
  bool from_cache = false;
  std::uint64_t nodes = 0;

  std::size_t size() const { return atoms.size(); }
  int max_length() const;
  std::vector<GroupElement> elements(std::size_t i) const;
  IndexedMultiset multiset(std::size_t i) const;
  bool symmetry_reduced() const { return !orbit_sizes.empty(); }
};

struct AtomOptions {
  // Entry cap; exceeding it throws ResourceLimitError.
  std::size_t max_entries = 5'000'000;
  // Group order bound for enumeration at all.
  std::int64_t max_group_order = 64;
  int workers = 1;
  // Directory for catalog files; empty disables persistence.
  std::filesystem::path cache_dir;
  // Keep one representative per automorphism orbit (with orbit sizes).
  bool symmetry = false;
};

// All atoms of length <= max_len (max_len <= 0 means |G|, which is always
// enough since D(G) <= |G|).
AtomCatalog enumerate_atoms(const FiniteAbelianGroup& group, int max_len, const AtomOptions& options = {});

// Catalog file name and (de)serialization. The text is a pure function of
// the catalog contents.
std::string catalog_file_name(const FiniteAbelianGroup& group, int max_len, bool symmetry);
std::string serialize_catalog(const AtomCatalog& catalog);
AtomCatalog parse_catalog(const std::string& text);

struct ZeroSumFreeMax {
  Rational value;
  IndexedMultiset witness;
};

// k(G): the largest cross number of a zero-sum free multiset, read off a
// complete catalog as max over atoms A and g in A of k(A \ {g}).
ZeroSumFreeMax max_zero_sum_free_cross(const AtomCatalog& catalog);

// Automorphisms of G as permutations of dense indices, found by testing
// generator images. Throws ResourceLimitError when the candidate space is
// larger than `max_candidates`.
std::vector<std::vector<int>> automorphisms(const FiniteAbelianGroup& group, std::uint64_t max_candidates = 2'000'000);

}  // namespace zsum
