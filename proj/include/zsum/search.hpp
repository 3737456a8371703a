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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zsum/atoms.hpp"
#include "zsum/rational.hpp"

namespace zsum {

// Objective of the UFIM branch-and-bound.
enum class Measure {
  kCrossNumber,  // K1
  kSize,         // N1
};

struct SearchOptions {
  int workers = 1;
  std::uint64_t budget_nodes = 0;  // 0: unlimited
  double budget_seconds = 0;       // 0: unlimited
  // Keep every maximizer, not just the canonical one.
  bool collect_all_maximizers = false;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::map<std::string, std::uint64_t> prunes;

  void merge(const SearchStats& other);
};

struct SearchResult {
  Rational value;
  // Canonical-least maximizer: the lexicographically least sorted list of
  // dense element indices among all maximizers.
  std::vector<int> witness;
  // Atom catalog indices of the witness blocks, ascending.
  std::vector<std::size_t> witness_blocks;
  std::vector<std::vector<int>> maximizers;  // sorted, when collected
  bool complete = true;
  SearchStats stats;
};

struct Incumbent {
  Rational value;
  std::vector<int> witness;  // sorted dense indices
};

// Maximizes the measure over all UFIMs over G \ {0}, built as unions of
// distinct catalog atoms in increasing catalog order. `floor` must be the
// value of a known UFIM; it only tightens pruning. On budget exhaustion the
// result carries complete = false and the best value seen (at least the
// floor).
SearchResult maximize_ufim(const AtomCatalog& catalog, Measure measure, const Incumbent& floor,
                           const SearchOptions& options = {});

struct EnumerateOptions {
  // Skip branches whose block-length product exceeds |G|. Off, the
  // enumeration is limited only by the UFIM condition itself.
  bool product_pruning = true;
  std::uint64_t budget_nodes = 0;
};

// Calls visit for every nonempty UFIM over G \ {0} (as a set of atom
// indices); visit returns false to stop. Returns false if the enumeration
// was cut short by the visitor or the budget.
bool for_each_ufim(const AtomCatalog& catalog, const std::function<bool(const std::vector<std::size_t>&)>& visit,
                   const EnumerateOptions& options = {});

// Sorted dense indices of the union of the given atoms.
std::vector<int> union_of_atoms(const AtomCatalog& catalog, const std::vector<std::size_t>& blocks);

}  // namespace zsum
