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
#include <vector>

#include "zsum/errors.hpp"
#include "zsum/multiset.hpp"

namespace zsum {

struct ZeroSumOptions {
  // Multisets longer than this are rejected by the subset-enumerating
  // operations. Must not exceed kHardMaxMultisetSize.
  int max_size = kDefaultMaxMultisetSize;
  // Run both UFIM algorithms and require agreement.
  bool verify = false;
};

// Irreducible factorization: a partition of the label set into blocks, each
// minimal zero-sum. Blocks are kept sorted so that equality is equality of
// the sets of index sets.
struct Factorization {
  std::vector<IndexSubset> blocks;

  static Factorization from_blocks(std::vector<IndexSubset> blocks);
  std::size_t size() const { return blocks.size(); }
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

class NotUniqueError : public PreconditionError {
 public:
  NotUniqueError(const std::string& what, Factorization a, Factorization b)
      : PreconditionError(what), first(std::move(a)), second(std::move(b)) {}
  Factorization first;
  Factorization second;
};

bool is_zero_sum(const IndexedMultiset& s);
// Zero-sum with no proper nonempty zero-sum subset; the empty multiset is not.
bool is_minimal_zero_sum(const IndexedMultiset& s);
bool is_zero_sum_free(const IndexedMultiset& s);

// Every index subset (including the empty one) summing to zero, in
// increasing order of position bitmask.
std::vector<IndexSubset> zero_sum_subsets(const IndexedMultiset& s, const ZeroSumOptions& options = {});
std::vector<std::uint64_t> zero_sum_masks(const IndexedMultiset& s, const ZeroSumOptions& options = {});

// Closure of the zero-sum subsets under pairwise intersection.
// Preconditions: s zero-sum, no identity entries.
bool is_ufim_by_intersection(const IndexedMultiset& s, const ZeroSumOptions& options = {});

// Number of distinct irreducible factorizations, saturating at `cap`.
// Preconditions as above.
std::uint64_t count_factorizations(const IndexedMultiset& s, std::uint64_t cap);

bool is_ufim(const IndexedMultiset& s, const ZeroSumOptions& options = {});

// Throws NotUniqueError (with two distinct factorizations) on a non-UFIM.
Factorization unique_factorization(const IndexedMultiset& s, const ZeroSumOptions& options = {});

// Distinct factorizations, at most `limit`. Every element-level shape is
// listed, plus one relabeled variant where a value spans two blocks, so this
// is not exhaustive; a non-UFIM always yields at least two.
std::vector<Factorization> find_factorizations(const IndexedMultiset& s, std::size_t limit);

}  // namespace zsum
