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
#include <iosfwd>
#include <vector>

#include "zsum/group.hpp"
#include "zsum/rational.hpp"

namespace zsum {

class Homomorphism;

using Label = std::int64_t;

// Largest multiset the bitmask-based subset machinery can address at all;
// the configurable cap (default 40) is checked against this.
inline constexpr int kHardMaxMultisetSize = 64;
inline constexpr int kDefaultMaxMultisetSize = 40;

// A set of index labels of some multiset, kept sorted.
struct IndexSubset {
  std::vector<Label> labels;

  bool contains(Label l) const;
  std::size_t size() const { return labels.size(); }
  bool empty() const { return labels.empty(); }
  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
  friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;
};

// Finite indexed multiset over a group. Entries are kept in insertion order;
// labels are distinct and handed out by a per-multiset counter.
class IndexedMultiset {
 public:
  explicit IndexedMultiset(FiniteAbelianGroup group);
  IndexedMultiset(FiniteAbelianGroup group, std::vector<GroupElement> elements);
  static IndexedMultiset from_residues(const FiniteAbelianGroup& group,
                                       const std::vector<std::vector<std::int64_t>>& residues);

  Label push_back(GroupElement g);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  Label next_label() const { return next_label_; }

  const GroupElement& at(Label label) const;
  std::size_t position(Label label) const;

  IndexSubset all() const;
  // Submultiset with the given labels (labels are preserved).
  IndexedMultiset sub(const IndexSubset& subset) const;
  IndexedMultiset without(const IndexSubset& subset) const;
  IndexSubset complement(const IndexSubset& subset) const;

  // Position bitmask <-> label subset. Both require size() <= 64.
  std::uint64_t mask_of(const IndexSubset& subset) const;
  IndexSubset subset_of(std::uint64_t mask) const;

  bool contains_identity() const;

  // Sorted element list under the global element order, labels dropped.
  std::vector<GroupElement> canonical() const;
  bool same_multiset(const IndexedMultiset& other) const;

  friend IndexedMultiset apply(const Homomorphism& phi, const IndexedMultiset& s);

 private:
  FiniteAbelianGroup group_;
  std::vector<Label> labels_;
  std::vector<GroupElement> elements_;
  Label next_label_ = 0;
};

std::ostream& operator<<(std::ostream& os, const IndexedMultiset& s);

GroupElement sigma(const IndexedMultiset& s);
GroupElement sigma(const IndexedMultiset& s, const IndexSubset& subset);

Rational cross_number(const IndexedMultiset& s);
Rational cross_number(const IndexedMultiset& s, const IndexSubset& subset);
// Cross number of a bare element list over `group`.
Rational cross_number(const FiniteAbelianGroup& group, const std::vector<GroupElement>& elements);

// Union over the same group; the right operand's labels are shifted past the
// left operand's label counter.
IndexedMultiset disjoint_union(const IndexedMultiset& a, const IndexedMultiset& b);

// phi(S), labels preserved.
IndexedMultiset apply(const Homomorphism& phi, const IndexedMultiset& s);

}  // namespace zsum
