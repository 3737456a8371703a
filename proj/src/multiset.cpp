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

#include "zsum/multiset.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "zsum/errors.hpp"
#include "zsum/homomorphism.hpp"

namespace zsum {

bool IndexSubset::contains(Label l) const { return std::binary_search(labels.begin(), labels.end(), l); }

IndexedMultiset::IndexedMultiset(FiniteAbelianGroup group) : group_(std::move(group)) {}

IndexedMultiset::IndexedMultiset(FiniteAbelianGroup group, std::vector<GroupElement> elements)
    : group_(std::move(group)) {
  for (auto& g : elements) push_back(std::move(g));
}

IndexedMultiset IndexedMultiset::from_residues(const FiniteAbelianGroup& group,
                                               const std::vector<std::vector<std::int64_t>>& residues) {
  IndexedMultiset s(group);
  for (const auto& r : residues) {
    GroupElement g{r};
    if (!group.contains(g)) {
      throw InvalidArgument("residue vector does not belong to group " + group.key());
    }
    s.push_back(std::move(g));
  }
  return s;
}

Label IndexedMultiset::push_back(GroupElement g) {
  if (!group_.contains(g)) throw InvalidArgument("element does not belong to group " + group_.key());
  Label l = next_label_++;
  labels_.push_back(l);
  elements_.push_back(std::move(g));
  return l;
}

std::size_t IndexedMultiset::position(Label label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidArgument("unknown index label " + std::to_string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

const GroupElement& IndexedMultiset::at(Label label) const { return elements_[position(label)]; }

IndexSubset IndexedMultiset::all() const {
  IndexSubset s{labels_};
  std::sort(s.labels.begin(), s.labels.end());
  return s;
}

IndexedMultiset IndexedMultiset::sub(const IndexSubset& subset) const {
  IndexedMultiset out(group_);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (subset.contains(labels_[i])) {
      out.labels_.push_back(labels_[i]);
      out.elements_.push_back(elements_[i]);
    }
  }
  out.next_label_ = next_label_;
  return out;
}

IndexSubset IndexedMultiset::complement(const IndexSubset& subset) const {
  IndexSubset out;
  for (Label l : labels_) {
    if (!subset.contains(l)) out.labels.push_back(l);
  }
  std::sort(out.labels.begin(), out.labels.end());
  return out;
}

IndexedMultiset IndexedMultiset::without(const IndexSubset& subset) const { return sub(complement(subset)); }

std::uint64_t IndexedMultiset::mask_of(const IndexSubset& subset) const {
  if (size() > static_cast<std::size_t>(kHardMaxMultisetSize)) throw ResourceLimitError("multiset too large for masks");
  std::uint64_t m = 0;
  for (Label l : subset.labels) m |= std::uint64_t{1} << position(l);
  return m;
}

IndexSubset IndexedMultiset::subset_of(std::uint64_t mask) const {
  IndexSubset out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (mask >> i & 1U) out.labels.push_back(labels_[i]);
  }
  std::sort(out.labels.begin(), out.labels.end());
  return out;
}

bool IndexedMultiset::contains_identity() const {
  auto zero = group_.zero();
  return std::any_of(elements_.begin(), elements_.end(), [&](const auto& g) { return g == zero; });
}

std::vector<GroupElement> IndexedMultiset::canonical() const {
  auto out = elements_;
  std::sort(out.begin(), out.end());
  return out;
}

bool IndexedMultiset::same_multiset(const IndexedMultiset& other) const {
  return group_ == other.group_ && canonical() == other.canonical();
}

std::ostream& operator<<(std::ostream& os, const IndexedMultiset& s) {
  os << '[';
  auto c = s.canonical();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os << ']';
}

GroupElement sigma(const IndexedMultiset& s) {
  GroupElement acc = s.group().zero();
  for (const auto& g : s.elements()) acc = s.group().add(acc, g);
  return acc;
}

GroupElement sigma(const IndexedMultiset& s, const IndexSubset& subset) { return sigma(s.sub(subset)); }

Rational cross_number(const FiniteAbelianGroup& group, const std::vector<GroupElement>& elements) {
  // Sum E/ord(g) as an integer, then divide once by the exponent.
  std::int64_t e = group.exponent();
  std::int64_t units = 0;
  for (const auto& g : elements) units += e / group.element_order(g);
  return Rational(units, e);
}

Rational cross_number(const IndexedMultiset& s) { return cross_number(s.group(), s.elements()); }

Rational cross_number(const IndexedMultiset& s, const IndexSubset& subset) { return cross_number(s.sub(subset)); }

IndexedMultiset disjoint_union(const IndexedMultiset& a, const IndexedMultiset& b) {
  if (!(a.group() == b.group())) throw InvalidArgument("disjoint_union: multisets over different groups");
  IndexedMultiset out = a;
  for (const auto& g : b.elements()) out.push_back(g);
  return out;
}

IndexedMultiset apply(const Homomorphism& phi, const IndexedMultiset& s) {
  if (!(phi.source() == s.group())) throw InvalidArgument("apply: multiset is not over the homomorphism source");
  IndexedMultiset out(phi.target());
  out.labels_ = s.labels_;
  out.next_label_ = s.next_label_;
  for (const auto& g : s.elements()) out.elements_.push_back(phi.apply(g));
  return out;
}

}  // namespace zsum
