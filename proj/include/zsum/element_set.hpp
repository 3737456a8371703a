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

#include <bit>
#include <cstdint>
#include <memory>
#include <vector>

#include "zsum/group.hpp"

namespace zsum {

// Process-wide cache of dense tables, keyed by group key.
std::shared_ptr<const DenseGroup> shared_dense(const FiniteAbelianGroup& group);

// Bitset over the dense element indices of a group, sized at construction.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe) : words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

  void insert(int x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  bool contains(int x) const { return words_[x >> 6] >> (x & 63) & 1U; }
  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  // this ∪ (this + g) ∪ {g}: the subset sums after appending g.
  ElementSet extended_by(const DenseGroup& dense, int g) const {
    ElementSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int x = static_cast<int>(w * 64) + std::countr_zero(bits);
        bits &= bits - 1;
        out.insert(dense.add(x, g));
      }
    }
    out.insert(g);
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace zsum
