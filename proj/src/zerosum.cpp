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

#include "zsum/zerosum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "zsum/element_set.hpp"

namespace zsum {

std::shared_ptr<const DenseGroup> shared_dense(const FiniteAbelianGroup& group) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const DenseGroup>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[group.key()];
  if (!slot) slot = std::make_shared<const DenseGroup>(group);
  return slot;
}

Factorization Factorization::from_blocks(std::vector<IndexSubset> blocks) {
  for (auto& b : blocks) std::sort(b.labels.begin(), b.labels.end());
  std::sort(blocks.begin(), blocks.end());
  return {std::move(blocks)};
}

namespace {

std::vector<int> dense_positions(const DenseGroup& dense, const IndexedMultiset& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (const auto& g : s.elements()) out.push_back(dense.index(g));
  return out;
}

void require_ufim_domain(const IndexedMultiset& s) {
  if (s.contains_identity()) throw PreconditionError("multiset contains the identity element");
  if (!is_zero_sum(s)) throw PreconditionError("multiset is not zero-sum");
}

void require_size(const IndexedMultiset& s, const ZeroSumOptions& options) {
  if (options.max_size < 0 || options.max_size > kHardMaxMultisetSize) {
    throw InvalidArgument("multiset size cap must lie in [0, " + std::to_string(kHardMaxMultisetSize) + "]");
  }
  int cap = options.max_size;
  if (static_cast<int>(s.size()) > cap) {
    throw ResourceLimitError("multiset of size " + std::to_string(s.size()) + " exceeds the size cap " +
                             std::to_string(cap));
  }
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b, std::uint64_t cap) { return std::min(cap, a + b); }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a == 0 || b == 0) return 0;
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > cap ? cap : static_cast<std::uint64_t>(p);
}

std::uint64_t sat_binomial(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > cap) return cap;
  }
  return static_cast<std::uint64_t>(r);
}

// The multiset seen as distinct values with multiplicities. Factorizations
// are enumerated over multiplicity vectors; identical elements never branch.
struct MultiplicityView {
  std::shared_ptr<const DenseGroup> dense;
  std::vector<int> values;                 // distinct dense indices, ascending
  std::vector<int> counts;                 // multiplicity of each value
  std::vector<std::vector<Label>> labels;  // labels carrying each value

  explicit MultiplicityView(const IndexedMultiset& s) : dense(shared_dense(s.group())) {
    std::map<int, std::vector<Label>> by_value;
    for (std::size_t i = 0; i < s.size(); ++i) by_value[dense->index(s.elements()[i])].push_back(s.labels()[i]);
    for (auto& [v, ls] : by_value) {
      values.push_back(v);
      counts.push_back(static_cast<int>(ls.size()));
      labels.push_back(std::move(ls));
    }
  }

  // Calls emit(c) for every minimal zero-sum sub-multiset c <= rem that
  // contains at least one copy of values[pivot] and nothing below it.
  // emit returns false to stop the enumeration.
  bool for_each_block(const std::vector<int>& rem, int pivot, const std::function<bool(const std::vector<int>&)>& emit) const {
    std::vector<int> c(values.size(), 0);
    c[pivot] = 1;
    ElementSet sums(dense->size());
    sums.insert(values[pivot]);
    if (values[pivot] == 0) return emit(c);
    return extend(rem, pivot, c, sums, values[pivot], emit);
  }

  bool extend(const std::vector<int>& rem, int from, std::vector<int>& c, const ElementSet& sums, int sigma,
              const std::function<bool(const std::vector<int>&)>& emit) const {
    for (std::size_t i = static_cast<std::size_t>(from); i < values.size(); ++i) {
      if (c[i] >= rem[i]) continue;
      int v = values[i];
      int next = dense->add(sigma, v);
      if (next == 0) {
        ++c[i];
        bool go_on = emit(c);
        --c[i];
        if (!go_on) return false;
        continue;
      }
      if (sums.contains(dense->neg(v))) continue;
      ++c[i];
      bool go_on = extend(rem, static_cast<int>(i), c, sums.extended_by(*dense, v), next, emit);
      --c[i];
      if (!go_on) return false;
    }
    return true;
  }

  std::uint64_t count(std::vector<int>& rem, std::uint64_t cap, std::map<std::vector<int>, std::uint64_t>& memo) const {
    auto pivot_it = std::find_if(rem.begin(), rem.end(), [](int x) { return x > 0; });
    if (pivot_it == rem.end()) return 1;
    if (auto it = memo.find(rem); it != memo.end()) return it->second;
    int pivot = static_cast<int>(pivot_it - rem.begin());
    std::uint64_t total = 0;
    for_each_block(rem, pivot, [&](const std::vector<int>& c) {
      std::uint64_t ways = sat_binomial(rem[pivot] - 1, c[pivot] - 1, cap);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (static_cast<int>(i) != pivot && c[i] > 0) ways = sat_mul(ways, sat_binomial(rem[i], c[i], cap), cap);
      }
      for (std::size_t i = 0; i < c.size(); ++i) rem[i] -= c[i];
      std::uint64_t sub = count(rem, cap, memo);
      for (std::size_t i = 0; i < c.size(); ++i) rem[i] += c[i];
      total = sat_add(total, sat_mul(ways, sub, cap), cap);
      return total < cap;
    });
    memo.emplace(rem, total);
    return total;
  }

  // Distinct element-level factorizations (multisets of blocks), up to limit.
  void element_factorizations(std::vector<int>& rem, std::vector<std::vector<int>>& current,
                              std::set<std::vector<std::vector<int>>>& out, std::size_t limit) const {
    if (out.size() >= limit) return;
    auto pivot_it = std::find_if(rem.begin(), rem.end(), [](int x) { return x > 0; });
    if (pivot_it == rem.end()) {
      auto sorted = current;
      std::sort(sorted.begin(), sorted.end());
      out.insert(std::move(sorted));
      return;
    }
    int pivot = static_cast<int>(pivot_it - rem.begin());
    for_each_block(rem, pivot, [&](const std::vector<int>& c) {
      for (std::size_t i = 0; i < c.size(); ++i) rem[i] -= c[i];
      current.push_back(c);
      element_factorizations(rem, current, out, limit);
      current.pop_back();
      for (std::size_t i = 0; i < c.size(); ++i) rem[i] += c[i];
      return out.size() < limit;
    });
  }

  // Label assignment: copies of each value are dealt to blocks in order.
  // If `swap_value` >= 0, the first two blocks containing that value trade
  // one copy, producing a different index-level factorization.
  Factorization assign(const std::vector<std::vector<int>>& blocks, int swap_value) const {
    std::vector<IndexSubset> out(blocks.size());
    for (std::size_t v = 0; v < values.size(); ++v) {
      std::size_t next = 0;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int k = 0; k < blocks[b][v]; ++k) out[b].labels.push_back(labels[v][next++]);
      }
    }
    if (swap_value >= 0) {
      std::vector<std::size_t> holders;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b][swap_value] > 0) holders.push_back(b);
      }
      // Every label of this value sits in out[holders[0]] or out[holders[1]]
      // in dealing order, so swapping the last of the first block with the
      // first of the second changes both blocks.
      auto& a = out[holders[0]].labels;
      auto& b = out[holders[1]].labels;
      Label la = labels[swap_value][blocks[holders[0]][swap_value] - 1];
      Label lb = labels[swap_value][blocks[holders[0]][swap_value]];
      std::replace(a.begin(), a.end(), la, lb);
      std::replace(b.begin(), b.end(), lb, la);
    }
    return Factorization::from_blocks(std::move(out));
  }
};

}  // namespace

bool is_zero_sum(const IndexedMultiset& s) { return sigma(s) == s.group().zero(); }

bool is_zero_sum_free(const IndexedMultiset& s) {
  auto dense = shared_dense(s.group());
  ElementSet sums(dense->size());
  for (int g : dense_positions(*dense, s)) {
    if (g == 0 || sums.contains(dense->neg(g))) return false;
    sums = sums.extended_by(*dense, g);
  }
  return true;
}

bool is_minimal_zero_sum(const IndexedMultiset& s) {
  if (s.empty() || !is_zero_sum(s)) return false;
  // A zero-sum multiset is minimal iff dropping any single element leaves it
  // zero-sum free; checking one element suffices.
  IndexSubset last{{s.labels().back()}};
  return is_zero_sum_free(s.without(last));
}

std::vector<std::uint64_t> zero_sum_masks(const IndexedMultiset& s, const ZeroSumOptions& options) {
  require_size(s, options);
  auto dense = shared_dense(s.group());
  auto pos = dense_positions(*dense, s);
  std::vector<std::uint64_t> out;
  const int n = static_cast<int>(pos.size());
  std::function<void(int, int, std::uint64_t)> rec = [&](int i, int sum, std::uint64_t mask) {
    if (i == n) {
      if (sum == 0) out.push_back(mask);
      return;
    }
    rec(i + 1, sum, mask);
    rec(i + 1, dense->add(sum, pos[i]), mask | std::uint64_t{1} << i);
  };
  rec(0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSubset> zero_sum_subsets(const IndexedMultiset& s, const ZeroSumOptions& options) {
  std::vector<IndexSubset> out;
  for (auto m : zero_sum_masks(s, options)) out.push_back(s.subset_of(m));
  return out;
}

bool is_ufim_by_intersection(const IndexedMultiset& s, const ZeroSumOptions& options) {
  require_ufim_domain(s);
  auto masks = zero_sum_masks(s, options);
  std::unordered_set<std::uint64_t> family(masks.begin(), masks.end());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if (!family.contains(masks[i] & masks[j])) return false;
    }
  }
  return true;
}

std::uint64_t count_factorizations(const IndexedMultiset& s, std::uint64_t cap) {
  require_ufim_domain(s);
  if (cap == 0) return 0;
  MultiplicityView view(s);
  auto rem = view.counts;
  std::map<std::vector<int>, std::uint64_t> memo;
  return view.count(rem, cap, memo);
}

bool is_ufim(const IndexedMultiset& s, const ZeroSumOptions& options) {
  bool by_count = count_factorizations(s, 2) == 1;
  if (options.verify) {
    bool by_intersection = is_ufim_by_intersection(s, options);
    if (by_count != by_intersection) {
      throw std::logic_error("UFIM algorithms disagree on a multiset over " + s.group().key());
    }
  }
  return by_count;
}

std::vector<Factorization> find_factorizations(const IndexedMultiset& s, std::size_t limit) {
  require_ufim_domain(s);
  MultiplicityView view(s);
  auto rem = view.counts;
  std::vector<std::vector<int>> current;
  std::set<std::vector<std::vector<int>>> element_level;
  view.element_factorizations(rem, current, element_level, limit);
  std::vector<Factorization> out;
  for (const auto& blocks : element_level) {
    if (out.size() >= limit) break;
    out.push_back(view.assign(blocks, -1));
  }
  // One element-level factorization can still hide several index-level ones
  // when a value is spread over two blocks.
  for (const auto& blocks : element_level) {
    if (out.size() >= limit) break;
    for (std::size_t v = 0; v < view.values.size(); ++v) {
      int holders = 0;
      for (const auto& b : blocks) holders += b[v] > 0 ? 1 : 0;
      if (holders >= 2) {
        out.push_back(view.assign(blocks, static_cast<int>(v)));
        break;
      }
    }
  }
  return out;
}

Factorization unique_factorization(const IndexedMultiset& s, const ZeroSumOptions& options) {
  if (!is_ufim(s, options)) {
    auto f = find_factorizations(s, 2);
    if (f.size() < 2) throw std::logic_error("non-unique factorization without two witnesses");
    throw NotUniqueError("multiset over " + s.group().key() + " does not factor uniquely", f[0], f[1]);
  }
  auto f = find_factorizations(s, 1);
  if (f.empty()) return {};
  return f.front();
}

}  // namespace zsum
