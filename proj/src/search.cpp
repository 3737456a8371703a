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

#include "zsum/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>

#include "zsum/element_set.hpp"
#include "zsum/errors.hpp"

namespace zsum {

void SearchStats::merge(const SearchStats& other) {
  nodes += other.nodes;
  for (const auto& [k, v] : other.prunes) prunes[k] += v;
}

std::vector<int> union_of_atoms(const AtomCatalog& catalog, const std::vector<std::size_t>& blocks) {
  std::vector<int> out;
  for (auto b : blocks) out.insert(out.end(), catalog.atoms[b].begin(), catalog.atoms[b].end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Mask = std::uint64_t;

Mask bit(int x) { return Mask{1} << x; }

// Per-atom data for the incremental UFIM test. For a union of atoms
// B_1..B_m, F is the set of sums of X_1 + ... + X_m with X_i a subset of B_i
// and at least one X_i proper and nonempty. The union is a UFIM iff 0 is
// not in F (every zero-sum subset is then a union of blocks). Appending an
// atom with subset sums P (0 included) and proper sums Q = P \ {0} gives
// F' = (F + P) | Q.
struct AtomTable {
  const DenseGroup* dense = nullptr;
  int n = 0;
  std::vector<Mask> all_sums;
  std::vector<Mask> proper_sums;
  std::vector<int> length;
  std::vector<std::int64_t> weight;

  AtomTable(const AtomCatalog& catalog, Measure measure) {
    if (catalog.group.order() > 64) {
      throw ResourceLimitError("UFIM search needs |G| <= 64, got " + catalog.group.key());
    }
    if (catalog.symmetry_reduced()) throw PreconditionError("UFIM search needs the full atom catalog");
    if (!catalog.complete) throw IncompleteCatalogError("atom catalog for " + catalog.group.key() + " is incomplete");
    dense_owner = shared_dense(catalog.group);
    dense = dense_owner.get();
    n = dense->size();
    const std::int64_t e = catalog.group.exponent();
    for (const auto& a : catalog.atoms) {
      Mask sums = bit(0);
      for (int g : a) sums |= shift(sums, g);
      all_sums.push_back(sums);
      proper_sums.push_back(sums & ~bit(0));
      length.push_back(static_cast<int>(a.size()));
      std::int64_t w = 0;
      for (int g : a) w += measure == Measure::kCrossNumber ? e / dense->order_of(g) : 1;
      weight.push_back(w);
    }
  }

  Mask shift(Mask m, int y) const {
    Mask out = 0;
    while (m) {
      int x = std::countr_zero(m);
      m &= m - 1;
      out |= bit(dense->add(x, y));
    }
    return out;
  }

  Mask sumset(Mask f, Mask p) const {
    Mask out = 0;
    while (p) {
      int y = std::countr_zero(p);
      p &= p - 1;
      out |= shift(f, y);
    }
    return out;
  }

  Mask negate(Mask m) const {
    Mask out = 0;
    while (m) {
      int x = std::countr_zero(m);
      m &= m - 1;
      out |= bit(dense->neg(x));
    }
    return out;
  }

  bool accepts(Mask f, std::size_t j) const { return (negate(f) & all_sums[j]) == 0; }
  Mask extend(Mask f, std::size_t j) const { return sumset(f, all_sums[j]) | proper_sums[j]; }

  std::shared_ptr<const DenseGroup> dense_owner;
};

// ub[l][c]: the largest total weight of atoms with lengths >= l whose
// length product is at most c.
std::vector<std::vector<std::int64_t>> capacity_bounds(const AtomTable& t) {
  const int n = t.n;
  std::vector<std::int64_t> wmax(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t j = 0; j < t.length.size(); ++j) wmax[t.length[j]] = std::max(wmax[t.length[j]], t.weight[j]);
  std::vector<std::vector<std::int64_t>> ub(static_cast<std::size_t>(n) + 2,
                                            std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
  for (int c = 0; c <= n; ++c) {
    for (int l = n; l >= 1; --l) {
      std::int64_t best = l + 1 <= n ? ub[l + 1][c] : 0;
      if (l >= 2 && l <= c && wmax[l] >= 0) best = std::max(best, wmax[l] + ub[l][c / l]);
      ub[l][c] = best;
    }
  }
  return ub;
}

struct Budget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};

  bool charge() {
    std::uint64_t k = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (max_nodes && k > max_nodes) exhausted.store(true, std::memory_order_relaxed);
    if (max_seconds > 0 && (k & 1023) == 0) {
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      if (dt.count() > max_seconds) exhausted.store(true, std::memory_order_relaxed);
    }
    return !exhausted.load(std::memory_order_relaxed);
  }
};

struct SubtreeResult {
  std::int64_t best = -1;
  std::vector<int> witness;
  std::vector<std::size_t> blocks;
  std::vector<std::vector<int>> maximizers;
  SearchStats stats;
};

class Maximizer {
 public:
  Maximizer(const AtomCatalog& catalog, const AtomTable& table, const std::vector<std::vector<std::int64_t>>& ub,
            std::int64_t floor_units, bool collect, Budget& budget)
      : catalog_(catalog), t_(table), ub_(ub), floor_(floor_units), collect_(collect), budget_(budget) {}

  // Subtree whose first block is catalog atom `root`, or the empty UFIM when
  // root == npos.
  SubtreeResult run(std::size_t root) {
    SubtreeResult r;
    out_ = &r;
    chosen_.clear();
    if (root == npos) {
      ++r.stats.nodes;
      consider(0);
      return r;
    }
    chosen_.push_back(root);
    dfs(root + 1, t_.length[root], t_.proper_sums[root], t_.weight[root]);
    return r;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::int64_t threshold() const { return std::max(floor_, out_->best); }

  void consider(std::int64_t cur) {
    if (cur < threshold()) return;
    auto w = union_of_atoms(catalog_, chosen_);
    if (cur > out_->best) {
      out_->best = cur;
      out_->witness = w;
      out_->blocks = chosen_;
      out_->maximizers.clear();
    } else if (cur == out_->best && w < out_->witness) {
      out_->witness = w;
      out_->blocks = chosen_;
    } else if (cur != out_->best) {
      return;
    }
    if (collect_) out_->maximizers.push_back(std::move(w));
  }

  void dfs(std::size_t start, int product, Mask f, std::int64_t cur) {
    if (!budget_.charge()) return;
    ++out_->stats.nodes;
    consider(cur);
    const int cap = t_.n / product;
    for (std::size_t j = start; j < t_.length.size(); ++j) {
      const int len = t_.length[j];
      if (len > cap) {
        ++out_->stats.prunes["product"];
        break;
      }
      if (cur + t_.weight[j] + ub_[len][cap / len] < threshold()) {
        ++out_->stats.prunes["bound"];
        continue;
      }
      if (!t_.accepts(f, j)) {
        ++out_->stats.prunes["ufim"];
        continue;
      }
      chosen_.push_back(j);
      dfs(j + 1, product * len, t_.extend(f, j), cur + t_.weight[j]);
      chosen_.pop_back();
      if (budget_.exhausted.load(std::memory_order_relaxed)) return;
    }
  }

  const AtomCatalog& catalog_;
  const AtomTable& t_;
  const std::vector<std::vector<std::int64_t>>& ub_;
  std::int64_t floor_;
  bool collect_;
  Budget& budget_;
  SubtreeResult* out_ = nullptr;
  std::vector<std::size_t> chosen_;
};

}  // namespace

SearchResult maximize_ufim(const AtomCatalog& catalog, Measure measure, const Incumbent& floor,
                           const SearchOptions& options) {
  AtomTable table(catalog, measure);
  auto ub = capacity_bounds(table);
  const std::int64_t scale = measure == Measure::kCrossNumber ? catalog.group.exponent() : 1;
  Rational scaled = floor.value * Rational(scale);
  std::int64_t floor_units = scaled.num() / scaled.den();
  if (scaled.num() < 0) floor_units = 0;

  Budget budget;
  budget.max_nodes = options.budget_nodes;
  budget.max_seconds = options.budget_seconds;

  // Root tasks: the empty UFIM, then one subtree per first atom. Each
  // subtree prunes against its own incumbent, so the statistics do not
  // depend on how subtrees are scheduled.
  const std::size_t roots = catalog.atoms.size() + 1;
  std::vector<SubtreeResult> results(roots);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Maximizer m(catalog, table, ub, floor_units, options.collect_all_maximizers, budget);
    for (std::size_t i = next.fetch_add(1); i < roots; i = next.fetch_add(1)) {
      results[i] = m.run(i == 0 ? Maximizer::npos : i - 1);
    }
  };
  int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  }

  SearchResult out;
  std::int64_t best = -1;
  const SubtreeResult* winner = nullptr;
  for (const auto& r : results) {
    out.stats.merge(r.stats);
    if (r.best < 0) continue;
    if (r.best > best || (r.best == best && r.witness < winner->witness)) {
      best = r.best;
      winner = &r;
    }
  }
  for (const auto& r : results) {
    if (r.best == best && best >= 0) out.maximizers.insert(out.maximizers.end(), r.maximizers.begin(), r.maximizers.end());
  }
  std::sort(out.maximizers.begin(), out.maximizers.end());
  out.complete = !budget.exhausted.load();
  if (winner) {
    out.value = Rational(best, scale);
    out.witness = winner->witness;
    out.witness_blocks = winner->blocks;
  }
  if (!winner || (!out.complete && out.value < floor.value)) {
    out.value = floor.value;
    out.witness = floor.witness;
    out.witness_blocks.clear();
  }
  if (out.complete && !winner) {
    throw std::logic_error("UFIM search found nothing at or above the supplied floor");
  }
  return out;
}

bool for_each_ufim(const AtomCatalog& catalog, const std::function<bool(const std::vector<std::size_t>&)>& visit,
                   const EnumerateOptions& options) {
  AtomTable t(catalog, Measure::kSize);
  std::vector<std::size_t> chosen;
  std::uint64_t nodes = 0;
  bool stopped = false;
  auto dfs = [&](auto&& self, std::size_t start, std::int64_t product, Mask f) -> void {
    for (std::size_t j = start; j < t.length.size() && !stopped; ++j) {
      if (options.product_pruning && product * t.length[j] > t.n) break;
      if (!t.accepts(f, j)) continue;
      if (options.budget_nodes && ++nodes > options.budget_nodes) {
        stopped = true;
        return;
      }
      chosen.push_back(j);
      if (!visit(chosen)) stopped = true;
      if (!stopped) self(self, j + 1, std::min<std::int64_t>(product * t.length[j], std::int64_t{1} << 40), t.extend(f, j));
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 1, 0);
  return !stopped;
}

}  // namespace zsum
