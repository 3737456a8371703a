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

#include "zsum/atoms.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "zsum/element_set.hpp"
#include "zsum/errors.hpp"

namespace zsum {

int AtomCatalog::max_length() const { return atoms.empty() ? 0 : static_cast<int>(atoms.back().size()); }

std::vector<GroupElement> AtomCatalog::elements(std::size_t i) const {
  auto dense = shared_dense(group);
  std::vector<GroupElement> out;
  for (int x : atoms.at(i)) out.push_back(dense->element(x));
  return out;
}

IndexedMultiset AtomCatalog::multiset(std::size_t i) const { return IndexedMultiset(group, elements(i)); }

namespace {

struct RootWork {
  std::vector<std::vector<int>> atoms;
  std::uint64_t nodes = 0;
};

class AtomDfs {
 public:
  AtomDfs(const DenseGroup& dense, int max_len, std::size_t max_entries, std::atomic<std::size_t>& total,
          std::atomic<bool>& overflow)
      : dense_(dense), max_len_(max_len), max_entries_(max_entries), total_(total), overflow_(overflow) {}

  void run_root(int g, RootWork& out) {
    out_ = &out;
    seq_.assign(1, g);
    ElementSet sums(dense_.size());
    sums.insert(g);
    visit(sums, g);
  }

 private:
  // seq_ is zero-sum free with sum `sigma` and subset sums `sums`.
  void visit(const ElementSet& sums, int sigma) {
    if (overflow_.load(std::memory_order_relaxed)) return;
    ++out_->nodes;
    const int last = seq_.back();
    const int len = static_cast<int>(seq_.size());
    int closing = dense_.neg(sigma);
    if (closing >= last && len + 1 <= max_len_) {
      seq_.push_back(closing);
      out_->atoms.push_back(seq_);
      seq_.pop_back();
      if (total_.fetch_add(1, std::memory_order_relaxed) + 1 > max_entries_) {
        overflow_.store(true);
        return;
      }
    }
    if (len + 2 > max_len_) return;
    for (int g = last; g < dense_.size(); ++g) {
      if (sums.contains(dense_.neg(g))) continue;
      seq_.push_back(g);
      visit(sums.extended_by(dense_, g), dense_.add(sigma, g));
      seq_.pop_back();
    }
  }

  const DenseGroup& dense_;
  int max_len_;
  std::size_t max_entries_;
  std::atomic<std::size_t>& total_;
  std::atomic<bool>& overflow_;
  RootWork* out_ = nullptr;
  std::vector<int> seq_;
};

bool length_then_lex(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

AtomCatalog enumerate_uncached(const FiniteAbelianGroup& group, int max_len, const AtomOptions& options) {
  AtomCatalog cat;
  cat.group = group;
  cat.max_length_enumerated = max_len;
  if (group.is_trivial()) {
    cat.complete = true;
    return cat;
  }
  auto dense = shared_dense(group);
  const int n = dense->size();
  std::vector<RootWork> work(static_cast<std::size_t>(n));
  std::atomic<int> next{1};
  std::atomic<std::size_t> total{0};
  std::atomic<bool> overflow{false};
  auto worker = [&] {
    AtomDfs dfs(*dense, max_len, options.max_entries, total, overflow);
    for (int g = next.fetch_add(1); g < n; g = next.fetch_add(1)) dfs.run_root(g, work[g]);
  };
  int workers = std::max(1, std::min(options.workers, n - 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (overflow) {
    throw ResourceLimitError("atom catalog for " + group.key() + " exceeds " + std::to_string(options.max_entries) +
                             " entries");
  }
  bool longest_seen = false;
  for (auto& w : work) {
    cat.nodes += w.nodes;
    for (auto& a : w.atoms) {
      longest_seen = longest_seen || static_cast<int>(a.size()) == max_len;
      cat.atoms.push_back(std::move(a));
    }
  }
  std::sort(cat.atoms.begin(), cat.atoms.end(), length_then_lex);
  // Atoms exist in every length from 2 up to D(G), so a missing length
  // max_len means D(G) < max_len.
  cat.complete = !longest_seen || max_len >= group.order();
  return cat;
}

void reduce_by_symmetry(AtomCatalog& cat) {
  auto auts = automorphisms(cat.group);
  std::vector<std::vector<int>> reps;
  std::vector<std::int64_t> sizes;
  for (const auto& a : cat.atoms) {
    std::set<std::vector<int>> orbit;
    for (const auto& perm : auts) {
      std::vector<int> img;
      img.reserve(a.size());
      for (int x : a) img.push_back(perm[x]);
      std::sort(img.begin(), img.end());
      orbit.insert(std::move(img));
    }
    if (*orbit.begin() == a) {
      reps.push_back(a);
      sizes.push_back(static_cast<std::int64_t>(orbit.size()));
    }
  }
  cat.atoms = std::move(reps);
  cat.orbit_sizes = std::move(sizes);
}

int effective_max_len(const FiniteAbelianGroup& group, int max_len) {
  if (group.is_trivial()) return 1;
  if (max_len == 1) throw InvalidArgument("atom enumeration needs max_len >= 2");
  if (max_len <= 0 || max_len > group.order()) return static_cast<int>(group.order());
  return max_len;
}

}  // namespace

std::string catalog_file_name(const FiniteAbelianGroup& group, int max_len, bool symmetry) {
  return "atoms-v" + std::to_string(AtomCatalog::kFormatVersion) + "-" + group.key() + "-L" +
         std::to_string(effective_max_len(group, max_len)) + (symmetry ? "-sym" : "") + ".json";
}

std::string serialize_catalog(const AtomCatalog& catalog) {
  auto dense = shared_dense(catalog.group);
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& a : catalog.atoms) {
    nlohmann::json entry = nlohmann::json::array();
    for (int x : a) entry.push_back(dense->element(x).residues);
    atoms.push_back(std::move(entry));
  }
  nlohmann::json doc = {
      {"version", AtomCatalog::kFormatVersion},
      {"group", catalog.group.key()},
      {"max_len", catalog.max_length_enumerated},
      {"complete", catalog.complete},
      {"count", catalog.atoms.size()},
      {"nodes", catalog.nodes},
      {"atoms", std::move(atoms)},
  };
  if (catalog.symmetry_reduced()) doc["orbit_sizes"] = catalog.orbit_sizes;
  return doc.dump() + "\n";
}

AtomCatalog parse_catalog(const std::string& text) {
  AtomCatalog cat;
  try {
    auto doc = nlohmann::json::parse(text);
    if (doc.at("version").get<int>() != AtomCatalog::kFormatVersion) {
      throw InvalidArgument("unsupported atom catalog version");
    }
    cat.group = FiniteAbelianGroup::parse(doc.at("group").get<std::string>());
    cat.max_length_enumerated = doc.at("max_len").get<int>();
    cat.complete = doc.at("complete").get<bool>();
    cat.nodes = doc.at("nodes").get<std::uint64_t>();
    auto dense = shared_dense(cat.group);
    for (const auto& entry : doc.at("atoms")) {
      std::vector<int> atom;
      for (const auto& r : entry) {
        GroupElement g{r.get<std::vector<std::int64_t>>()};
        if (!cat.group.contains(g)) throw InvalidArgument("atom catalog element outside its group");
        atom.push_back(dense->index(g));
      }
      cat.atoms.push_back(std::move(atom));
    }
    if (doc.contains("orbit_sizes")) cat.orbit_sizes = doc["orbit_sizes"].get<std::vector<std::int64_t>>();
    if (doc.at("count").get<std::size_t>() != cat.atoms.size()) {
      throw InvalidArgument("atom catalog count does not match its contents");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed atom catalog: ") + e.what());
  }
  cat.from_cache = true;
  return cat;
}

AtomCatalog enumerate_atoms(const FiniteAbelianGroup& group, int max_len, const AtomOptions& options) {
  if (group.order() > options.max_group_order) {
    throw ResourceLimitError("atom enumeration for " + group.key() + " exceeds the group order bound " +
                             std::to_string(options.max_group_order));
  }
  const int len = effective_max_len(group, max_len);
  std::filesystem::path file;
  if (!options.cache_dir.empty()) {
    file = options.cache_dir / catalog_file_name(group, len, options.symmetry);
    std::ifstream in(file);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      auto cat = parse_catalog(buf.str());
      if (cat.group == group && cat.max_length_enumerated == len) return cat;
    }
  }
  auto cat = enumerate_uncached(group, len, options);
  if (options.symmetry) reduce_by_symmetry(cat);
  if (!file.empty()) {
    std::filesystem::create_directories(options.cache_dir);
    auto tmp = file;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream out(tmp, std::ios::binary);
      out << serialize_catalog(cat);
    }
    std::filesystem::rename(tmp, file);
  }
  return cat;
}

ZeroSumFreeMax max_zero_sum_free_cross(const AtomCatalog& catalog) {
  if (!catalog.complete) throw IncompleteCatalogError("atom catalog for " + catalog.group.key() + " is incomplete");
  // Automorphisms preserve element orders, so orbit representatives suffice.
  ZeroSumFreeMax best{Rational(0), IndexedMultiset(catalog.group)};
  if (catalog.atoms.empty()) return best;
  auto dense = shared_dense(catalog.group);
  const std::int64_t e = catalog.group.exponent();
  std::int64_t best_units = -1;
  std::size_t best_atom = 0;
  int best_drop = 0;
  for (std::size_t i = 0; i < catalog.atoms.size(); ++i) {
    const auto& a = catalog.atoms[i];
    std::int64_t units = 0;
    std::int64_t smallest = e;
    int drop = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      std::int64_t u = e / dense->order_of(a[j]);
      units += u;
      if (u < smallest) {
        smallest = u;
        drop = static_cast<int>(j);
      }
    }
    if (units - smallest > best_units) {
      best_units = units - smallest;
      best_atom = i;
      best_drop = drop;
    }
  }
  IndexedMultiset w(catalog.group);
  const auto& a = catalog.atoms[best_atom];
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (static_cast<int>(j) != best_drop) w.push_back(dense->element(a[j]));
  }
  return {Rational(best_units, e), std::move(w)};
}

std::vector<std::vector<int>> automorphisms(const FiniteAbelianGroup& group, std::uint64_t max_candidates) {
  auto dense = shared_dense(group);
  const int n = dense->size();
  const auto& factors = group.invariant_factors();
  std::vector<std::vector<int>> cands(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j) {
    for (int x = 0; x < n; ++x) {
      if (dense->order_of(x) == factors[j]) cands[j].push_back(x);
    }
  }
  std::vector<std::vector<int>> out;
  std::uint64_t tried = 0;
  // span[i] is the image of the i-th element of the subgroup generated by the
  // first j generators, numbered mixed-radix like the dense indices.
  auto rec = [&](auto&& self, std::size_t j, const std::vector<int>& span) -> void {
    if (j == factors.size()) {
      out.push_back(span);
      return;
    }
    const int nj = static_cast<int>(factors[j]);
    for (int h : cands[j]) {
      if (++tried > max_candidates) {
        throw ResourceLimitError("automorphism search for " + group.key() + " exceeds its candidate budget");
      }
      std::vector<int> next(span.size() * static_cast<std::size_t>(nj));
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      bool injective = true;
      for (std::size_t s = 0; s < span.size() && injective; ++s) {
        int acc = span[s];
        for (int t = 0; t < nj; ++t) {
          if (seen[acc]) {
            injective = false;
            break;
          }
          seen[acc] = 1;
          next[s * nj + t] = acc;
          acc = dense->add(acc, h);
        }
      }
      if (injective) self(self, j + 1, next);
    }
  };
  rec(rec, 0, std::vector<int>{0});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zsum
