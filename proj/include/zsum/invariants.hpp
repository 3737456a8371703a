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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "zsum/atoms.hpp"
#include "zsum/group.hpp"
#include "zsum/multiset.hpp"
#include "zsum/rational.hpp"
#include "zsum/search.hpp"

namespace zsum {

enum class Invariant { kD, kN1, kBigK, kLittleK, kK1, kDStar, kN1Star, kBigKStar, kLittleKStar, kK1Star };

// "D", "N1", "K", "k", "K1", "Dstar", "N1star", "Kstar", "kstar", "K1star".
std::string invariant_name(Invariant inv);
// Throws InvalidArgument on an unknown name.
Invariant parse_invariant(std::string_view name);
bool is_formula(Invariant inv);

enum class Provenance { kComputed, kCached, kFormula };
std::string provenance_name(Provenance p);

struct InvariantResult {
  FiniteAbelianGroup group;
  Invariant invariant = Invariant::kD;
  Rational value;
  std::optional<IndexedMultiset> witness;
  SearchStats stats;
  std::int64_t millis = 0;
  Provenance provenance = Provenance::kComputed;
  // False when a search ran out of budget; value is then the best lower
  // bound found.
  bool complete = true;
};

inline constexpr int kReportVersion = 1;

// Versioned structured report: {version, group_key, invariant, value,
// witness, stats{nodes, prunes, millis}, provenance, complete}, keys
// sorted, one line.
std::string report_json(const InvariantResult& r);
InvariantResult parse_report(const std::string& text);

struct EngineConfig {
  int workers = 1;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  std::int64_t max_search_order = 16;  // K1 and N1
  std::int64_t max_atom_order = 64;    // D, K, k
  std::size_t max_atom_entries = 5'000'000;
  std::filesystem::path cache_dir;     // empty: memory only
  bool record_timing = true;
};

// Computes invariants with a per-engine memory cache (and an optional disk
// cache). Safe to call from several threads.
class InvariantEngine {
 public:
  explicit InvariantEngine(EngineConfig config = {});

  const EngineConfig& config() const { return config_; }

  InvariantResult compute(const FiniteAbelianGroup& group, Invariant inv);
  // Value of a complete computation; throws ResourceLimitError otherwise.
  Rational value(const FiniteAbelianGroup& group, Invariant inv);

  InvariantResult davenport(const FiniteAbelianGroup& g) { return compute(g, Invariant::kD); }
  InvariantResult big_cross_K(const FiniteAbelianGroup& g) { return compute(g, Invariant::kBigK); }
  InvariantResult little_cross_k(const FiniteAbelianGroup& g) { return compute(g, Invariant::kLittleK); }
  InvariantResult narkiewicz_n1(const FiniteAbelianGroup& g) { return compute(g, Invariant::kN1); }
  InvariantResult k1(const FiniteAbelianGroup& g) { return compute(g, Invariant::kK1); }

  // Complete atom catalog (cached).
  std::shared_ptr<const AtomCatalog> catalog(const FiniteAbelianGroup& group);

  // Every UFIM of maximal cross number (sorted dense element lists).
  SearchResult k1_all_maximizers(const FiniteAbelianGroup& group);

 private:
  InvariantResult compute_uncached(const FiniteAbelianGroup& group, Invariant inv);
  InvariantResult formula(const FiniteAbelianGroup& group, Invariant inv) const;
  InvariantResult from_catalog(const FiniteAbelianGroup& group, Invariant inv);
  InvariantResult from_search(const FiniteAbelianGroup& group, Invariant inv);
  std::filesystem::path result_path(const FiniteAbelianGroup& group, Invariant inv) const;

  EngineConfig config_;
  std::shared_mutex mu_;
  std::map<std::string, InvariantResult> results_;
  std::map<std::string, std::shared_ptr<const AtomCatalog>> catalogs_;
};

}  // namespace zsum
