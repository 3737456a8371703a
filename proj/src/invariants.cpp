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

#include "zsum/invariants.hpp"

#include <array>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "zsum/constructions.hpp"
#include "zsum/element_set.hpp"
#include "zsum/errors.hpp"
#include "zsum/formulas.hpp"

namespace zsum {
namespace {

constexpr std::array<std::pair<Invariant, std::string_view>, 10> kNames{{
    {Invariant::kD, "D"},
    {Invariant::kN1, "N1"},
    {Invariant::kBigK, "K"},
    {Invariant::kLittleK, "k"},
    {Invariant::kK1, "K1"},
    {Invariant::kDStar, "Dstar"},
    {Invariant::kN1Star, "N1star"},
    {Invariant::kBigKStar, "Kstar"},
    {Invariant::kLittleKStar, "kstar"},
    {Invariant::kK1Star, "K1star"},
}};

nlohmann::json residues_json(const std::vector<GroupElement>& elements) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : elements) out.push_back(g.residues);
  return out;
}

IndexedMultiset from_dense(const FiniteAbelianGroup& group, const std::vector<int>& indices) {
  auto dense = shared_dense(group);
  IndexedMultiset s(group);
  for (int x : indices) s.push_back(dense->element(x));
  return s;
}

}  // namespace

std::string invariant_name(Invariant inv) {
  for (const auto& [i, n] : kNames) {
    if (i == inv) return std::string(n);
  }
  throw std::logic_error("unnamed invariant");
}

Invariant parse_invariant(std::string_view name) {
  for (const auto& [i, n] : kNames) {
    if (n == name) return i;
  }
  throw InvalidArgument("unknown invariant '" + std::string(name) + "'");
}

bool is_formula(Invariant inv) {
  switch (inv) {
    case Invariant::kDStar:
    case Invariant::kN1Star:
    case Invariant::kBigKStar:
    case Invariant::kLittleKStar:
    case Invariant::kK1Star:
      return true;
    default:
      return false;
  }
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kComputed:
      return "computed";
    case Provenance::kCached:
      return "cached";
    case Provenance::kFormula:
      return "formula";
  }
  return "computed";
}

std::string report_json(const InvariantResult& r) {
  nlohmann::json prunes = nlohmann::json::object();
  for (const auto& [k, v] : r.stats.prunes) prunes[k] = v;
  nlohmann::json doc = {
      {"version", kReportVersion},
      {"group_key", r.group.key()},
      {"invariant", invariant_name(r.invariant)},
      {"value", r.value.to_string()},
      {"witness", r.witness ? residues_json(r.witness->canonical()) : nlohmann::json(nullptr)},
      {"stats", {{"nodes", r.stats.nodes}, {"prunes", prunes}, {"millis", r.millis}}},
      {"provenance", provenance_name(r.provenance)},
      {"complete", r.complete},
  };
  return doc.dump();
}

InvariantResult parse_report(const std::string& text) {
  InvariantResult r;
  try {
    auto doc = nlohmann::json::parse(text);
    if (doc.at("version").get<int>() != kReportVersion) throw InvalidArgument("unsupported report version");
    r.group = FiniteAbelianGroup::parse(doc.at("group_key").get<std::string>());
    r.invariant = parse_invariant(doc.at("invariant").get<std::string>());
    r.value = Rational::parse(doc.at("value").get<std::string>());
    if (!doc.at("witness").is_null()) {
      r.witness = IndexedMultiset::from_residues(r.group, doc["witness"].get<std::vector<std::vector<std::int64_t>>>());
    }
    const auto& stats = doc.at("stats");
    r.stats.nodes = stats.at("nodes").get<std::uint64_t>();
    for (const auto& [k, v] : stats.at("prunes").items()) r.stats.prunes[k] = v.get<std::uint64_t>();
    r.millis = stats.at("millis").get<std::int64_t>();
    auto prov = doc.at("provenance").get<std::string>();
    r.provenance = prov == "formula" ? Provenance::kFormula
                   : prov == "cached" ? Provenance::kCached
                                      : Provenance::kComputed;
    r.complete = doc.at("complete").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
  return r;
}

InvariantEngine::InvariantEngine(EngineConfig config) : config_(std::move(config)) {}

Rational InvariantEngine::value(const FiniteAbelianGroup& group, Invariant inv) {
  auto r = compute(group, inv);
  if (!r.complete) {
    throw ResourceLimitError(invariant_name(inv) + "(" + group.key() + ") did not finish within budget");
  }
  return r.value;
}

std::filesystem::path InvariantEngine::result_path(const FiniteAbelianGroup& group, Invariant inv) const {
  return config_.cache_dir /
         ("result-v" + std::to_string(kReportVersion) + "-" + group.key() + "-" + invariant_name(inv) + ".json");
}

InvariantResult InvariantEngine::compute(const FiniteAbelianGroup& group, Invariant inv) {
  if (is_formula(inv)) return formula(group, inv);
  const std::string key = group.key() + "|" + invariant_name(inv);
  {
    std::shared_lock lock(mu_);
    if (auto it = results_.find(key); it != results_.end()) {
      auto r = it->second;
      r.provenance = Provenance::kCached;
      return r;
    }
  }
  if (!config_.cache_dir.empty()) {
    std::ifstream in(result_path(group, inv));
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      auto text = buf.str();
      while (!text.empty() && text.back() == '\n') text.pop_back();
      auto r = parse_report(text);
      if (r.group == group && r.invariant == inv && r.complete) {
        std::unique_lock lock(mu_);
        results_.emplace(key, r);
        r.provenance = Provenance::kCached;
        return r;
      }
    }
  }
  auto start = std::chrono::steady_clock::now();
  auto r = compute_uncached(group, inv);
  if (config_.record_timing) {
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  if (!r.complete) return r;
  {
    std::unique_lock lock(mu_);
    auto [it, inserted] = results_.emplace(key, r);
    if (!inserted) return it->second;
  }
  if (!config_.cache_dir.empty()) {
    std::filesystem::create_directories(config_.cache_dir);
    auto file = result_path(group, inv);
    auto tmp = file;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream out(tmp, std::ios::binary);
      out << report_json(r) << '\n';
    }
    std::filesystem::rename(tmp, file);
  }
  return r;
}

InvariantResult InvariantEngine::compute_uncached(const FiniteAbelianGroup& group, Invariant inv) {
  switch (inv) {
    case Invariant::kD:
    case Invariant::kBigK:
    case Invariant::kLittleK:
      return from_catalog(group, inv);
    case Invariant::kK1:
    case Invariant::kN1:
      return from_search(group, inv);
    default:
      return formula(group, inv);
  }
}

InvariantResult InvariantEngine::formula(const FiniteAbelianGroup& group, Invariant inv) const {
  InvariantResult r;
  r.group = group;
  r.invariant = inv;
  r.provenance = Provenance::kFormula;
  switch (inv) {
    case Invariant::kDStar:
      r.value = Rational(d_star(group));
      break;
    case Invariant::kN1Star:
      r.value = Rational(n1_star(group));
      break;
    case Invariant::kBigKStar:
      r.value = big_K_star(group);
      break;
    case Invariant::kLittleKStar:
      r.value = little_k_star(group);
      r.witness = extremal_zero_sum_free(group);
      break;
    case Invariant::kK1Star:
      r.value = k1_star(group);
      r.witness = k1_star_witness(group);
      break;
    default:
      throw std::logic_error("not a formula invariant");
  }
  return r;
}

std::shared_ptr<const AtomCatalog> InvariantEngine::catalog(const FiniteAbelianGroup& group) {
  {
    std::shared_lock lock(mu_);
    if (auto it = catalogs_.find(group.key()); it != catalogs_.end()) return it->second;
  }
  if (group.order() > config_.max_atom_order) {
    throw ResourceLimitError(group.key() + " exceeds the atom search bound |G| <= " +
                             std::to_string(config_.max_atom_order));
  }
  AtomOptions opts;
  opts.max_entries = config_.max_atom_entries;
  opts.max_group_order = config_.max_atom_order;
  opts.workers = config_.workers;
  opts.cache_dir = config_.cache_dir;
  auto cat = std::make_shared<const AtomCatalog>(enumerate_atoms(group, 0, opts));
  std::unique_lock lock(mu_);
  return catalogs_.emplace(group.key(), cat).first->second;
}

InvariantResult InvariantEngine::from_catalog(const FiniteAbelianGroup& group, Invariant inv) {
  InvariantResult r;
  r.group = group;
  r.invariant = inv;
  auto cat = catalog(group);
  r.stats.nodes = cat->nodes;
  if (inv == Invariant::kLittleK) {
    auto best = max_zero_sum_free_cross(*cat);
    r.value = best.value;
    r.witness = best.witness;
    return r;
  }
  if (cat->atoms.empty()) {
    r.value = Rational(0);
    r.witness = IndexedMultiset(group);
    return r;
  }
  if (inv == Invariant::kD) {
    r.value = Rational(cat->max_length());
    auto first = std::find_if(cat->atoms.begin(), cat->atoms.end(),
                              [&](const auto& a) { return static_cast<int>(a.size()) == cat->max_length(); });
    r.witness = from_dense(group, *first);
    return r;
  }
  // Largest cross number; ties go to the lexicographically least atom.
  auto dense = shared_dense(group);
  const std::int64_t e = group.exponent();
  std::int64_t best = -1;
  const std::vector<int>* arg = nullptr;
  for (const auto& a : cat->atoms) {
    std::int64_t units = 0;
    for (int x : a) units += e / dense->order_of(x);
    if (units > best || (units == best && a < *arg)) {
      best = units;
      arg = &a;
    }
  }
  r.value = Rational(best, e);
  r.witness = from_dense(group, *arg);
  return r;
}

InvariantResult InvariantEngine::from_search(const FiniteAbelianGroup& group, Invariant inv) {
  InvariantResult r;
  r.group = group;
  r.invariant = inv;
  if (group.is_trivial()) {
    r.value = Rational(0);
    r.witness = IndexedMultiset(group);
    return r;
  }
  if (group.order() > config_.max_search_order) {
    throw ResourceLimitError(group.key() + " exceeds the UFIM search bound |G| <= " +
                             std::to_string(config_.max_search_order));
  }
  auto cat = catalog(group);
  auto dense = shared_dense(group);
  Incumbent floor;
  IndexedMultiset start(group);
  Measure measure = Measure::kCrossNumber;
  if (inv == Invariant::kK1) {
    start = k1_star_witness(group);
    floor.value = cross_number(start);
  } else {
    measure = Measure::kSize;
    // n_i copies of each invariant-factor generator.
    for (int j = 0; j < group.rank(); ++j) {
      for (std::int64_t c = 0; c < group.invariant_factors()[j]; ++c) start.push_back(group.basis(j));
    }
    floor.value = Rational(static_cast<std::int64_t>(start.size()));
  }
  for (const auto& g : start.canonical()) floor.witness.push_back(dense->index(g));

  SearchOptions opts;
  opts.workers = config_.workers;
  opts.budget_nodes = config_.budget_nodes;
  opts.budget_seconds = config_.budget_seconds;
  auto res = maximize_ufim(*cat, measure, floor, opts);
  r.value = res.value;
  r.witness = from_dense(group, res.witness);
  r.stats = res.stats;
  r.complete = res.complete;
  return r;
}

SearchResult InvariantEngine::k1_all_maximizers(const FiniteAbelianGroup& group) {
  if (group.order() > config_.max_search_order) {
    throw ResourceLimitError(group.key() + " exceeds the UFIM search bound");
  }
  auto cat = catalog(group);
  auto dense = shared_dense(group);
  auto start = k1_star_witness(group);
  Incumbent floor{cross_number(start), {}};
  for (const auto& g : start.canonical()) floor.witness.push_back(dense->index(g));
  SearchOptions opts;
  opts.workers = config_.workers;
  opts.budget_nodes = config_.budget_nodes;
  opts.budget_seconds = config_.budget_seconds;
  opts.collect_all_maximizers = true;
  return maximize_ufim(*cat, Measure::kCrossNumber, floor, opts);
}

}  // namespace zsum
