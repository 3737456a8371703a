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

#include "zsum/families.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "zsum/bounds.hpp"
#include "zsum/constructions.hpp"
#include "zsum/element_set.hpp"
#include "zsum/errors.hpp"
#include "zsum/formulas.hpp"
#include "zsum/search.hpp"
#include "zsum/zerosum.hpp"

namespace zsum {
namespace {

using Components = std::vector<std::pair<std::int64_t, int>>;

Components components(const FiniteAbelianGroup& g) {
  Components out;
  for (const auto& c : g.primary_components()) out.emplace_back(c.prime, c.exponent);
  return out;
}

bool all_equal_to(const Components& c, std::int64_t p, int e) {
  return !c.empty() && std::all_of(c.begin(), c.end(), [&](const auto& x) { return x == std::pair{p, e}; });
}

bool in_gaowang_family(const FiniteAbelianGroup& g) {
  auto c = components(g);
  if (c.size() == 1) return true;
  if (all_equal_to(c, 2, 1) || all_equal_to(c, 3, 1)) return true;
  if (c.size() == 2 && c[0].second == 1 && c[1].second == 1) return true;  // C_pq or C_p^2
  return false;
}

bool in_corollary_family(const FiniteAbelianGroup& g) {
  auto c = components(g);
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto rest = c;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    const std::int64_t p = c[i].first;
    if (rest.empty()) continue;
    if (all_equal_to(rest, 2, 1) || all_equal_to(rest, 3, 1)) return true;
    if (rest.size() == 1 && rest[0].second == 1) return true;  // + C_p or + C_q
    if (rest.size() == 2 && rest[0] == rest[1] && rest[0].second == 1 && rest[0].first != p) return true;
  }
  return false;
}

bool in_n1_family(const FiniteAbelianGroup& g) {
  auto c = components(g);
  if (g.rank() == 1) return true;
  if (all_equal_to(c, 2, 1) || all_equal_to(c, 3, 1)) return true;
  return c.size() == 2 && c[0] == c[1] && c[0].second == 1;
}

std::vector<FiniteAbelianGroup> groups_in_range(const FamilyGrid& grid) {
  std::vector<FiniteAbelianGroup> out;
  for (std::int64_t n = std::max<std::int64_t>(grid.min_order, 2); n <= grid.max_order; ++n) {
    for (auto& g : all_groups_of_order(n)) out.push_back(std::move(g));
  }
  return out;
}

template <typename T>
std::vector<T> or_default(const std::vector<T>& v, std::vector<T> fallback) {
  return v.empty() ? fallback : v;
}

std::string render(const LogExpr& e) {
  if (e.is_rational()) return e.constant().to_short_string();
  std::ostringstream os;
  os << e.to_string() << " ~ " << std::setprecision(6) << e.approx();
  return os.str();
}

std::string render(const Rational& r) { return r.to_short_string(); }

FiniteAbelianGroup power_sum(std::int64_t p, int m, std::int64_t q, std::int64_t n) {
  std::vector<std::int64_t> moduli{ipow(p, m)};
  for (std::int64_t i = 0; i < n; ++i) moduli.push_back(q);
  return FiniteAbelianGroup::from_moduli(moduli);
}

FiniteAbelianGroup elementary(std::int64_t p, std::int64_t n) {
  return FiniteAbelianGroup::from_moduli(std::vector<std::int64_t>(static_cast<std::size_t>(n), p));
}

class Builder {
 public:
  explicit Builder(std::string theorem) { report_.theorem = std::move(theorem); }

  // Runs one instance; budget and size limits turn it into a skip.
  void add(std::string params, std::string relation, const std::function<void(FamilyInstance&)>& body) {
    FamilyInstance inst;
    inst.params = std::move(params);
    inst.relation = std::move(relation);
    try {
      body(inst);
    } catch (const ResourceLimitError& e) {
      inst.status = InstanceStatus::kSkipped;
      inst.note = e.what();
    } catch (const NotApplicableError& e) {
      inst.status = InstanceStatus::kSkipped;
      inst.note = e.what();
    }
    report_.instances.push_back(std::move(inst));
  }

  FamilyReport take() { return std::move(report_); }

 private:
  FamilyReport report_;
};

void compare(FamilyInstance& inst, const Rational& lhs, const Rational& rhs, bool equality) {
  inst.lhs = render(lhs);
  inst.rhs = render(rhs);
  bool ok = equality ? lhs == rhs : lhs <= rhs;
  inst.status = ok ? InstanceStatus::kPass : InstanceStatus::kFail;
}

void compare(FamilyInstance& inst, const LogExpr& lhs, const LogExpr& rhs) {
  inst.lhs = render(lhs);
  inst.rhs = render(rhs);
  inst.status = certified_le(lhs, rhs) ? InstanceStatus::kPass : InstanceStatus::kFail;
}

void k1_equals_star(Builder& b, InvariantEngine& engine, const std::vector<FiniteAbelianGroup>& groups,
                    bool (*member)(const FiniteAbelianGroup&)) {
  for (const auto& g : groups) {
    if (!member(g)) continue;
    b.add("G=" + g.key(), "K1(G) = K1*(G)",
          [&](FamilyInstance& inst) { compare(inst, engine.value(g, Invariant::kK1), k1_star(g), true); });
  }
}

FamilyReport gaowang(InvariantEngine& engine, const FamilyGrid& grid) {
  Builder b("gaowang");
  k1_equals_star(b, engine, groups_in_range(grid), in_gaowang_family);
  return b.take();
}

FamilyReport corollary(InvariantEngine& engine, const FamilyGrid& grid) {
  Builder b("corollary");
  k1_equals_star(b, engine, groups_in_range(grid), in_corollary_family);
  return b.take();
}

FamilyReport n1(InvariantEngine& engine, const FamilyGrid& grid) {
  Builder b("n1");
  for (const auto& g : groups_in_range(grid)) {
    if (!in_n1_family(g)) continue;
    b.add("G=" + g.key(), "N1(G) = N1*(G)", [&](FamilyInstance& inst) {
      compare(inst, engine.value(g, Invariant::kN1), Rational(n1_star(g)), true);
    });
  }
  return b.take();
}

FamilyReport mainthm1(InvariantEngine& engine, const FamilyGrid& grid) {
  Builder b("mainthm1");
  for (auto p : or_default(grid.p, {2, 3})) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    for (auto m : or_default(grid.m, {1, 2, 3})) {
      for (auto n : or_default(grid.n, {1, 2})) {
        std::ostringstream params;
        params << "p=" << p << " m=" << m << " n=" << n;
        b.add(params.str(), "K1(C_p^m + C_p^n) <= K1(C_p^m) + K1(C_p^(n+1)) - 1", [&](FamilyInstance& inst) {
          auto g = power_sum(p, static_cast<int>(m), p, n);
          auto lhs = engine.value(g, Invariant::kK1);
          auto rhs = engine.value(FiniteAbelianGroup::cyclic(ipow(p, static_cast<int>(m))), Invariant::kK1) +
                     engine.value(elementary(p, n + 1), Invariant::kK1) - Rational(1);
          compare(inst, lhs, rhs, false);
        });
      }
    }
  }
  return b.take();
}

FamilyReport mainthm1_coprime(InvariantEngine& engine, const FamilyGrid& grid) {
  Builder b("mainthm1-coprime");
  for (auto p : or_default(grid.p, {2, 3})) {
    for (auto q : or_default(grid.q, {2, 3, 5})) {
      if (p == q) continue;
      if (!is_prime(p) || !is_prime(q)) throw InvalidArgument("p and q must be prime");
      for (auto m : or_default(grid.m, {1, 2})) {
        for (auto n : or_default(grid.n, {1, 2})) {
          std::ostringstream params;
          params << "p=" << p << " q=" << q << " m=" << m << " n=" << n;
          b.add(params.str(), "K1(C_p^m + C_q^n) <= K1(C_p^m) + K1(C_q^n)", [&](FamilyInstance& inst) {
            auto g = power_sum(p, static_cast<int>(m), q, n);
            auto lhs = engine.value(g, Invariant::kK1);
            auto rhs = engine.value(FiniteAbelianGroup::cyclic(ipow(p, static_cast<int>(m))), Invariant::kK1) +
                       engine.value(elementary(q, n), Invariant::kK1);
            compare(inst, lhs, rhs, false);
          });
        }
      }
    }
  }
  return b.take();
}

FamilyReport n1k1(InvariantEngine& engine, const FamilyGrid& grid) {
  Builder b("n1k1");
  for (auto p : or_default(grid.p, {2, 3})) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    for (auto n : or_default(grid.n, {1, 2, 3, 4})) {
      std::ostringstream params;
      params << "p=" << p << " n=" << n;
      b.add(params.str(), "N1(C_p^n) = p K1(C_p^n)", [&](FamilyInstance& inst) {
        auto g = elementary(p, n);
        compare(inst, engine.value(g, Invariant::kN1), Rational(p) * engine.value(g, Invariant::kK1), true);
      });
    }
  }
  return b.take();
}

bool ufim_or_empty(const IndexedMultiset& s) {
  return s.empty() || (!s.contains_identity() && is_zero_sum(s) && is_ufim(s));
}

FamilyReport maximal_split_pq(InvariantEngine& engine, const FamilyGrid& grid) {
  Builder b("maximal-split-pq");
  auto pairs = grid.pq;
  if (pairs.empty()) {
    if (grid.p.empty() && grid.q.empty()) {
      pairs = {{2, 3}, {2, 5}, {3, 5}};
    } else {
      for (auto p : grid.p) {
        for (auto q : grid.q) {
          if (p != q) pairs.emplace_back(p, q);
        }
      }
    }
  }
  for (auto [p, q] : pairs) {
    if (!is_prime(p) || !is_prime(q) || p == q) throw InvalidArgument("pq needs two distinct primes");
    std::ostringstream params;
    params << "p=" << p << " q=" << q;
    b.add(params.str(), "maximizers with an order-pq element or a non-UFIM split = 0", [&](FamilyInstance& inst) {
      auto g = FiniteAbelianGroup::cyclic(p * q);
      auto res = engine.k1_all_maximizers(g);
      if (!res.complete) throw ResourceLimitError("maximizer search over " + g.key() + " ran out of budget");
      auto dense = shared_dense(g);
      std::int64_t bad = 0;
      for (const auto& w : res.maximizers) {
        IndexedMultiset sp(g), sq(g);
        bool cross = false;
        for (int x : w) {
          auto o = dense->order_of(x);
          if (o == p) {
            sp.push_back(dense->element(x));
          } else if (o == q) {
            sq.push_back(dense->element(x));
          } else {
            cross = true;
          }
        }
        if (cross || !ufim_or_empty(sp) || !ufim_or_empty(sq)) ++bad;
      }
      inst.lhs = std::to_string(bad);
      inst.rhs = "0";
      inst.note = std::to_string(res.maximizers.size()) + " maximizers, K1 = " + render(res.value);
      inst.status = bad == 0 ? InstanceStatus::kPass : InstanceStatus::kFail;
    });
  }
  return b.take();
}

FamilyReport roplus(InvariantEngine& engine, const FamilyGrid& grid) {
  Builder b("roplus");
  for (auto r : or_default(grid.r, {2, 3})) {
    if (r != 2 && r != 3) throw InvalidArgument("r must be 2 or 3");
    for (const auto& spec : or_default(grid.groups, {std::string("3"), std::string("5")})) {
      auto g = FiniteAbelianGroup::parse(spec);
      if (std::gcd(g.order(), r) != 1) continue;
      std::vector<std::int64_t> moduli{r};
      for (auto f : g.invariant_factors()) moduli.push_back(f);
      auto full = FiniteAbelianGroup::from_moduli(moduli);
      std::ostringstream params;
      params << "r=" << r << " G=" << g.key();
      b.add(params.str(), "UFIMs violating (k <= K1*(C_r+G) and t = 0) or m_r = 0", [&](FamilyInstance& inst) {
        if (engine.value(g, Invariant::kK1) != k1_star(g)) {
          throw NotApplicableError("K1(G) != K1*(G) for " + g.key());
        }
        if (full.order() > engine.config().max_search_order) {
          throw ResourceLimitError(full.key() + " exceeds the UFIM search bound");
        }
        auto cat = engine.catalog(full);
        auto dense = shared_dense(full);
        auto phi = Homomorphism::drop_primes(full, {r});
        const Rational star = k1_star(full);
        std::int64_t seen = 0, bad = 0;
        EnumerateOptions opts;
        opts.budget_nodes = engine.config().budget_nodes;
        bool finished = for_each_ufim(
            *cat,
            [&](const std::vector<std::size_t>& blocks) {
              ++seen;
              IndexedMultiset s(full);
              for (int x : union_of_atoms(*cat, blocks)) s.push_back(dense->element(x));
              std::int64_t m_r = 0;
              for (auto a : blocks) {
                const auto& atom = cat->atoms[a];
                if (std::all_of(atom.begin(), atom.end(), [&](int x) { return dense->order_of(x) == r; })) ++m_r;
              }
              auto d = construction4_decompose(s, phi);
              bool first = cross_number(s) <= star && d.t() == 0;
              if (!first && m_r != 0) ++bad;
              return true;
            },
            opts);
        if (!finished) throw ResourceLimitError("UFIM enumeration over " + full.key() + " ran out of budget");
        inst.lhs = std::to_string(bad);
        inst.rhs = "0";
        inst.note = std::to_string(seen) + " UFIMs checked";
        inst.status = bad == 0 ? InstanceStatus::kPass : InstanceStatus::kFail;
      });
    }
  }
  return b.take();
}

FamilyReport sandwich(InvariantEngine& engine, const FamilyGrid& grid) {
  Builder b("sandwich");
  for (const auto& g : groups_in_range(grid)) {
    const std::string params = "G=" + g.key();
    b.add(params, "k*(G) <= k(G)", [&](FamilyInstance& inst) {
      compare(inst, little_k_star(g), engine.value(g, Invariant::kLittleK), false);
    });
    b.add(params, "k(G) + 1/Exp(G) <= K(G)", [&](FamilyInstance& inst) {
      compare(inst, engine.value(g, Invariant::kLittleK) + Rational(1, g.exponent()),
              engine.value(g, Invariant::kBigK), false);
    });
    b.add(params, "K1*(G) <= K1(G)", [&](FamilyInstance& inst) {
      compare(inst, k1_star(g), engine.value(g, Invariant::kK1), false);
    });
    for (const auto& [name, relation] : {std::pair{"girard", "K1(G) <= 2 k(G)"},
                                         std::pair{"log", "K1(G) <= ln|G| + log2|G| / P-"}}) {
      b.add(params, relation, [&](FamilyInstance& inst) {
        auto bounds = upper_bounds(engine, g);
        compare(inst, LogExpr(engine.value(g, Invariant::kK1)), bounds.at(name));
      });
    }
    b.add(params, "K1(G) <= k(G) + E log2 P+ / P-", [&](FamilyInstance& inst) {
      auto bounds = upper_bounds(engine, g);
      compare(inst, LogExpr(engine.value(g, Invariant::kK1)), bounds.at("asymptote"));
    });
  }
  return b.take();
}

using Verifier = FamilyReport (*)(InvariantEngine&, const FamilyGrid&);

const std::vector<std::pair<std::string, Verifier>>& verifiers() {
  static const std::vector<std::pair<std::string, Verifier>> table{
      {"gaowang", gaowang},
      {"corollary", corollary},
      {"mainthm1", mainthm1},
      {"mainthm1-coprime", mainthm1_coprime},
      {"n1", n1},
      {"n1k1", n1k1},
      {"maximal-split-pq", maximal_split_pq},
      {"roplus", roplus},
      {"sandwich", sandwich},
  };
  return table;
}

}  // namespace

std::string status_name(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::kPass:
      return "pass";
    case InstanceStatus::kFail:
      return "fail";
    case InstanceStatus::kSkipped:
      return "skipped";
  }
  return "fail";
}

std::size_t FamilyReport::count(InstanceStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [&](const auto& i) { return i.status == s; }));
}

FamilyReport verify_family(InvariantEngine& engine, std::string_view theorem, const FamilyGrid& grid) {
  for (const auto& [id, fn] : verifiers()) {
    if (id == theorem) return fn(engine, grid);
  }
  throw InvalidArgument("unknown theorem id '" + std::string(theorem) + "'");
}

std::vector<std::string> family_theorems() {
  std::vector<std::string> out;
  for (const auto& [id, fn] : verifiers()) out.push_back(id);
  return out;
}

std::string family_report_json(const FamilyReport& report) {
  nlohmann::json instances = nlohmann::json::array();
  for (const auto& i : report.instances) {
    instances.push_back({{"params", i.params},
                         {"relation", i.relation},
                         {"lhs", i.lhs},
                         {"rhs", i.rhs},
                         {"status", status_name(i.status)},
                         {"note", i.note}});
  }
  nlohmann::json doc = {
      {"theorem", report.theorem},
      {"instances", instances},
      {"summary",
       {{"pass", report.count(InstanceStatus::kPass)},
        {"fail", report.count(InstanceStatus::kFail)},
        {"skipped", report.count(InstanceStatus::kSkipped)}}},
  };
  return doc.dump();
}

}  // namespace zsum
