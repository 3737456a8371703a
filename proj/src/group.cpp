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

#include "zsum/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <ostream>

#include "zsum/errors.hpp"

namespace zsum {
namespace {

std::int64_t parse_positive(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidArgument("malformed group spec token '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Extended Euclid: returns x with a*x = 1 (mod m), gcd(a, m) = 1 assumed.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod(old_s, m);
}

// Chinese remaindering over pairwise coprime moduli.
std::int64_t crt(std::span<const std::int64_t> residues, std::span<const std::int64_t> moduli) {
  std::int64_t x = 0, m = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    std::int64_t mi = moduli[i];
    std::int64_t t = mod(residues[i] - x, mi);
    t = static_cast<std::int64_t>(static_cast<__int128>(t) * inverse_mod(m % mi, mi) % mi);
    x += m * t;
    m *= mi;
    x = mod(x, m);
  }
  return x;
}

void partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimeFactor> factorize(std::int64_t n) {
  if (n < 1) throw InvalidArgument("factorize: n must be positive");
  std::vector<PrimeFactor> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

PrimeStats prime_stats(std::int64_t n) {
  if (n < 2) throw InvalidArgument("prime_stats: n must be >= 2, got " + std::to_string(n));
  auto f = factorize(n);
  return {f.front().prime, f.back().prime, static_cast<int>(f.size())};
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= bound; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::int64_t ipow(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  os << '[';
  for (std::size_t i = 0; i < g.residues.size(); ++i) {
    if (i) os << ',';
    os << g.residues[i];
  }
  return os << ']';
}

// ---------------------------------------------------------------------------

FiniteAbelianGroup FiniteAbelianGroup::from_moduli(std::span<const std::int64_t> moduli) {
  std::map<std::int64_t, std::vector<int>> by_prime;
  for (std::int64_t m : moduli) {
    if (m < 2) throw InvalidArgument("invalid modulus " + std::to_string(m) + " (must be >= 2)");
    for (const auto& f : factorize(m)) by_prime[f.prime].push_back(f.exponent);
  }
  FiniteAbelianGroup g;
  std::size_t r = 0;
  for (auto& [p, exps] : by_prime) r = std::max(r, exps.size());
  g.factors_.assign(r, 1);
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.rbegin(), exps.rend());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      int idx = static_cast<int>(r - 1 - i);
      g.factors_[idx] *= ipow(p, exps[i]);
      g.primary_.push_back({p, exps[i], idx});
    }
  }
  std::sort(g.primary_.begin(), g.primary_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.prime, a.exponent, a.factor_index) < std::tie(b.prime, b.exponent, b.factor_index);
  });
  g.order_ = 1;
  for (auto n : g.factors_) g.order_ *= n;
  return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_moduli(std::initializer_list<std::int64_t> moduli) {
  return from_moduli(std::span<const std::int64_t>(moduli.begin(), moduli.size()));
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::int64_t n) {
  if (n == 1) return trivial();
  return from_moduli({n});
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view spec) {
  spec = trim(spec);
  if (spec == "trivial" || spec == "1") return trivial();
  if (spec.empty()) throw InvalidArgument("empty group spec");
  std::vector<std::int64_t> moduli;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find_first_of(",x", start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view tok = trim(spec.substr(start, end - start));
    auto caret = tok.find('^');
    if (caret == std::string_view::npos) {
      moduli.push_back(parse_positive(tok));
    } else {
      std::int64_t p = parse_positive(trim(tok.substr(0, caret)));
      std::int64_t e = parse_positive(trim(tok.substr(caret + 1)));
      if (e < 1 || e > 62) throw InvalidArgument("bad exponent in '" + std::string(tok) + "'");
      moduli.push_back(ipow(p, static_cast<int>(e)));
    }
    start = end + 1;
  }
  return from_moduli(moduli);
}

std::string FiniteAbelianGroup::key() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(factors_[i]);
  }
  return s;
}

GroupElement FiniteAbelianGroup::zero() const { return {std::vector<std::int64_t>(factors_.size(), 0)}; }

bool FiniteAbelianGroup::contains(const GroupElement& g) const {
  if (g.residues.size() != factors_.size()) return false;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (g.residues[j] < 0 || g.residues[j] >= factors_[j]) return false;
  }
  return true;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = zero();
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    out.residues[j] = (a.residues[j] + b.residues[j]) % factors_[j];
  }
  return out;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  GroupElement out = zero();
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    out.residues[j] = (factors_[j] - a.residues[j]) % factors_[j];
  }
  return out;
}

GroupElement FiniteAbelianGroup::scale(std::int64_t k, const GroupElement& a) const {
  GroupElement out = zero();
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    out.residues[j] = static_cast<std::int64_t>(
        mod(static_cast<std::int64_t>(static_cast<__int128>(mod(k, factors_[j])) * a.residues[j] % factors_[j]),
            factors_[j]));
  }
  return out;
}

GroupElement FiniteAbelianGroup::basis(int j) const {
  GroupElement e = zero();
  e.residues.at(j) = 1;
  return e;
}

GroupElement FiniteAbelianGroup::element(std::vector<std::int64_t> residues) const {
  if (residues.size() != factors_.size()) {
    throw InvalidArgument("element has " + std::to_string(residues.size()) + " coordinates, group " + key() +
                          " has rank " + std::to_string(factors_.size()));
  }
  for (std::size_t j = 0; j < factors_.size(); ++j) residues[j] = mod(residues[j], factors_[j]);
  return {std::move(residues)};
}

std::int64_t FiniteAbelianGroup::element_order(const GroupElement& g) const {
  std::int64_t l = 1;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    std::int64_t n = factors_[j];
    l = std::lcm(l, n / std::gcd(n, g.residues[j]));
  }
  return l;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  GroupElement g = zero();
  for (std::int64_t i = 0; i < order_; ++i) {
    out.push_back(g);
    for (int j = rank() - 1; j >= 0; --j) {
      if (++g.residues[j] < factors_[j]) break;
      g.residues[j] = 0;
    }
  }
  return out;
}

std::vector<std::int64_t> FiniteAbelianGroup::to_primary(const GroupElement& g) const {
  std::vector<std::int64_t> out;
  out.reserve(primary_.size());
  for (const auto& c : primary_) out.push_back(g.residues[c.factor_index] % c.modulus());
  return out;
}

GroupElement FiniteAbelianGroup::from_primary(std::span<const std::int64_t> coords) const {
  GroupElement out = zero();
  for (int k = 0; k < rank(); ++k) {
    std::vector<std::int64_t> res, mods;
    for (std::size_t c = 0; c < primary_.size(); ++c) {
      if (primary_[c].factor_index != k) continue;
      res.push_back(coords[c]);
      mods.push_back(primary_[c].modulus());
    }
    out.residues[k] = crt(res, mods);
  }
  return out;
}

std::int64_t element_order(const FiniteAbelianGroup& group, const GroupElement& g) {
  return group.element_order(g);
}

std::vector<FiniteAbelianGroup> all_groups_of_order(std::int64_t n) {
  if (n < 1) throw InvalidArgument("group order must be positive");
  if (n == 1) return {FiniteAbelianGroup::trivial()};
  std::vector<std::vector<std::int64_t>> choices{{}};
  for (const auto& f : factorize(n)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(f.exponent, f.exponent, cur, parts);
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& prefix : choices) {
      for (const auto& part : parts) {
        auto m = prefix;
        for (int e : part) m.push_back(ipow(f.prime, e));
        next.push_back(std::move(m));
      }
    }
    choices = std::move(next);
  }
  std::vector<FiniteAbelianGroup> out;
  for (const auto& m : choices) out.push_back(FiniteAbelianGroup::from_moduli(m));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.invariant_factors() < b.invariant_factors();
  });
  return out;
}

std::vector<std::int64_t> order_statistics(const FiniteAbelianGroup& group) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(group.exponent()) + 1, 0);
  for (const auto& g : group.elements()) ++counts[group.element_order(g)];
  return counts;
}

FiniteAbelianGroup structure_of_subgroup(const FiniteAbelianGroup& ambient, std::span<const GroupElement> subgroup) {
  std::int64_t n = static_cast<std::int64_t>(subgroup.size());
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& g : subgroup) {
    std::int64_t o = ambient.element_order(g);
    if (o > n) throw InvalidArgument("element list is not a subgroup");
    ++counts[o];
  }
  for (auto& candidate : all_groups_of_order(n)) {
    auto stats = order_statistics(candidate);
    stats.resize(counts.size(), 0);
    if (stats == counts) return candidate;
  }
  throw InvalidArgument("element list is not a subgroup of " + ambient.key());
}

// ---------------------------------------------------------------------------

GroupPresentation::GroupPresentation(std::vector<std::int64_t> moduli)
    : moduli_(std::move(moduli)), group_(FiniteAbelianGroup::from_moduli(moduli_)) {
  const auto& comps = group_.primary_components();
  std::vector<bool> used(comps.size(), false);
  for (std::int64_t m : moduli_) {
    std::vector<int> slots;
    for (const auto& f : factorize(m)) {
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if (!used[c] && comps[c].prime == f.prime && comps[c].exponent == f.exponent) {
          used[c] = true;
          slots.push_back(static_cast<int>(c));
          break;
        }
      }
    }
    slots_.push_back(std::move(slots));
  }
}

GroupElement GroupPresentation::normalize(std::span<const std::int64_t> raw) const {
  if (raw.size() != moduli_.size()) throw InvalidArgument("raw element has wrong number of coordinates");
  const auto& comps = group_.primary_components();
  std::vector<std::int64_t> coords(comps.size(), 0);
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    for (int s : slots_[i]) coords[s] = mod(raw[i], comps[s].modulus());
  }
  return group_.from_primary(coords);
}

std::vector<std::int64_t> GroupPresentation::raw(const GroupElement& g) const {
  const auto& comps = group_.primary_components();
  auto coords = group_.to_primary(g);
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::vector<std::int64_t> res, mods;
    for (int s : slots_[i]) {
      res.push_back(coords[s]);
      mods.push_back(comps[s].modulus());
    }
    out.push_back(crt(res, mods));
  }
  return out;
}

// ---------------------------------------------------------------------------

DenseGroup::DenseGroup(const FiniteAbelianGroup& group) : group_(group) {
  if (group.order() > kMaxOrder) {
    throw ResourceLimitError("group " + group.key() + " too large for dense indexing");
  }
  size_ = static_cast<int>(group.order());
  rank_ = group.rank();
  const auto& n = group.invariant_factors();
  radix_.assign(rank_, 1);
  for (int j = rank_ - 2; j >= 0; --j) radix_[j] = radix_[j + 1] * static_cast<int>(n[j + 1]);
  residues_.reserve(static_cast<std::size_t>(size_) * rank_);
  neg_.resize(size_);
  orders_.resize(size_);
  int idx = 0;
  for (const auto& g : group.elements()) {
    for (auto r : g.residues) residues_.push_back(static_cast<int>(r));
    orders_[idx] = group.element_order(g);
    ++idx;
  }
  for (int a = 0; a < size_; ++a) {
    int out = 0;
    for (int j = 0; j < rank_; ++j) {
      int m = static_cast<int>(n[j]);
      out += ((m - residues_[a * rank_ + j]) % m) * radix_[j];
    }
    neg_[a] = out;
  }
  if (size_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(size_) * size_);
    for (int a = 0; a < size_; ++a) {
      for (int b = 0; b < size_; ++b) add_table_[static_cast<std::size_t>(a) * size_ + b] = add_slow(a, b);
    }
  }
}

int DenseGroup::add_slow(int a, int b) const {
  const auto& n = group_.invariant_factors();
  int out = 0;
  for (int j = 0; j < rank_; ++j) {
    int m = static_cast<int>(n[j]);
    out += ((residues_[a * rank_ + j] + residues_[b * rank_ + j]) % m) * radix_[j];
  }
  return out;
}

int DenseGroup::index(const GroupElement& g) const {
  if (!group_.contains(g)) throw InvalidArgument("element does not belong to group " + group_.key());
  int out = 0;
  for (int j = 0; j < rank_; ++j) out += static_cast<int>(g.residues[j]) * radix_[j];
  return out;
}

GroupElement DenseGroup::element(int index) const {
  GroupElement g;
  g.residues.resize(rank_);
  for (int j = 0; j < rank_; ++j) g.residues[j] = residues_[index * rank_ + j];
  return g;
}

}  // namespace zsum
