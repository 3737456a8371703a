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

#include "zsum/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "zsum/errors.hpp"
#include "zsum/formulas.hpp"
#include "zsum/zerosum.hpp"

namespace zsum {
namespace {

struct Shape {
  std::vector<std::int64_t> primes;  // distinct, ascending
  int n1 = 0;                        // components at p1
  int max_e1 = 0;
  std::int64_t exponent_sum = 0;
};

Shape shape_of(const FiniteAbelianGroup& group) {
  Shape s;
  for (const auto& c : group.primary_components()) {
    if (s.primes.empty() || s.primes.back() != c.prime) s.primes.push_back(c.prime);
    if (c.prime == s.primes.front()) {
      ++s.n1;
      s.max_e1 = std::max(s.max_e1, c.exponent);
    }
    s.exponent_sum += c.exponent;
  }
  return s;
}

Rational rpow(const Rational& x, int e) {
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace

std::map<std::string, LogExpr> upper_bounds(InvariantEngine& engine, const FiniteAbelianGroup& group) {
  std::map<std::string, LogExpr> out;
  if (group.is_trivial()) {
    for (const char* name : {"log", "girard", "zsf_lower", "asymptote"}) out[name] = LogExpr();
    return out;
  }
  const auto stats = prime_stats(group.order());
  const Rational k = engine.value(group, Invariant::kLittleK);
  const Rational order(group.order());
  out["log"] = LogExpr::ln(order) + LogExpr::log2(order, Rational(1, stats.p_minus));
  out["girard"] = LogExpr(Rational(2) * k);
  out["zsf_lower"] = LogExpr(k + Rational(1, group.exponent()));
  out["asymptote"] =
      LogExpr(k) + LogExpr::log2(Rational(stats.p_plus), Rational(shape_of(group).exponent_sum, stats.p_minus));
  return out;
}

Rational quotient_bound(InvariantEngine& engine, const Homomorphism& phi) {
  const auto kernel = phi.kernel_structure();
  const auto quotient = phi.quotient_structure();
  // The bound trades |T| against |T| K(G/ker), which needs K(G/ker) >= 1.
  if (quotient.is_trivial() && !kernel.is_trivial()) {
    throw NotApplicableError("quotient bound needs a nontrivial image");
  }
  return engine.value(quotient, Invariant::kK1) +
         engine.value(kernel, Invariant::kN1) * engine.value(quotient, Invariant::kBigK);
}

Rational size_limit_threshold(const FiniteAbelianGroup& group) {
  Rational out(0);
  if (group.is_trivial()) return out;
  const std::int64_t p_minus = prime_stats(group.order()).p_minus;
  for (const auto& c : group.primary_components()) {
    out += Rational(p_minus, c.prime) * k1_star_cyclic_prime_power(c.prime, c.exponent);
  }
  return out;
}

SizeLimitCheck check_size_limit(InvariantEngine& engine, const IndexedMultiset& s) {
  const auto& group = s.group();
  if (engine.value(group, Invariant::kLittleK) != little_k_star(group)) {
    throw NotApplicableError("size limit needs k(G) = k*(G), which fails for " + group.key());
  }
  SizeLimitCheck out;
  out.blocks = s.empty() ? 0 : static_cast<std::int64_t>(unique_factorization(s).size());
  out.threshold = size_limit_threshold(group);
  out.vacuous = Rational(out.blocks) > out.threshold;
  out.holds = out.vacuous || cross_number(s) <= k1_star(group);
  return out;
}

LogExpr lowest_order_bound(InvariantEngine& engine, const FiniteAbelianGroup& group, std::int64_t m_p1) {
  if (group.is_trivial()) throw NotApplicableError("lowest-order bound is undefined on the trivial group");
  const auto sh = shape_of(group);
  const bool several = sh.primes.size() > 1;
  if (!several && sh.max_e1 == 1) {
    throw NotApplicableError("lowest-order bound excludes elementary p-groups such as " + group.key());
  }
  const std::int64_t p1 = sh.primes[0];
  std::int64_t d = 0;
  if (several && sh.max_e1 > 1) {
    d = std::min(p1 * p1, sh.primes[1]);
  } else if (several) {
    d = sh.primes[1];
  } else {
    d = p1 * p1;
  }
  const Rational k = engine.value(group, Invariant::kLittleK);
  return LogExpr(k + Rational(m_p1, p1) - Rational(m_p1, d)) +
         LogExpr::log2(Rational(group.order()), Rational(1, d));
}

std::int64_t m_p1_of(const IndexedMultiset& s) {
  if (s.empty()) return 0;
  const auto& group = s.group();
  const std::int64_t p1 = prime_stats(group.order()).p_minus;
  std::int64_t m = 0;
  for (const auto& block : unique_factorization(s).blocks) {
    bool low = std::all_of(block.labels.begin(), block.labels.end(),
                           [&](Label l) { return group.element_order(s.at(l)) == p1; });
    if (low) ++m;
  }
  return m;
}

bool pbound_hypothesis(InvariantEngine& engine, const FiniteAbelianGroup& group, const Rational& c, std::int64_t n) {
  if (group.is_trivial()) return false;
  auto member = family_membership(group, c, n);
  if (!member.omega_c || !member.s_n) return false;
  const auto sh = shape_of(group);
  if (sh.primes.size() > 1 && sh.primes[0] * sh.primes[0] >= sh.primes[1]) return false;
  if (sh.max_e1 <= 1) return false;
  const std::int64_t p1 = sh.primes[0];
  const LogExpr lhs = LogExpr::log2(c * Rational(p1), Rational(n, p1));
  if (!certified_le(lhs, LogExpr(k1_star(group) / c))) return false;
  return engine.value(group, Invariant::kLittleK) == little_k_star(group);
}

Rational pbound_value(const FiniteAbelianGroup& group, std::int64_t m_p1) {
  const std::int64_t p1 = prime_stats(group.order()).p_minus;
  return k1_star(group) + Rational(m_p1, p1) * (Rational(1) - Rational(1, p1));
}

ConstraintResult mainthm2_constraint(int r, const Rational& c, const FiniteAbelianGroup& group) {
  if (r != 2 && r != 3) throw InvalidArgument("r must be 2 or 3");
  if (c < Rational(1)) throw InvalidArgument("c must be at least 1");
  if (group.is_trivial()) throw NotApplicableError("constraint needs a nontrivial group");
  const auto sh = shape_of(group);
  const std::int64_t p1 = sh.primes.front();
  if (p1 <= r) throw NotApplicableError("every prime of " + group.key() + " must exceed r = " + std::to_string(r));
  const Rational cp1 = c * Rational(p1);
  if (sh.primes.size() > 1 && !(Rational(sh.primes.back()) < cp1)) {
    throw NotApplicableError("largest prime of " + group.key() + " is not below c * p1");
  }
  ConstraintResult out;
  out.lhs = Rational(1, r);
  std::int64_t e2 = 0;
  for (const auto& comp : group.primary_components()) {
    if (comp.prime == p1) {
      out.lhs += k1_star_cyclic_prime_power(p1, comp.exponent) / Rational(p1);
    } else {
      const Rational x = rpow(cp1, comp.exponent);
      out.lhs += (x - Rational(1)) / (x * cp1 - x);
      e2 += comp.exponent;
    }
  }
  const Rational inv_p1(1, p1);
  out.rhs = LogExpr::log2(Rational(r), inv_p1) + LogExpr::log2(c, Rational(e2) * inv_p1) +
            LogExpr::log2(Rational(p1), Rational(sh.exponent_sum) * inv_p1);
  const int sign = certified_sign(LogExpr(out.lhs) - out.rhs);
  out.holds = sign >= 0;
  out.strict = sign > 0;
  return out;
}

FamilyMembership family_membership(const FiniteAbelianGroup& group, const Rational& c, std::int64_t n,
                                   const std::optional<std::vector<int>>& profile) {
  FamilyMembership out;
  const auto sh = shape_of(group);
  out.omega_c = group.is_trivial() || Rational(sh.primes.back()) <= c * Rational(sh.primes.front());
  out.s_n = sh.exponent_sum <= n;
  if (profile) {
    const auto& f = group.invariant_factors();
    bool ok = profile->size() == f.size();
    for (std::size_t i = 0; ok && i < f.size(); ++i) {
      ok = static_cast<int>(factorize(f[i]).size()) == (*profile)[i] && std::gcd(f[i], f.back() / f[i]) == 1;
    }
    out.e_profile = ok;
  }
  return out;
}

}  // namespace zsum
