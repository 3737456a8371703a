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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zsum/homomorphism.hpp"
#include "zsum/invariants.hpp"
#include "zsum/logexpr.hpp"
#include "zsum/multiset.hpp"
#include "zsum/rational.hpp"

namespace zsum {

// General bounds around K1, keyed by name:
//   "log"        K1 <= ln|G| + log2|G| / P-(|G|)
//   "girard"     K1 <= 2 k(G)
//   "zsf_lower"  k(G) + 1/Exp(G) <= K(G)
//   "asymptote"  K1 <= k(G) + (sum of exponents) log2 P+ / P-
// k(G) comes from the engine. All zero on the trivial group.
std::map<std::string, LogExpr> upper_bounds(InvariantEngine& engine, const FiniteAbelianGroup& group);

// K1(G/ker) + N1(ker) K(G/ker), every term computed exactly. Throws
// NotApplicableError when phi kills a nontrivial G.
Rational quotient_bound(InvariantEngine& engine, const Homomorphism& phi);

// sum over components C_{p^e} of (P-(|G|) / p) K1*(C_{p^e}).
Rational size_limit_threshold(const FiniteAbelianGroup& group);

struct SizeLimitCheck {
  std::int64_t blocks = 0;  // m, the number of irreducible factors
  Rational threshold;
  bool vacuous = false;     // m above the threshold
  bool holds = true;        // vacuous, or k(S) <= K1*(G)
};

// Evaluates the size-limit implication on a concrete UFIM. Throws
// NotApplicableError unless k(G) = k*(G) (checked through the engine).
SizeLimitCheck check_size_limit(InvariantEngine& engine, const IndexedMultiset& s);

// k(G) + (log2|G| - m) / d + m / p1, with d = min(p1^2, p2), p2 or p1^2
// depending on the shape of G. Throws NotApplicableError on elementary
// p-groups (and the trivial group).
LogExpr lowest_order_bound(InvariantEngine& engine, const FiniteAbelianGroup& group, std::int64_t m_p1);

// Number of irreducible factors of the UFIM s made only of elements of order
// P-(|G|).
std::int64_t m_p1_of(const IndexedMultiset& s);

// Hypotheses of the p1-bound for (c, N): G in Omega_c and S_N, k(G) = k*(G),
// p1^2 < p2 when there are several primes, some p1-component of exponent > 1,
// and N log2(c p1) / p1 <= K1*(G) / c (certified).
bool pbound_hypothesis(InvariantEngine& engine, const FiniteAbelianGroup& group, const Rational& c, std::int64_t n);

// K1*(G) + (m / p1)(1 - 1/p1).
Rational pbound_value(const FiniteAbelianGroup& group, std::int64_t m_p1);

struct ConstraintResult {
  Rational lhs;
  LogExpr rhs;
  bool holds = false;   // lhs >= rhs, certified
  bool strict = false;  // lhs > rhs, certified
};

// The large-p1 constraint for C_r + G:
//   1/r + K1*(p1-part)/p1 + sum over other components of
//   ((c p1)^e - 1) / ((c p1)^(e+1) - (c p1)^e)
//   >= log2(r c^E2 p1^E) / p1,
// E the sum of all exponents and E2 the sum outside the p1-part. Requires
// r in {2, 3} and c >= 1 (InvalidArgument), and all primes of G above r with
// p_n < c p1 (NotApplicableError).
ConstraintResult mainthm2_constraint(int r, const Rational& c, const FiniteAbelianGroup& group);

struct FamilyMembership {
  bool omega_c = false;                // P+ <= c P-
  bool s_n = false;                    // sum of exponents <= N
  std::optional<bool> e_profile;       // omega(n_i) = l_i, gcd(n_i, n_r / n_i) = 1
};

FamilyMembership family_membership(const FiniteAbelianGroup& group, const Rational& c, std::int64_t n,
                                   const std::optional<std::vector<int>>& profile = std::nullopt);

}  // namespace zsum
