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

#include <map>
#include <string>
#include <utility>

#include "zsum/rational.hpp"

namespace zsum {

// r + sum_p a_p * log2(p) + sum_p b_p * ln(p) with rational r, a_p, b_p.
// Closed under addition and rational scaling; every bound mixing rationals
// with logarithms is one of these. Signs are decided either exactly (all log
// coefficients vanish) or by outward-rounded MPFR intervals.
class LogExpr {
 public:
  LogExpr() = default;
  LogExpr(Rational r) : constant_(r) {}  // NOLINT(google-explicit-constructor)

  static LogExpr log2(const Rational& arg, const Rational& coeff = Rational(1));
  static LogExpr ln(const Rational& arg, const Rational& coeff = Rational(1));

  LogExpr& operator+=(const LogExpr& other);
  LogExpr& operator-=(const LogExpr& other);
  LogExpr& operator*=(const Rational& c);
  friend LogExpr operator+(LogExpr a, const LogExpr& b) { return a += b; }
  friend LogExpr operator-(LogExpr a, const LogExpr& b) { return a -= b; }
  friend LogExpr operator*(LogExpr a, const Rational& c) { return a *= c; }
  friend LogExpr operator*(const Rational& c, LogExpr a) { return a *= c; }
  LogExpr operator-() const { return *this * Rational(-1); }

  // True when no logarithm survives normalization.
  bool is_rational() const { return log2_.empty() && ln_.empty(); }
  const Rational& constant() const { return constant_; }

  // Enclosure [lo, hi] at the given MPFR precision, as doubles rounded
  // outward.
  std::pair<double, double> enclose(long precision_bits = 128) const;
  double approx() const;
  std::string to_string() const;

  friend bool operator==(const LogExpr&, const LogExpr&) = default;

 private:
  friend int certified_sign(const LogExpr& e);
  void add_log(std::map<std::int64_t, Rational>& table, const Rational& arg, const Rational& coeff);
  void normalize();

  Rational constant_;
  std::map<std::int64_t, Rational> log2_;  // odd primes only; log2(2) folds into constant_
  std::map<std::int64_t, Rational> ln_;
};

// -1, 0 or +1. Escalates precision up to a fixed cap and throws
// ResourceLimitError if the sign is still undecided.
int certified_sign(const LogExpr& e);

// Certified comparisons.
inline bool certified_le(const LogExpr& a, const LogExpr& b) { return certified_sign(b - a) >= 0; }
inline bool certified_lt(const LogExpr& a, const LogExpr& b) { return certified_sign(b - a) > 0; }

}  // namespace zsum
