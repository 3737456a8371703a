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

#include "zsum/logexpr.hpp"

#include <mpfr.h>

#include <sstream>

#include "zsum/errors.hpp"
#include "zsum/group.hpp"

namespace zsum {
namespace {

constexpr long kStartPrecision = 64;
constexpr long kMaxPrecision = 1 << 14;

class Mpfr {
 public:
  explicit Mpfr(long prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Sets out to a directed rounding of c * x where x lies in [x_lo, x_hi].
void scaled(mpfr_ptr out, const Rational& c, mpfr_srcptr x_lo, mpfr_srcptr x_hi, bool lower, long prec) {
  Mpfr t(prec);
  mpfr_rnd_t rnd = lower ? MPFR_RNDD : MPFR_RNDU;
  // For c >= 0 the lower bound uses x_lo; for c < 0 it uses x_hi.
  mpfr_srcptr x = ((c.num() >= 0) == lower) ? x_lo : x_hi;
  mpfr_mul_si(t.get(), x, c.num(), rnd);
  mpfr_div_si(out, t.get(), c.den(), rnd);
}

void rational_bound(mpfr_ptr out, const Rational& r, bool lower) {
  mpfr_rnd_t rnd = lower ? MPFR_RNDD : MPFR_RNDU;
  mpfr_set_si(out, r.num(), rnd);
  mpfr_div_si(out, out, r.den(), rnd);
}

// Enclosure of e at precision prec into [lo, hi].
void enclose_mpfr(const Rational& constant, const std::map<std::int64_t, Rational>& log2_terms,
                  const std::map<std::int64_t, Rational>& ln_terms, long prec, mpfr_ptr lo, mpfr_ptr hi) {
  rational_bound(lo, constant, true);
  rational_bound(hi, constant, false);
  Mpfr x_lo(prec), x_hi(prec), term(prec);
  auto accumulate = [&](const std::map<std::int64_t, Rational>& terms, bool base2) {
    for (const auto& [p, c] : terms) {
      mpfr_set_si(x_lo.get(), p, MPFR_RNDD);
      mpfr_set_si(x_hi.get(), p, MPFR_RNDU);
      if (base2) {
        mpfr_log2(x_lo.get(), x_lo.get(), MPFR_RNDD);
        mpfr_log2(x_hi.get(), x_hi.get(), MPFR_RNDU);
      } else {
        mpfr_log(x_lo.get(), x_lo.get(), MPFR_RNDD);
        mpfr_log(x_hi.get(), x_hi.get(), MPFR_RNDU);
      }
      scaled(term.get(), c, x_lo.get(), x_hi.get(), true, prec);
      mpfr_add(lo, lo, term.get(), MPFR_RNDD);
      scaled(term.get(), c, x_lo.get(), x_hi.get(), false, prec);
      mpfr_add(hi, hi, term.get(), MPFR_RNDU);
    }
  };
  accumulate(log2_terms, true);
  accumulate(ln_terms, false);
}

void merge(std::map<std::int64_t, Rational>& into, const std::map<std::int64_t, Rational>& from, const Rational& scale) {
  for (const auto& [p, c] : from) into[p] += c * scale;
}

void drop_zeros(std::map<std::int64_t, Rational>& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == Rational(0); });
}

}  // namespace

void LogExpr::add_log(std::map<std::int64_t, Rational>& table, const Rational& arg, const Rational& coeff) {
  if (arg <= Rational(0)) throw InvalidArgument("logarithm of a non-positive number");
  auto fold = [&](std::int64_t n, int sign) {
    if (n == 1) return;
    for (const auto& f : factorize(n)) {
      Rational c = coeff * Rational(sign * f.exponent);
      if (&table == &log2_ && f.prime == 2) {
        constant_ += c;
      } else {
        table[f.prime] += c;
      }
    }
  };
  fold(arg.num(), 1);
  fold(arg.den(), -1);
  normalize();
}

LogExpr LogExpr::log2(const Rational& arg, const Rational& coeff) {
  LogExpr e;
  e.add_log(e.log2_, arg, coeff);
  return e;
}

LogExpr LogExpr::ln(const Rational& arg, const Rational& coeff) {
  LogExpr e;
  e.add_log(e.ln_, arg, coeff);
  return e;
}

void LogExpr::normalize() {
  drop_zeros(log2_);
  drop_zeros(ln_);
}

LogExpr& LogExpr::operator+=(const LogExpr& other) {
  constant_ += other.constant_;
  merge(log2_, other.log2_, Rational(1));
  merge(ln_, other.ln_, Rational(1));
  normalize();
  return *this;
}

LogExpr& LogExpr::operator-=(const LogExpr& other) {
  constant_ -= other.constant_;
  merge(log2_, other.log2_, Rational(-1));
  merge(ln_, other.ln_, Rational(-1));
  normalize();
  return *this;
}

LogExpr& LogExpr::operator*=(const Rational& c) {
  constant_ *= c;
  for (auto& [p, v] : log2_) v *= c;
  for (auto& [p, v] : ln_) v *= c;
  normalize();
  return *this;
}

std::pair<double, double> LogExpr::enclose(long precision_bits) const {
  Mpfr lo(precision_bits), hi(precision_bits);
  enclose_mpfr(constant_, log2_, ln_, precision_bits, lo.get(), hi.get());
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

double LogExpr::approx() const {
  auto [lo, hi] = enclose(128);
  return lo + (hi - lo) / 2;
}

std::string LogExpr::to_string() const {
  std::ostringstream os;
  os << constant_.to_short_string();
  for (const auto& [p, c] : log2_) os << " + " << c.to_short_string() << "*log2(" << p << ")";
  for (const auto& [p, c] : ln_) os << " + " << c.to_short_string() << "*ln(" << p << ")";
  return os.str();
}

int certified_sign(const LogExpr& e) {
  if (e.is_rational()) {
    auto c = e.constant_ <=> Rational(0);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  for (long prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    Mpfr lo(prec), hi(prec);
    enclose_mpfr(e.constant_, e.log2_, e.ln_, prec, lo.get(), hi.get());
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
  }
  throw ResourceLimitError("sign of " + e.to_string() + " undecided at " + std::to_string(kMaxPrecision) + " bits");
}

}  // namespace zsum
