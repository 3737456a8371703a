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

#include <cmath>

#include "doctest.h"
#include "zsum/errors.hpp"
#include "zsum/logexpr.hpp"
#include "zsum/rational.hpp"

using namespace zsum;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3) > Rational(-1, 2));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(5).to_string() == "5/1");
  CHECK(Rational(5).to_short_string() == "5");
  CHECK(Rational::parse("-7/14") == Rational(-1, 2));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), std::overflow_error);
}

TEST_CASE("log expressions") {
  auto a = LogExpr::log2(Rational(8));
  CHECK(a.is_rational());
  CHECK(a.constant() == Rational(3));

  auto b = LogExpr::log2(Rational(12));  // 2 + log2(3)
  CHECK_FALSE(b.is_rational());
  CHECK(b.approx() == doctest::Approx(std::log2(12.0)).epsilon(1e-12));
  CHECK(b - LogExpr::log2(Rational(3)) == LogExpr(Rational(2)));

  auto l = LogExpr::ln(Rational(2)) + LogExpr(Rational(1, 2));
  CHECK(l.approx() == doctest::Approx(std::log(2.0) + 0.5).epsilon(1e-12));
  auto [lo, hi] = l.enclose();
  CHECK(lo <= std::log(2.0) + 0.5);
  CHECK(hi >= std::log(2.0) + 0.5);
  CHECK(hi - lo < 1e-15);

  CHECK(certified_sign(LogExpr::log2(Rational(3)) - LogExpr(Rational(1))) == 1);
  CHECK(certified_sign(LogExpr::log2(Rational(3)) - LogExpr(Rational(2))) == -1);
  CHECK(certified_sign(LogExpr::log2(Rational(9)) - LogExpr::log2(Rational(3)) * Rational(2)) == 0);
  CHECK(certified_le(LogExpr(Rational(1)), LogExpr::ln(Rational(3))));
  CHECK(certified_lt(LogExpr::ln(Rational(3)), LogExpr::log2(Rational(3))));
  CHECK_THROWS(LogExpr::log2(Rational(0)));
}

TEST_CASE("log expression rendering") {
  auto e = LogExpr(Rational(1, 2)) + LogExpr::log2(Rational(3), Rational(1, 5)) + LogExpr::ln(Rational(2));
  CHECK(e.to_string() == "1/2 + 1/5*log2(3) + 1*ln(2)");
}
