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

#include "zsum/formulas.hpp"

namespace zsum {

Rational k1_star_cyclic_prime_power(std::int64_t p, int e) {
  std::int64_t q = ipow(p, e);
  return Rational(q - 1, q - q / p);
}

Rational k1_star(const FiniteAbelianGroup& group) {
  Rational sum(0);
  for (const auto& c : group.primary_components()) sum += k1_star_cyclic_prime_power(c.prime, c.exponent);
  return sum;
}

std::int64_t d_star(const FiniteAbelianGroup& group) {
  if (group.is_trivial()) return 0;
  std::int64_t d = 1;
  for (auto n : group.invariant_factors()) d += n - 1;
  return d;
}

std::int64_t n1_star(const FiniteAbelianGroup& group) {
  std::int64_t s = 0;
  for (auto n : group.invariant_factors()) s += n;
  return s;
}

Rational little_k_star(const FiniteAbelianGroup& group) {
  Rational sum(0);
  for (const auto& c : group.primary_components()) {
    std::int64_t q = c.modulus();
    sum += Rational(q - 1, q);
  }
  return sum;
}

Rational big_K_star(const FiniteAbelianGroup& group) {
  if (group.is_trivial()) return Rational(0);
  return Rational(1, group.exponent()) + little_k_star(group);
}

}  // namespace zsum
