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

#include "zsum/group.hpp"
#include "zsum/rational.hpp"

namespace zsum {

// Closed forms, summed over the prime-power components C_{p^e} of G (or its
// invariant factors n_i for D* and N1*). Every one of them is 0 on the
// trivial group.

// sum (p^e - 1) / (p^e - p^(e-1)); additive over direct sums.
Rational k1_star(const FiniteAbelianGroup& group);
// 1 + sum (n_i - 1).
std::int64_t d_star(const FiniteAbelianGroup& group);
// sum n_i.
std::int64_t n1_star(const FiniteAbelianGroup& group);
// 1/Exp(G) + sum (p^e - 1) / p^e.
Rational big_K_star(const FiniteAbelianGroup& group);
// sum (p^e - 1) / p^e.
Rational little_k_star(const FiniteAbelianGroup& group);

// k1_star of the single cyclic group C_{p^e}: 1 + 1/p + ... + 1/p^(e-1).
Rational k1_star_cyclic_prime_power(std::int64_t p, int e);

}  // namespace zsum
