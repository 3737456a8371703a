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
#include <string>
#include <vector>

#include "zsum/homomorphism.hpp"
#include "zsum/multiset.hpp"
#include "zsum/zerosum.hpp"

namespace zsum {

// Over C_{p^m} with generator 1: (p-1) copies of p^(i-1) and one copy of
// (1-p) p^(i-1), for i = 1..m. A UFIM with cross number k1_star(C_{p^m}).
IndexedMultiset gao_wang_extremal(std::int64_t p, int m);

// Per prime-power component C_{p^e}: (p-1) copies of p^(i-1) times the
// component generator, i = 1..e. Zero-sum free with cross number
// little_k_star(G).
IndexedMultiset extremal_zero_sum_free(const FiniteAbelianGroup& group);

// S1 over G1 and S2 over G2 embedded in G1 + G2 (normalized). The result
// lists S1's elements first.
IndexedMultiset direct_sum_union(const IndexedMultiset& a, const IndexedMultiset& b);

// The gao_wang_extremal witnesses of the prime-power components, assembled
// inside G itself: a UFIM with cross number k1_star(G).
IndexedMultiset k1_star_witness(const FiniteAbelianGroup& group);

// T, the packing S_1..S_t and S'' partition the labels of S.
struct DecompositionResult {
  IndexSubset kernel_part;                // T
  std::vector<IndexSubset> packing;       // S_1..S_t, sorted
  IndexSubset remainder;                  // S''
  std::size_t t() const { return packing.size(); }
};

struct DecomposeOptions {
  std::uint64_t budget_nodes = 20'000'000;
  ZeroSumOptions zero_sum;
};

// T = entries in ker(phi); a maximum family of disjoint zero-sum free
// subsets of S \ T with sums in ker(phi) \ {0}, the lexicographically least
// such family; S'' the rest. Checks afterwards that S'', phi(S'') and
// T + {sigma(S_i)} are UFIMs (std::logic_error otherwise).
DecompositionResult construction4_decompose(const IndexedMultiset& s, const Homomorphism& phi,
                                            const DecomposeOptions& options = {});

// Invariants of ker(phi) and of G / ker(phi) used by the consequences.
struct PartInvariants {
  Rational k1_kernel;
  std::int64_t n1_kernel = 0;
  Rational k1_quotient;
  Rational big_k_quotient;
};

struct ConsequenceCheck {
  int item = 0;
  std::string statement;
  Rational lhs;
  Rational rhs;
  bool applicable = true;
  bool pass = true;
};

// Items 1-5 and 7 of the kernel/quotient bounds, evaluated on a concrete
// decomposition.
std::vector<ConsequenceCheck> phiunique_consequences(const IndexedMultiset& s, const Homomorphism& phi,
                                                     const DecompositionResult& d, const PartInvariants& parts);

}  // namespace zsum
