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
#include <string_view>
#include <utility>
#include <vector>

#include "zsum/invariants.hpp"

namespace zsum {

// Parameter grid. Each theorem reads the fields it needs and takes the
// cartesian product; empty lists fall back to small defaults.
struct FamilyGrid {
  std::vector<std::int64_t> p, q, m, n, r;
  std::vector<std::pair<std::int64_t, std::int64_t>> pq;
  std::vector<std::string> groups;  // group specs
  std::int64_t min_order = 2;
  std::int64_t max_order = 16;
};

enum class InstanceStatus { kPass, kFail, kSkipped };
std::string status_name(InstanceStatus s);

struct FamilyInstance {
  std::string params;
  std::string relation;
  std::string lhs;
  std::string rhs;
  InstanceStatus status = InstanceStatus::kPass;
  std::string note;  // skip reason or failure detail
};

struct FamilyReport {
  std::string theorem;
  std::vector<FamilyInstance> instances;
  std::size_t count(InstanceStatus s) const;
  bool ok() const { return count(InstanceStatus::kFail) == 0; }
};

// Known ids:
//   gaowang           K1 = K1* on cyclic p-power, C_pq, C_2^m, C_3^m, C_p^2
//                     groups with order in [min_order, max_order]
//   corollary         K1 = K1* on C_{p^m} + C_p, + C_q, + C_q^2, + C_2^n, + C_3^n
//   mainthm1          K1(C_{p^m} + C_p^n) <= K1(C_{p^m}) + K1(C_p^(n+1)) - 1
//   mainthm1-coprime  K1(C_{p^m} + C_q^n) <= K1(C_{p^m}) + K1(C_q^n)
//   n1                N1 = N1* on cyclic, C_2^m, C_3^m, C_p^2
//   n1k1              N1(C_p^n) = p K1(C_p^n)
//   maximal-split-pq  every maximizer over C_pq has no element of order pq
//                     and splits into UFIMs over C_p and C_q
//   roplus            every UFIM over C_r + G: (k <= K1* and t = 0) or m_r = 0
//   sandwich          k* <= k, k + 1/Exp <= K, K1* <= K1 <= min(2k, log
//                     bound), K1 - k <= asymptote bound
// Points outside the search bounds (or out of budget) are reported skipped.
// Unknown ids throw InvalidArgument.
FamilyReport verify_family(InvariantEngine& engine, std::string_view theorem, const FamilyGrid& grid);
std::vector<std::string> family_theorems();

// One-line structured rendering (keys sorted).
std::string family_report_json(const FamilyReport& report);

}  // namespace zsum
