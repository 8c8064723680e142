/*
 * Copyright 2026 the scsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "scc/rational.hpp"

namespace scc {

/// C(n,k). Returns 0 for k < 0, k > n, or n < 0; exact for any size otherwise.
BigInt binomial(long n, long k);

/// n! / (n-k)!. Requires 0 <= k <= n.
BigInt falling_factorial(long n, long k);

/// Like falling_factorial but returns 0 when n < 0, k < 0 or k > n.
/// Lets product formulas self-truncate instead of erroring out.
BigInt falling_factorial_or_zero(long n, long k);

BigInt factorial(long n);

// ---- subset-as-bitmask helpers ------------------------------------------
//
// A subset of {1,..,n} is a mask with bit (e-1) set for element e. Numeric
// mask order is colexicographic order, both over all subsets and within the
// subsets of a fixed size; that numeric order is the canonical order used
// everywhere a subset sequence must be reproducible.

inline std::uint64_t element_bit(int element) {
  return std::uint64_t{1} << (element - 1);
}

inline bool mask_contains(std::uint64_t mask, int element) {
  return (mask >> (element - 1)) & 1u;
}

inline int mask_size(std::uint64_t mask) { return __builtin_popcountll(mask); }

/// Elements of the mask, ascending, 1-based.
std::vector<int> mask_elements(std::uint64_t mask);

std::uint64_t mask_from_elements(const std::vector<int>& elements);

/// Next mask with the same popcount in ascending numeric (= colex) order.
std::uint64_t next_same_size_mask(std::uint64_t mask);

/// All size-k subsets of {1,..,n} in colex order. Empty when k > n or k < 0.
std::vector<std::uint64_t> subsets_of_size(int n, int k);

/// Rank of `mask` within subsets_of_size(n, mask_size(mask)), 0-based.
/// Independent of n.
unsigned long colex_rank(std::uint64_t mask);

}  // namespace scc
