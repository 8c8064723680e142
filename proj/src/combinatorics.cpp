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

#include "scc/combinatorics.hpp"

#include <stdexcept>

namespace scc {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt falling_factorial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("falling_factorial: requires 0 <= k <= n");
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r *= (n - i);
  return r;
}

BigInt falling_factorial_or_zero(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return falling_factorial(n, k);
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::vector<int> mask_elements(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    int bit = __builtin_ctzll(mask);
    out.push_back(bit + 1);
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t mask_from_elements(const std::vector<int>& elements) {
  std::uint64_t mask = 0;
  for (int e : elements) mask |= element_bit(e);
  return mask;
}

std::uint64_t next_same_size_mask(std::uint64_t mask) {
  // Gosper's hack.
  std::uint64_t c = mask & -mask;
  std::uint64_t r = mask + c;
  return (((r ^ mask) >> 2) / c) | r;
}

std::vector<std::uint64_t> subsets_of_size(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::uint64_t limit = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  while (mask < limit) {
    out.push_back(mask);
    if (mask == 0) break;
    std::uint64_t next = next_same_size_mask(mask);
    if (next <= mask) break;  // overflow guard
    mask = next;
  }
  return out;
}

unsigned long colex_rank(std::uint64_t mask) {
  // rank = sum over the i-th smallest element c_i (1-based i) of C(c_i-1, i).
  BigInt rank = 0;
  long i = 1;
  for (int e : mask_elements(mask)) {
    rank += binomial(e - 1, i);
    ++i;
  }
  return rank.get_ui();
}

}  // namespace scc
