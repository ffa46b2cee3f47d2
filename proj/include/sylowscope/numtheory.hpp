/* Copyright 2026 The sylowscope Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SYLOWSCOPE_NUMTHEORY_HPP
#define SYLOWSCOPE_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sylowscope {

  // n = n_p * n_{p'}
  struct PrimePart {
    std::uint64_t p_part;
    std::uint64_t p_prime_part;
  };

  PrimePart p_part(std::uint64_t n, std::uint64_t p);

  bool is_prime(std::uint64_t n);
  std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
  std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
  std::vector<std::uint64_t> divisors(std::uint64_t n);
  std::uint64_t euler_phi(std::uint64_t n);
  std::uint64_t smallest_prime_factor(std::uint64_t n);

  // (p, k) with n = p^k, k >= 1
  std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n);
  bool is_power_of(std::uint64_t n, std::uint64_t p);
  // exact logarithm; throws when n is not a power of p
  int log_exact(std::uint64_t n, std::uint64_t p);
  std::uint64_t ipow(std::uint64_t base, unsigned e);

  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
  std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
  std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

  // units of Z/n in increasing order
  std::vector<std::uint64_t> units_mod(std::uint64_t n);
  // a primitive root modulo the prime l
  std::uint64_t primitive_root(std::uint64_t l);
  // least prime l with l = 1 (mod m) and l > bound
  std::uint64_t prime_one_mod(std::uint64_t m, std::uint64_t bound);
  std::uint64_t isqrt(std::uint64_t n);
  std::uint64_t ceil_sqrt(std::uint64_t n);

}

#endif
