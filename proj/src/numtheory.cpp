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

#include <sylowscope/numtheory.hpp>
#include <sylowscope/errors.hpp>

#include <algorithm>
#include <numeric>

namespace sylowscope {

  PrimePart p_part(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw BadParameters("p_part of zero");
    if (!is_prime(p)) throw BadParameters("p_part needs a prime");
    std::uint64_t q(1);
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    return {q, n};
  }

  bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
      if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64 bit
    std::uint64_t d(n - 1);
    int s(0);
    while ((d & 1) == 0) {
      d >>= 1;
      ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
      std::uint64_t x(powmod(a, d, n));
      if (x == 1 || x == n - 1) continue;
      bool composite(true);
      for (int r(1); r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) {
          composite = false;
          break;
        }
      }
      if (composite) return false;
    }
    return true;
  }

  std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> result;
    for (std::uint64_t p(2); p * p <= n; p += (p == 2 ? 1 : 2)) {
      if (n % p) continue;
      int k(0);
      while (n % p == 0) {
        n /= p;
        ++k;
      }
      result.emplace_back(p, k);
    }
    if (n > 1) result.emplace_back(n, 1);
    return result;
  }

  std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> result;
    for (auto [p, k] : factorize(n)) result.push_back(p);
    return result;
  }

  std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> result{1};
    for (auto [p, k] : factorize(n)) {
      std::size_t m(result.size());
      std::uint64_t q(1);
      for (int i(0); i < k; ++i) {
        q *= p;
        for (std::size_t j(0); j < m; ++j) result.push_back(result[j] * q);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result(n);
    for (auto [p, k] : factorize(n)) result = result / p * (p - 1);
    return result;
  }

  std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n < 2) return n;
    for (std::uint64_t p(2); p * p <= n; p += (p == 2 ? 1 : 2)) {
      if (n % p == 0) return p;
    }
    return n;
  }

  std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto f(factorize(n));
    if (f.size() != 1) return std::nullopt;
    return f.front();
  }

  bool is_power_of(std::uint64_t n, std::uint64_t p) {
    if (n == 0) return false;
    while (n % p == 0) n /= p;
    return n == 1;
  }

  int log_exact(std::uint64_t n, std::uint64_t p) {
    int k(0);
    while (n > 1 && n % p == 0) {
      n /= p;
      ++k;
    }
    if (n != 1) throw BadParameters("not a prime power");
    return k;
  }

  std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r(1);
    while (e--) r *= base;
    return r;
  }

  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
  }

  std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r(1 % m);
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t(0), nt(1);
    std::int64_t r(static_cast<std::int64_t>(m));
    std::int64_t nr(static_cast<std::int64_t>(a % m));
    while (nr) {
      std::int64_t q(r / nr);
      std::tie(t, nt) = std::make_pair(nt, t - q * nt);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw NotAUnit("no inverse modulo " + std::to_string(m));
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
  }

  std::vector<std::uint64_t> units_mod(std::uint64_t n) {
    std::vector<std::uint64_t> result;
    if (n == 1) return {0};
    for (std::uint64_t k(1); k < n; ++k) {
      if (std::gcd(k, n) == 1) result.push_back(k);
    }
    return result;
  }

  std::uint64_t primitive_root(std::uint64_t l) {
    auto primes(prime_divisors(l - 1));
    for (std::uint64_t g(2); g < l; ++g) {
      bool ok(true);
      for (auto q : primes) {
        if (powmod(g, (l - 1) / q, l) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    return 1;
  }

  std::uint64_t prime_one_mod(std::uint64_t m, std::uint64_t bound) {
    std::uint64_t l(bound / m * m + 1);
    while (l <= bound || !is_prime(l)) l += m;
    return l;
  }

  std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r(static_cast<std::uint64_t>(__builtin_sqrtl(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
  }

  std::uint64_t ceil_sqrt(std::uint64_t n) {
    std::uint64_t r(isqrt(n));
    return r * r == n ? r : r + 1;
  }

}
