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

#ifndef SYLOWSCOPE_CYCLOTOMIC_HPP
#define SYLOWSCOPE_CYCLOTOMIC_HPP

#include <sylowscope/rational.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace sylowscope {

  // coefficient of zeta_n^exponent in the power basis, exponent < phi(n)
  struct Term {
    std::uint32_t exponent;
    Rational coeff;
    bool operator==(const Term &) const = default;
  };

  // exact element of Q(zeta_n), reduced modulo the n-th cyclotomic polynomial
  class Cyclotomic {
  public:
    Cyclotomic() = default;
    Cyclotomic(std::int64_t r) : Cyclotomic(Rational(r)) {}
    Cyclotomic(const Rational &r);

    static Cyclotomic root_of_unity(std::uint64_t n, std::int64_t k);
    // sum of c_k zeta_n^k over arbitrary exponents
    static Cyclotomic from_exponent_sum(std::uint64_t n,
                                        const std::vector<std::pair<std::uint64_t, Rational>> &sum);
    // dense integer coefficients indexed by exponent mod n
    static Cyclotomic from_integers(std::uint64_t n, std::span<const std::int64_t> by_exponent);
    // coefficients over the power basis, length phi(n)
    static Cyclotomic from_basis(std::uint64_t n, const std::vector<Rational> &coeffs);

    std::uint64_t modulus() const { return n_; }
    const std::vector<Term> &terms() const { return terms_; }
    std::vector<Rational> dense_coeffs() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    std::optional<Rational> as_rational() const;
    // all coefficients integral
    bool is_integral() const;

    // same value over Q(zeta_m), m a multiple of the modulus
    Cyclotomic promote(std::uint64_t m) const;
    // zeta_n -> zeta_n^k
    Cyclotomic galois(std::int64_t k) const;
    Cyclotomic conj() const { return galois(-1); }

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b);
    Cyclotomic &operator+=(const Cyclotomic &b) { return *this = *this + b; }
    Cyclotomic &operator*=(const Cyclotomic &b) { return *this = *this * b; }
    Cyclotomic scaled(const Rational &r) const;

    friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);

    std::size_t hash() const;
    std::string to_string() const;

  private:
    std::uint64_t n_{1};
    std::vector<Term> terms_;
  };

  std::ostream &operator<<(std::ostream &stream, const Cyclotomic &c);

  // the n-th cyclotomic polynomial, low degree first
  const std::vector<std::int64_t> &cyclotomic_polynomial(std::uint64_t n);

  // sparse reduction of zeta_n^j, j < n, in the power basis
  const std::vector<std::pair<std::uint32_t, std::int64_t>> &power_reduction(std::uint64_t n,
                                                                             std::uint64_t j);

  struct RationalityData {
    std::uint64_t modulus;
    std::vector<std::uint64_t> stabilizer;
    std::uint64_t field_degree;
    std::uint64_t feit_number;
  };

  // the smallest f with every value in Q(zeta_f)
  std::uint64_t feit_number(const std::vector<Cyclotomic> &values, std::uint64_t n);
  std::uint64_t conductor(const Cyclotomic &value);
  RationalityData rationality(const std::vector<Cyclotomic> &values, std::uint64_t n);

  // generators of {k = 1 mod q^v} inside the q-local factor of the units mod n,
  // lifted to be 1 modulo the rest of n
  std::vector<std::uint64_t> local_unit_generators(std::uint64_t n, std::uint64_t q, std::uint64_t v);

}

#endif
