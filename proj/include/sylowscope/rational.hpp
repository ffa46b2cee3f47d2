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

#ifndef SYLOWSCOPE_RATIONAL_HPP
#define SYLOWSCOPE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

namespace sylowscope {

  // exact rational; machine words while they suffice, GMP beyond
  class Rational {
  public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class &q);

    bool is_small() const { return !big_; }
    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_integer() const;
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    int sign() const;
    mpq_class to_mpq() const;
    // only meaningful when is_small()
    std::int64_t small_num() const { return num_; }
    std::int64_t small_den() const { return den_; }
    std::string num_str() const;
    std::string den_str() const;
    std::string to_string() const;
    double to_double() const;
    // residue modulo a prime not dividing the denominator
    std::uint64_t mod(std::uint64_t prime) const;

    Rational operator-() const;
    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);
    Rational &operator+=(const Rational &b) { return *this = *this + b; }
    Rational &operator-=(const Rational &b) { return *this = *this - b; }
    Rational &operator*=(const Rational &b) { return *this = *this * b; }

    friend bool operator==(const Rational &a, const Rational &b);
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    std::size_t hash() const;

  private:
    static Rational from_mpq(mpq_class q);
    std::int64_t num_{0};
    std::int64_t den_{1};
    std::shared_ptr<const mpq_class> big_;
  };

  std::ostream &operator<<(std::ostream &stream, const Rational &r);

}

#endif
