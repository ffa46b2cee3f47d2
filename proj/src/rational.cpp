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

#include <sylowscope/rational.hpp>
#include <sylowscope/errors.hpp>

#include <numeric>

namespace sylowscope {

  namespace {
    bool fits(const mpz_class &z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }
  }

  Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw BadParameters("zero denominator");
    if (d == INT64_MIN || n == INT64_MIN) {
      *this = from_mpq(mpq_class(mpz_class(std::to_string(n)), mpz_class(std::to_string(d))));
      return;
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g(std::gcd(n, d));
    if (g == 0) g = 1;
    num_ = n / g;
    den_ = d / g;
  }

  Rational::Rational(const mpq_class &q) { *this = from_mpq(q); }

  Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    if (fits(q.get_num()) && fits(q.get_den())) {
      r.num_ = q.get_num().get_si();
      r.den_ = q.get_den().get_si();
      if (r.num_ != INT64_MIN) return r;
    }
    r.num_ = 0;
    r.den_ = 1;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
  }

  mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  }

  bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

  int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  std::string Rational::num_str() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }
  std::string Rational::den_str() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

  std::string Rational::to_string() const {
    return is_integer() ? num_str() : num_str() + "/" + den_str();
  }

  double Rational::to_double() const {
    return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::uint64_t Rational::mod(std::uint64_t prime) const {
    mpq_class q(to_mpq());
    mpz_class m(static_cast<unsigned long>(prime));
    mpz_class n(q.get_num() % m), d(q.get_den() % m);
    if (n < 0) n += m;
    if (d == 0) throw NotAUnit("denominator divisible by the modulus");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    mpz_class r((n * inv) % m);
    return r.get_ui();
  }

  Rational Rational::operator-() const {
    if (!big_ && num_ != INT64_MIN) {
      Rational r(*this);
      r.num_ = -num_;
      return r;
    }
    return from_mpq(-to_mpq());
  }

  Rational operator+(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s;
        if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
      } else {
        std::int64_t g(std::gcd(a.den_, b.den_));
        std::int64_t x, y, s, d;
        if (!__builtin_mul_overflow(a.num_, b.den_ / g, &x) &&
            !__builtin_mul_overflow(b.num_, a.den_ / g, &y) &&
            !__builtin_add_overflow(x, y, &s) &&
            !__builtin_mul_overflow(a.den_, b.den_ / g, &d)) {
          return Rational(s, d);
        }
      }
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
  }

  Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }

  Rational operator*(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) {
      std::int64_t g1(std::gcd(a.num_, b.den_)), g2(std::gcd(b.num_, a.den_));
      if (g1 == 0) g1 = 1;
      if (g2 == 0) g2 = 1;
      std::int64_t n, d;
      if (!__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &n) &&
          !__builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &d)) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        if (n != INT64_MIN) return r;
      }
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
  }

  Rational operator/(const Rational &a, const Rational &b) {
    if (b.is_zero()) throw BadParameters("division by zero");
    if (!b.big_ && b.num_ != INT64_MIN) {
      Rational inv(b.den_, b.num_);
      return a * inv;
    }
    return Rational::from_mpq(a.to_mpq() / b.to_mpq());
  }

  bool operator==(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never fits in machine words
  }

  std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) {
      __int128 l(static_cast<__int128>(a.num_) * b.den_), r(static_cast<__int128>(b.num_) * a.den_);
      return l <=> r;
    }
    int c(cmp(a.to_mpq(), b.to_mpq()));
    return c <=> 0;
  }

  std::size_t Rational::hash() const {
    if (!big_) {
      std::uint64_t h(static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ull);
      h ^= static_cast<std::uint64_t>(den_) + 0x7f4a7c15ull + (h << 6) + (h >> 2);
      return h;
    }
    return std::hash<std::string>()(big_->get_str());
  }

  std::ostream &operator<<(std::ostream &stream, const Rational &r) {
    return stream << r.to_string();
  }

}
