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

#include <sylowscope/cyclotomic.hpp>
#include <sylowscope/errors.hpp>

#include <gtest/gtest.h>

#include <quadmath.h>

#include <random>

using namespace sylowscope;

namespace {
  Cyclotomic z(std::uint64_t n, std::int64_t k) { return Cyclotomic::root_of_unity(n, k); }

  // quad-precision evaluation, computed independently from the basis reduction
  std::pair<__float128, __float128> evaluate(const Cyclotomic &c) {
    __float128 re(0), im(0);
    for (const auto &t : c.terms()) {
      __float128 angle(2 * acosq(-1) * t.exponent / c.modulus());
      __float128 coeff(t.coeff.to_double());
      re += coeff * cosq(angle);
      im += coeff * sinq(angle);
    }
    return {re, im};
  }
}

TEST(Rational, Arithmetic) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(Rational(4, -6), Rational(-2, 3));
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  Rational big(INT64_MAX);
  Rational sum(big + big);
  EXPECT_FALSE(sum.is_small());
  EXPECT_EQ(sum.to_string(), "18446744073709551614");
  EXPECT_EQ(sum - big, big);
  EXPECT_TRUE((sum - big).is_small());
  EXPECT_EQ(Rational(3, 7).mod(11), 3 * 8 % 11u);
}

TEST(Cyclotomic, RingExamples) {
  EXPECT_TRUE((z(4, 1) + z(4, 3)).is_zero());
  EXPECT_EQ(z(3, 1) * z(3, 2), Cyclotomic(1));
  EXPECT_EQ(z(6, 1), -z(3, 2));
  EXPECT_EQ(z(6, 1) * z(6, 1) * z(6, 1), Cyclotomic(-1));
  EXPECT_EQ(z(12, 4), z(3, 1));
  Cyclotomic sum;
  for (int k(0); k < 7; ++k) sum += z(7, k);
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(9), (std::vector<std::int64_t>{1, 0, 0, 1, 0, 0, 1}));
}

TEST(Cyclotomic, Galois) {
  Cyclotomic v(z(5, 1) + z(5, 4));
  EXPECT_EQ(v.galois(1), v);
  EXPECT_EQ(z(8, 1).galois(3), z(8, 3));
  EXPECT_EQ(v.galois(2), z(5, 2) + z(5, 3));
  EXPECT_EQ(z(7, 2).conj(), z(7, 5));
  EXPECT_THROW(z(8, 1).galois(2), NotAUnit);
  Cyclotomic w(z(15, 1) * Rational(2, 3) + z(15, 7));
  Cyclotomic p(w * w.galois(2));
  EXPECT_EQ(p.galois(4), w.galois(4) * w.galois(8));
}

TEST(Cyclotomic, Rationality) {
  auto rational(rationality({Cyclotomic(1), Cyclotomic(-3), Cyclotomic(Rational(1, 2))}, 12));
  EXPECT_EQ(rational.feit_number, 1u);
  EXPECT_EQ(rational.field_degree, 1u);
  EXPECT_EQ(rational.stabilizer.size(), 4u);
  auto c3(rationality({Cyclotomic(1), z(3, 1), z(3, 2)}, 3));
  EXPECT_EQ(c3.feit_number, 3u);
  EXPECT_EQ(c3.field_degree, 2u);
  auto q8(rationality({Cyclotomic(2), Cyclotomic(-2), Cyclotomic(0), Cyclotomic(0), Cyclotomic(0)}, 8));
  EXPECT_EQ(q8.feit_number, 1u);
  EXPECT_EQ(feit_number({Cyclotomic(-1)}, 2), 1u);
  // sqrt(-3) = z3 - z3^2 lives in Q_3, viewed inside Q_12
  auto s(rationality({z(3, 1) - z(3, 2)}, 12));
  EXPECT_EQ(s.feit_number, 3u);
  EXPECT_EQ(s.field_degree, 2u);
  EXPECT_EQ(s.stabilizer.size() * s.field_degree, 4u);
  // z4 = i inside Q_12 has conductor 4; the real part of z8 has conductor 8
  EXPECT_EQ(feit_number({z(12, 3)}, 12), 4u);
  EXPECT_EQ(conductor(z(8, 1) + z(8, 7)), 8u);
  EXPECT_EQ(rationality({z(8, 1) + z(8, 7)}, 8).field_degree, 2u);
  EXPECT_EQ(conductor(z(6, 1)), 3u);
  EXPECT_EQ(conductor(z(25, 5)), 5u);
  EXPECT_EQ(conductor(z(25, 5) + z(25, 1)), 25u);
}

TEST(Cyclotomic, ContainmentGivesDivisibility) {
  Cyclotomic a(z(20, 1) + z(20, 9)), b(z(5, 1));
  std::uint64_t f_sub(feit_number({b}, 20)), f_all(feit_number({a, b}, 20));
  EXPECT_EQ(f_all % f_sub, 0u);
}

TEST(Cyclotomic, NumericDiagnostic) {
  std::mt19937_64 rng(7);
  for (int trial(0); trial < 200; ++trial) {
    std::uint64_t n(1 + rng() % 40);
    Cyclotomic a(z(n, static_cast<std::int64_t>(rng() % n)) * Rational(static_cast<std::int64_t>(rng() % 7) - 3));
    Cyclotomic b(z(n, static_cast<std::int64_t>(rng() % n)) + Rational(1, 2));
    auto [ar, ai] = evaluate(a);
    auto [br, bi] = evaluate(b);
    auto [pr, pi] = evaluate(a * b);
    auto [sr, si] = evaluate(a + b);
    EXPECT_LT(fabsq(pr - (ar * br - ai * bi)), __float128(1e-30));
    EXPECT_LT(fabsq(pi - (ar * bi + ai * br)), __float128(1e-30));
    EXPECT_LT(fabsq(sr - (ar + br)), __float128(1e-30));
    EXPECT_LT(fabsq(si - (ai + bi)), __float128(1e-30));
  }
}
