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

#ifndef SYLOWSCOPE_MODULAR_HPP
#define SYLOWSCOPE_MODULAR_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace sylowscope::modular {

  // arithmetic in GF(l) for a prime l below 2^32
  class Field {
  public:
    explicit Field(std::uint64_t l) : l_(l) {}
    std::uint64_t prime() const { return l_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { a += b; return a >= l_ ? a - l_ : a; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + l_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a ? l_ - a : 0; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % l_; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a, l_ - 2); }
    std::uint64_t from_signed(std::int64_t a) const {
      std::int64_t m(static_cast<std::int64_t>(l_));
      return static_cast<std::uint64_t>(((a % m) + m) % m);
    }

  private:
    std::uint64_t l_;
  };

  // dense row-major square or rectangular matrix
  struct Matrix {
    std::size_t rows{0}, cols{0};
    std::vector<std::uint64_t> data;
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    std::uint64_t &at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  };

  // characteristic polynomial, low degree first and monic
  std::vector<std::uint64_t> charpoly(const Field &f, Matrix m);

  // distinct roots in GF(l)
  std::vector<std::uint64_t> roots(const Field &f, std::vector<std::uint64_t> poly,
                                   std::mt19937_64 &rng);

  // basis of the kernel as columns; each column has a 1 in its own pivot row
  // and zeros in the other pivot rows
  Matrix nullspace(const Field &f, Matrix m);

  // X_t = sum_s x_s w^(s t) for w of order x.size()
  std::vector<std::uint64_t> dft(const Field &f, const std::vector<std::uint64_t> &x, std::uint64_t w);

}

#endif
