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

#ifndef SYLOWSCOPE_PERM_HPP
#define SYLOWSCOPE_PERM_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace sylowscope {

  using Point = std::uint16_t;
  constexpr std::size_t max_degree = 4096;

  // composition is right to left: (a*b)(i) = a(b(i))
  class Perm {
  public:
    Perm() = default;
    explicit Perm(std::size_t degree);
    explicit Perm(std::vector<Point> images);
    Perm(std::initializer_list<int> images);

    // cycles use 0-based points
    static Perm from_cycles(std::size_t degree,
                            const std::vector<std::vector<int>> &cycles);
    static Perm from_images(std::span<const Point> images);

    std::size_t degree() const { return images_.size(); }
    Point operator()(std::size_t i) const { return images_[i]; }
    const std::vector<Point> &images() const { return images_; }

    Perm operator*(const Perm &b) const;
    Perm inverse() const;
    Perm pow(std::int64_t e) const;
    bool is_identity() const;
    std::uint64_t order() const;

    auto operator<=>(const Perm &) const = default;

  private:
    std::vector<Point> images_;
  };

  std::ostream &operator<<(std::ostream &stream, const Perm &p);

  // conjugate g x g^-1
  Perm conjugate(const Perm &g, const Perm &x);
  // commutator x y x^-1 y^-1
  Perm commutator(const Perm &x, const Perm &y);

  std::uint64_t perm_order(std::span<const Point> images);

}

#endif
