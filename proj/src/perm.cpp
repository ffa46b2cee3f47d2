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

#include <sylowscope/perm.hpp>
#include <sylowscope/errors.hpp>

#include <numeric>
#include <string>

namespace sylowscope {

  namespace {
    void validate(const std::vector<Point> &images) {
      if (images.size() > max_degree) {
        throw BadParameters("degree exceeds " + std::to_string(max_degree));
      }
      std::vector<char> seen(images.size(), 0);
      for (Point p : images) {
        if (p >= images.size() || seen[p]) {
          throw BadParameters("images do not form a bijection");
        }
        seen[p] = 1;
      }
    }
  }

  Perm::Perm(std::size_t degree) : images_(degree) {
    if (degree > max_degree) {
      throw BadParameters("degree exceeds " + std::to_string(max_degree));
    }
    std::iota(images_.begin(), images_.end(), Point(0));
  }

  Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
    validate(images_);
  }

  Perm::Perm(std::initializer_list<int> images) {
    images_.reserve(images.size());
    for (int i : images) {
      if (i < 0) throw BadParameters("negative point");
      images_.push_back(static_cast<Point>(i));
    }
    validate(images_);
  }

  Perm Perm::from_cycles(std::size_t degree,
                         const std::vector<std::vector<int>> &cycles) {
    Perm p(degree);
    std::vector<char> used(degree, 0);
    for (const auto &cycle : cycles) {
      for (std::size_t i(0); i < cycle.size(); ++i) {
        int a(cycle[i]), b(cycle[(i + 1) % cycle.size()]);
        if (a < 0 || static_cast<std::size_t>(a) >= degree || used[a]) {
          throw BadParameters("bad cycle notation");
        }
        used[a] = 1;
        p.images_[a] = static_cast<Point>(b);
      }
    }
    validate(p.images_);
    return p;
  }

  Perm Perm::from_images(std::span<const Point> images) {
    Perm p;
    p.images_.assign(images.begin(), images.end());
    return p;
  }

  Perm Perm::operator*(const Perm &b) const {
    if (b.degree() != degree()) throw BadParameters("degree mismatch");
    Perm r;
    r.images_.resize(degree());
    for (std::size_t i(0); i < degree(); ++i) r.images_[i] = images_[b.images_[i]];
    return r;
  }

  Perm Perm::inverse() const {
    Perm r;
    r.images_.resize(degree());
    for (std::size_t i(0); i < degree(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  Perm Perm::pow(std::int64_t e) const {
    Perm base(e < 0 ? inverse() : *this);
    std::uint64_t k(e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e));
    Perm r(degree());
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  bool Perm::is_identity() const {
    for (std::size_t i(0); i < degree(); ++i) if (images_[i] != i) return false;
    return true;
  }

  std::uint64_t Perm::order() const { return perm_order(images_); }

  std::uint64_t perm_order(std::span<const Point> images) {
    std::uint64_t result(1);
    std::vector<char> seen(images.size(), 0);
    for (std::size_t i(0); i < images.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len(0);
      for (std::size_t j(i); !seen[j]; j = images[j]) {
        seen[j] = 1;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  std::ostream &operator<<(std::ostream &stream, const Perm &p) {
    std::vector<char> seen(p.degree(), 0);
    bool any(false);
    for (std::size_t i(0); i < p.degree(); ++i) {
      if (seen[i] || p(i) == i) continue;
      stream << "(";
      for (std::size_t j(i); !seen[j]; j = p(j)) {
        seen[j] = 1;
        if (j != i) stream << " ";
        stream << j;
      }
      stream << ")";
      any = true;
    }
    if (!any) stream << "()";
    return stream;
  }

  Perm conjugate(const Perm &g, const Perm &x) { return g * x * g.inverse(); }

  Perm commutator(const Perm &x, const Perm &y) {
    return x * y * x.inverse() * y.inverse();
  }

}
