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

#include <sylowscope/constructors.hpp>
#include <sylowscope/errors.hpp>
#include <sylowscope/numtheory.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <regex>

namespace sylowscope {

  namespace {
    // GF(q) for q = p^k with k <= 3, elements encoded as base-p digit strings
    class FiniteField {
    public:
      explicit FiniteField(std::uint64_t q) : q_(static_cast<int>(q)) {
        auto pk(prime_power(q));
        if (!pk || pk->second > 3) throw BadParameters("unsupported field size " + std::to_string(q));
        p_ = static_cast<int>(pk->first);
        k_ = static_cast<int>(pk->second);
        find_modulus();
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        for (int a(0); a < q_; ++a) {
          for (int b(0); b < q_; ++b) {
            add_[a * q_ + b] = encode(add_poly(decode(a), decode(b)));
            mul_[a * q_ + b] = encode(mul_poly(decode(a), decode(b)));
          }
        }
        for (int g(2); g < q_ || g == 2; ++g) {
          if (q_ == 2) { generator_ = 1; break; }
          int x(g % q_), order(1);
          for (int y(x); y != 1; y = mul(y, x)) ++order;
          if (order == q_ - 1) { generator_ = x; break; }
        }
      }

      int size() const { return q_; }
      int degree() const { return k_; }
      int add(int a, int b) const { return add_[a * q_ + b]; }
      int mul(int a, int b) const { return mul_[a * q_ + b]; }
      int neg(int a) const {
        for (int b(0); b < q_; ++b) if (add(a, b) == 0) return b;
        return 0;
      }
      int inv(int a) const {
        for (int b(1); b < q_; ++b) if (mul(a, b) == 1) return b;
        throw NotAUnit("zero has no inverse");
      }
      int pow(int a, int e) const {
        int r(1);
        for (int i(0); i < e; ++i) r = mul(r, a);
        return r;
      }
      int generator() const { return generator_; }

    private:
      using Poly = std::vector<int>;

      Poly decode(int a) const {
        Poly c(k_);
        for (int i(0); i < k_; ++i, a /= p_) c[i] = a % p_;
        return c;
      }
      int encode(const Poly &c) const {
        int a(0);
        for (int i(k_ - 1); i >= 0; --i) a = a * p_ + c[i];
        return a;
      }
      Poly add_poly(const Poly &a, const Poly &b) const {
        Poly c(k_);
        for (int i(0); i < k_; ++i) c[i] = (a[i] + b[i]) % p_;
        return c;
      }
      Poly mul_poly(const Poly &a, const Poly &b) const {
        Poly c(2 * k_, 0);
        for (int i(0); i < k_; ++i)
          for (int j(0); j < k_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
        // reduce with the monic modulus x^k = -sum m_i x^i
        for (int d(2 * k_ - 1); d >= k_; --d) {
          int t(c[d]);
          c[d] = 0;
          for (int i(0); i < k_; ++i) c[d - k_ + i] = ((c[d - k_ + i] - t * modulus_[i]) % p_ + p_) % p_;
        }
        c.resize(k_);
        return c;
      }
      void find_modulus() {
        modulus_.assign(k_, 0);
        if (k_ == 1) return;
        // degree <= 3: irreducible iff no roots in GF(p)
        int total(1);
        for (int i(0); i < k_; ++i) total *= p_;
        for (int code(0); code < total; ++code) {
          Poly m(k_);
          for (int i(0), c(code); i < k_; ++i, c /= p_) m[i] = c % p_;
          bool root(false);
          for (int x(0); x < p_ && !root; ++x) {
            int v(1);
            for (int i(k_ - 1); i >= 0; --i) v = (v * x + m[i]) % p_;
            root = v == 0;
          }
          if (!root) {
            modulus_ = m;
            return;
          }
        }
      }

      int q_, p_{0}, k_{0};
      int generator_{1};
      Poly modulus_;
      std::vector<int> add_, mul_;
    };

    using Matrix = std::vector<int>;
    using Vector = std::vector<int>;

    Vector apply(const FiniteField &f, const Matrix &m, const Vector &v) {
      std::size_t n(v.size());
      Vector r(n, 0);
      for (std::size_t i(0); i < n; ++i)
        for (std::size_t j(0); j < n; ++j) r[i] = f.add(r[i], f.mul(m[i * n + j], v[j]));
      return r;
    }

    Vector normalize(const FiniteField &f, Vector v) {
      auto lead(std::find_if(v.begin(), v.end(), [](int c) { return c != 0; }));
      int s(f.inv(*lead));
      for (int &c : v) c = f.mul(c, s);
      return v;
    }

    std::vector<Vector> all_vectors(const FiniteField &f, std::size_t n) {
      std::vector<Vector> result;
      std::size_t total(1);
      for (std::size_t i(0); i < n; ++i) total *= f.size();
      for (std::size_t code(1); code < total; ++code) {
        Vector v(n);
        for (std::size_t i(0), c(code); i < n; ++i, c /= f.size()) v[n - 1 - i] = static_cast<int>(c % f.size());
        result.push_back(std::move(v));
      }
      return result;
    }

    // action on a point set of vectors (projective points if normalized)
    Group matrix_action(const FiniteField &f, std::size_t n, const std::vector<Matrix> &mats,
                        std::vector<Vector> points, bool projective, std::string name) {
      std::map<Vector, Point> index;
      for (std::size_t i(0); i < points.size(); ++i) index[points[i]] = static_cast<Point>(i);
      std::vector<Perm> gens;
      for (const auto &m : mats) {
        std::vector<Point> images(points.size());
        for (std::size_t i(0); i < points.size(); ++i) {
          Vector w(apply(f, m, points[i]));
          if (projective) w = normalize(f, w);
          images[i] = index.at(w);
        }
        gens.emplace_back(std::move(images));
      }
      (void)n;
      return Group(std::move(gens), points.size(), std::move(name));
    }

    Matrix elementary(const FiniteField &f, std::size_t n, std::size_t i, std::size_t j, int t) {
      Matrix m(n * n, 0);
      for (std::size_t d(0); d < n; ++d) m[d * n + d] = 1;
      m[i * n + j] = t;
      (void)f;
      return m;
    }

    // elementary matrices E_ij(w^s) with s below the field degree generate SL(n,q)
    std::vector<Matrix> sl_generators(const FiniteField &f, std::size_t n) {
      std::vector<Matrix> mats;
      for (int s(0); s < f.degree(); ++s) {
        int t(f.pow(f.generator(), s));
        for (std::size_t i(0); i < n; ++i)
          for (std::size_t j(0); j < n; ++j)
            if (i != j) mats.push_back(elementary(f, n, i, j, t));
      }
      return mats;
    }

    std::vector<Vector> projective_points(const FiniteField &f, std::size_t n) {
      std::vector<Vector> points;
      for (auto &v : all_vectors(f, n)) if (normalize(f, v) == v) points.push_back(v);
      return points;
    }

    Group special_linear(std::uint64_t n, std::uint64_t q) {
      FiniteField f(q);
      return matrix_action(f, n, sl_generators(f, n), all_vectors(f, n), false,
                           "SL(" + std::to_string(n) + "," + std::to_string(q) + ")");
    }

    Group projective_special_linear(std::uint64_t n, std::uint64_t q) {
      FiniteField f(q);
      return matrix_action(f, n, sl_generators(f, n), projective_points(f, n), true,
                           "PSL(" + std::to_string(n) + "," + std::to_string(q) + ")");
    }

    // unitary group for the antidiagonal hermitian form over GF(9)
    Group psu33() {
      FiniteField f(9);
      auto bar = [&](int a) { return f.pow(a, 3); };
      auto form = [&](const Vector &u, const Vector &v) {
        int s(0);
        for (std::size_t i(0); i < 3; ++i) s = f.add(s, f.mul(u[i], bar(v[2 - i])));
        return s;
      };
      std::vector<Matrix> mats;
      for (bool lower : {false, true}) {
        for (int a(0); a < 9; ++a) {
          for (int b(0); b < 9; ++b) {
            for (int c(0); c < 9; ++c) {
              Matrix m{1, a, b, 0, 1, c, 0, 0, 1};
              if (lower) m = {1, 0, 0, a, 1, 0, b, c, 1};
              if (a == 0 && b == 0 && c == 0) continue;
              bool unitary(true);
              for (std::size_t i(0); i < 3 && unitary; ++i) {
                for (std::size_t j(0); j < 3 && unitary; ++j) {
                  Vector ei(3, 0), ej(3, 0);
                  ei[i] = 1;
                  ej[j] = 1;
                  unitary = form(apply(f, m, ei), apply(f, m, ej)) == form(ei, ej);
                }
              }
              if (unitary) mats.push_back(m);
            }
          }
        }
      }
      std::vector<Vector> points;
      for (auto &v : projective_points(f, 3)) if (form(v, v) == 0) points.push_back(v);
      return matrix_action(f, 3, mats, points, true, "PSU(3,3)");
    }

    Group symmetric(std::size_t n) {
      std::vector<Point> t(n), c(n);
      for (std::size_t i(0); i < n; ++i) {
        t[i] = static_cast<Point>(i);
        c[i] = static_cast<Point>((i + 1) % n);
      }
      std::swap(t[0], t[1]);
      return Group({Perm(t), Perm(c)}, n, "S" + std::to_string(n));
    }

    Group alternating(std::size_t n) {
      std::vector<Point> t(n), c(n);
      for (std::size_t i(0); i < n; ++i) t[i] = c[i] = static_cast<Point>(i);
      t[0] = 1; t[1] = 2; t[2] = 0;
      // (0 1 ... n-1) for odd n, (1 2 ... n-1) for even n
      std::size_t start(n % 2 ? 0 : 1);
      for (std::size_t i(start); i < n; ++i) c[i] = static_cast<Point>(i + 1 < n ? i + 1 : start);
      return Group({Perm(t), Perm(c)}, n, "A" + std::to_string(n));
    }

    // affine maps of GF(3)^2, point a + 3b
    Perm affine3(int m00, int m01, int m10, int m11, int t0 = 0, int t1 = 0) {
      std::vector<Point> images(9);
      for (int a(0); a < 3; ++a)
        for (int b(0); b < 3; ++b) {
          int x((m00 * a + m01 * b + t0) % 3), y((m10 * a + m11 * b + t1) % 3);
          images[a + 3 * b] = static_cast<Point>(x + 3 * y);
        }
      return Perm(std::move(images));
    }

    Group m9() {
      return Group({affine3(1, 0, 0, 1, 1, 0), affine3(1, 0, 0, 1, 0, 1),
                    affine3(0, 2, 1, 0), affine3(1, 1, 1, 2)}, 9, "M9");
    }

    const std::map<std::string, std::function<Group()>> &registry() {
      static const std::map<std::string, std::function<Group()>> table = [] {
        std::map<std::string, std::function<Group()>> t;
        t["S3"] = [] { return symmetric(3); };
        t["S4"] = [] { return symmetric(4); };
        t["S5"] = [] { return symmetric(5); };
        t["A4"] = [] { return alternating(4); };
        t["A5"] = [] { return alternating(5); };
        t["A6"] = [] { return alternating(6); };
        t["A7"] = [] { return alternating(7); };
        t["GL(3,2)"] = [] { return projective_special_linear(3, 2).renamed("GL(3,2)"); };
        t["PSL(3,3)"] = [] { return projective_special_linear(3, 3); };
        t["PSU(3,3)"] = [] { return psu33(); };
        t["M9"] = [] { return m9(); };
        t["A4:C4"] = [] {
          Group a4(alternating(4));
          Group c4(cyclic(4));
          return semidirect(a4, c4, conjugation_action(a4, {Perm{1, 0, 2, 3}})).renamed("A4:C4");
        };
        t["M9:C9"] = [] {
          Group n(m9());
          Group c9(cyclic(9));
          return semidirect(n, c9, conjugation_action(n, {affine3(1, 1, 0, 1)})).renamed("M9:C9");
        };
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
          std::string s(std::to_string(q));
          t["SL(2," + s + ")"] = [q] { return special_linear(2, q); };
          t["PSL(2," + s + ")"] = [q] { return projective_special_linear(2, q); };
        }
        return t;
      }();
      return table;
    }
  }

  Group named(const std::string &name) {
    const auto &table(registry());
    auto it(table.find(name));
    if (it != table.end()) return it->second();
    std::smatch m;
    static const std::regex family(R"((C|D|SD|Q)(\d+))");
    if (std::regex_match(name, m, family)) {
      std::uint64_t n(std::stoull(m[2]));
      if (m[1] == "C") return cyclic(n);
      if (m[1] == "D") return dihedral(n);
      if (m[1] == "SD") return semidihedral(n);
      return generalized_quaternion(n);
    }
    throw UnknownName("no catalog group named '" + name + "'");
  }

  std::vector<std::string> catalog() {
    std::vector<std::string> names;
    for (const auto &[name, make] : registry()) names.push_back(name);
    return names;
  }

}
