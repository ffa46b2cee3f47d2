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

#include "modular.hpp"

#include <sylowscope/errors.hpp>
#include <sylowscope/numtheory.hpp>

#include <algorithm>

namespace sylowscope::modular {

  namespace {
    using Poly = std::vector<std::uint64_t>;

    void trim(Poly &p) {
      while (!p.empty() && p.back() == 0) p.pop_back();
    }

    Poly poly_mod(const Field &f, Poly a, const Poly &m) {
      trim(a);
      std::size_t dm(m.size() - 1);
      std::uint64_t lead_inv(f.inv(m.back()));
      while (a.size() > dm) {
        std::uint64_t c(f.mul(a.back(), lead_inv));
        std::size_t shift(a.size() - 1 - dm);
        for (std::size_t i(0); i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
        trim(a);
      }
      return a;
    }

    Poly poly_mulmod(const Field &f, const Poly &a, const Poly &b, const Poly &m) {
      if (a.empty() || b.empty()) return {};
      Poly c(a.size() + b.size() - 1, 0);
      for (std::size_t i(0); i < a.size(); ++i)
        for (std::size_t j(0); j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
      return poly_mod(f, std::move(c), m);
    }

    Poly poly_powmod(const Field &f, Poly base, std::uint64_t e, const Poly &m) {
      Poly r{1};
      base = poly_mod(f, base, m);
      while (e) {
        if (e & 1) r = poly_mulmod(f, r, base, m);
        base = poly_mulmod(f, base, base, m);
        e >>= 1;
      }
      return r;
    }

    Poly poly_gcd(const Field &f, Poly a, Poly b) {
      trim(a);
      trim(b);
      while (!b.empty()) {
        Poly r(poly_mod(f, a, b));
        a = std::move(b);
        b = std::move(r);
      }
      if (!a.empty()) {
        std::uint64_t s(f.inv(a.back()));
        for (auto &c : a) c = f.mul(c, s);
      }
      return a;
    }

    Poly poly_div(const Field &f, Poly a, const Poly &b) {
      trim(a);
      std::size_t db(b.size() - 1);
      if (a.size() <= db) return {};
      Poly q(a.size() - db, 0);
      std::uint64_t lead_inv(f.inv(b.back()));
      while (a.size() > db) {
        std::uint64_t c(f.mul(a.back(), lead_inv));
        std::size_t shift(a.size() - 1 - db);
        q[shift] = c;
        for (std::size_t i(0); i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        a.pop_back();
        trim(a);
        if (a.size() <= db) break;
      }
      return q;
    }

    // splits a squarefree product of distinct linear factors
    void split(const Field &f, const Poly &g, std::vector<std::uint64_t> &out, std::mt19937_64 &rng) {
      if (g.size() <= 1) return;
      if (g.size() == 2) {
        out.push_back(f.neg(f.mul(g[0], f.inv(g[1]))));
        return;
      }
      std::uint64_t l(f.prime());
      if (l == 2) {
        for (std::uint64_t x(0); x < 2; ++x) {
          std::uint64_t v(0);
          for (std::size_t i(g.size()); i-- > 0;) v = f.add(f.mul(v, x), g[i]);
          if (!v) out.push_back(x);
        }
        return;
      }
      while (true) {
        Poly h{rng() % l, 1};
        Poly t(poly_powmod(f, h, (l - 1) / 2, g));
        if (t.empty()) t = {l - 1};
        else t[0] = f.sub(t[0], 1);
        Poly d(poly_gcd(f, g, t));
        if (d.size() > 1 && d.size() < g.size()) {
          split(f, d, out, rng);
          split(f, poly_div(f, g, d), out, rng);
          return;
        }
      }
    }
  }

  std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r(1);
    a %= l_;
    while (e) {
      if (e & 1) r = r * a % l_;
      a = a * a % l_;
      e >>= 1;
    }
    return r;
  }

  std::vector<std::uint64_t> charpoly(const Field &f, Matrix m) {
    std::size_t n(m.rows);
    // reduce to upper Hessenberg form by similarity
    for (std::size_t j(0); j + 2 <= n; ++j) {
      std::size_t piv(j + 1);
      while (piv < n && m.at(piv, j) == 0) ++piv;
      if (piv == n) continue;
      if (piv != j + 1) {
        for (std::size_t c(0); c < n; ++c) std::swap(m.at(piv, c), m.at(j + 1, c));
        for (std::size_t r(0); r < n; ++r) std::swap(m.at(r, piv), m.at(r, j + 1));
      }
      std::uint64_t inv(f.inv(m.at(j + 1, j)));
      for (std::size_t i(j + 2); i < n; ++i) {
        std::uint64_t t(f.mul(m.at(i, j), inv));
        if (!t) continue;
        for (std::size_t c(0); c < n; ++c) m.at(i, c) = f.sub(m.at(i, c), f.mul(t, m.at(j + 1, c)));
        for (std::size_t r(0); r < n; ++r) m.at(r, j + 1) = f.add(m.at(r, j + 1), f.mul(t, m.at(r, i)));
      }
    }
    // recurrence on leading principal minors
    std::vector<Poly> p(n + 1);
    p[0] = {1};
    for (std::size_t k(1); k <= n; ++k) {
      Poly next(k + 1, 0);
      // (x - h_kk) p_{k-1}
      for (std::size_t i(0); i < p[k - 1].size(); ++i) {
        next[i + 1] = f.add(next[i + 1], p[k - 1][i]);
        next[i] = f.sub(next[i], f.mul(m.at(k - 1, k - 1), p[k - 1][i]));
      }
      std::uint64_t prod(1);
      for (std::size_t i(1); i < k; ++i) {
        prod = f.mul(prod, m.at(k - i, k - i - 1));
        std::uint64_t c(f.mul(prod, m.at(k - i - 1, k - 1)));
        for (std::size_t t(0); t < p[k - i - 1].size(); ++t) next[t] = f.sub(next[t], f.mul(c, p[k - i - 1][t]));
      }
      p[k] = std::move(next);
    }
    return p[n];
  }

  std::vector<std::uint64_t> roots(const Field &f, std::vector<std::uint64_t> poly, std::mt19937_64 &rng) {
    trim(poly);
    std::vector<std::uint64_t> out;
    if (poly.size() <= 1) return out;
    // product of the distinct linear factors: gcd with x^l - x
    Poly xl(poly_powmod(f, {0, 1}, f.prime(), poly));
    xl.resize(std::max<std::size_t>(xl.size(), 2), 0);
    xl[1] = f.sub(xl[1], 1);
    trim(xl);
    Poly g(poly_gcd(f, poly, xl.empty() ? Poly{} : xl));
    if (xl.empty()) g = poly_gcd(f, poly, {});
    split(f, g, out, rng);
    std::sort(out.begin(), out.end());
    return out;
  }

  Matrix nullspace(const Field &f, Matrix m) {
    std::size_t rows(m.rows), cols(m.cols);
    std::vector<std::size_t> pivot_col;
    std::size_t r(0);
    for (std::size_t c(0); c < cols && r < rows; ++c) {
      std::size_t piv(r);
      while (piv < rows && m.at(piv, c) == 0) ++piv;
      if (piv == rows) continue;
      for (std::size_t j(0); j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
      std::uint64_t inv(f.inv(m.at(r, c)));
      for (std::size_t j(0); j < cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
      for (std::size_t i(0); i < rows; ++i) {
        if (i == r || m.at(i, c) == 0) continue;
        std::uint64_t t(m.at(i, c));
        for (std::size_t j(0); j < cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
      }
      pivot_col.push_back(c);
      ++r;
    }
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivot_col) is_pivot[c] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c(0); c < cols; ++c) if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(cols, free_cols.size());
    for (std::size_t k(0); k < free_cols.size(); ++k) {
      basis.at(free_cols[k], k) = 1;
      for (std::size_t i(0); i < pivot_col.size(); ++i) basis.at(pivot_col[i], k) = f.neg(m.at(i, free_cols[k]));
    }
    return basis;
  }

  std::vector<std::uint64_t> dft(const Field &f, const std::vector<std::uint64_t> &x, std::uint64_t w) {
    std::size_t n(x.size());
    if (n <= 1) return x;
    std::size_t r(static_cast<std::size_t>(smallest_prime_factor(n)));
    if (r == n || n <= 16) {
      std::vector<std::uint64_t> out(n, 0), powers(n);
      powers[0] = 1;
      for (std::size_t i(1); i < n; ++i) powers[i] = f.mul(powers[i - 1], w);
      for (std::size_t t(0); t < n; ++t) {
        std::uint64_t s(0);
        for (std::size_t j(0); j < n; ++j) s = (s + x[j] * powers[(j * t) % n]) % f.prime();
        out[t] = s;
      }
      return out;
    }
    std::size_t m(n / r);
    std::uint64_t wr(f.pow(w, r));
    std::vector<std::vector<std::uint64_t>> sub(r);
    for (std::size_t j(0); j < r; ++j) {
      std::vector<std::uint64_t> part(m);
      for (std::size_t s(0); s < m; ++s) part[s] = x[s * r + j];
      sub[j] = dft(f, part, wr);
    }
    std::vector<std::uint64_t> out(n, 0);
    std::uint64_t wt(1);
    for (std::size_t t(0); t < n; ++t) {
      std::uint64_t s(0), wjt(1);
      for (std::size_t j(0); j < r; ++j) {
        s = (s + wjt * sub[j][t % m]) % f.prime();
        wjt = f.mul(wjt, wt);
      }
      out[t] = s;
      wt = f.mul(wt, w);
    }
    return out;
  }

}
