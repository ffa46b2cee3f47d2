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

#include <sylowscope/chartab.hpp>
#include <sylowscope/numtheory.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <numeric>
#include <unordered_map>

namespace sylowscope {

  namespace {
    struct PoolIndex {
      const std::vector<Cyclotomic> &pool;
      std::unordered_multimap<std::size_t, std::uint32_t> by_hash;

      explicit PoolIndex(const std::vector<Cyclotomic> &p) : pool(p) {
        for (std::uint32_t i(0); i < p.size(); ++i) by_hash.emplace(p[i].hash(), i);
      }
      std::optional<std::uint32_t> find(const Cyclotomic &v) const {
        auto [lo, hi] = by_hash.equal_range(v.hash());
        for (auto it(lo); it != hi; ++it) if (pool[it->second] == v) return it->second;
        return std::nullopt;
      }
    };

    std::vector<std::uint64_t> galois_generators(std::uint64_t e) {
      std::vector<std::uint64_t> gens;
      for (auto q : prime_divisors(e))
        for (auto u : local_unit_generators(e, q, 0)) gens.push_back(u);
      return gens;
    }

    std::size_t hash_ids(const std::uint32_t *ids, std::size_t n) {
      std::size_t h(n);
      for (std::size_t i(0); i < n; ++i) h = h * 0x9e3779b97f4a7c15ULL + ids[i] + 1;
      return h;
    }

    // rows permuted by every Galois automorphism of the value field
    std::optional<std::vector<std::vector<std::uint32_t>>> galois_pool_maps(const CharacterTable &t) {
      PoolIndex index(t.pool());
      std::vector<std::vector<std::uint32_t>> maps;
      for (auto u : galois_generators(t.modulus())) {
        std::vector<std::uint32_t> m(t.pool().size());
        for (std::uint32_t i(0); i < m.size(); ++i) {
          auto found(index.find(t.pool()[i].galois(static_cast<std::int64_t>(u))));
          if (!found) return std::nullopt;
          m[i] = *found;
        }
        maps.push_back(std::move(m));
      }
      return maps;
    }

    bool galois_stable(const CharacterTable &t) {
      auto maps(galois_pool_maps(t));
      if (!maps) return false;
      std::size_t k(t.size());
      const auto &ids(t.contents().value_ids);
      std::unordered_multimap<std::size_t, std::size_t> rows;
      for (std::size_t i(0); i < k; ++i) rows.emplace(hash_ids(&ids[i * k], k), i);
      std::vector<std::uint32_t> image(k);
      for (const auto &m : *maps) {
        for (std::size_t i(0); i < k; ++i) {
          for (std::size_t c(0); c < k; ++c) image[c] = m[ids[i * k + c]];
          auto [lo, hi] = rows.equal_range(hash_ids(image.data(), k));
          bool found(false);
          for (auto it(lo); it != hi && !found; ++it) {
            found = std::equal(image.begin(), image.end(), ids.begin() + static_cast<std::ptrdiff_t>(it->second * k));
          }
          if (!found) return false;
        }
      }
      return true;
    }

    struct Structural {
      bool degree_sum{true}, degrees_divide{true}, first_row_trivial{true}, power_maps_consistent{true};
    };

    Structural structural_checks(const CharacterTable &t) {
      Structural s;
      std::size_t k(t.size());
      std::uint64_t n(t.group_order()), sizes(0), squares(0), e(1);
      for (auto c : t.class_sizes()) sizes += c;
      for (auto o : t.element_orders()) e = std::lcm(e, o);
      for (std::size_t i(0); i < k; ++i) {
        auto r(t.value(i, 0).as_rational());
        if (!r || !r->is_integer() || !r->is_small() || r->sign() <= 0) {
          s.degree_sum = s.degrees_divide = false;
          continue;
        }
        auto d(static_cast<std::uint64_t>(r->small_num()));
        squares += d * d;
        if (n % d) s.degrees_divide = false;
      }
      if (squares != n || sizes != n || t.class_sizes()[0] != 1) s.degree_sum = false;
      for (std::size_t c(0); c < k; ++c) if (t.value(0, c) != Cyclotomic(1)) s.first_row_trivial = false;

      if (t.element_orders()[0] != 1 || t.modulus() % e) s.power_maps_consistent = false;
      for (auto q : prime_divisors(e)) if (!t.power_maps().count(q)) s.power_maps_consistent = false;
      PoolIndex index(t.pool());
      for (const auto &[q, map] : t.power_maps()) {
        if (map.size() != k) {
          s.power_maps_consistent = false;
          continue;
        }
        for (std::size_t c(0); c < k && s.power_maps_consistent; ++c) {
          std::uint64_t o(t.element_orders()[c]), image(map[c]);
          if (image >= k || t.element_orders()[image] != o / std::gcd(o, q) ||
              t.centralizer_order(image) % t.centralizer_order(c)) {
            s.power_maps_consistent = false;
            break;
          }
          if (o % q == 0) continue;
          // coprime powers act on columns as zeta -> zeta^u for a unit u = q mod o
          std::uint64_t u(q % t.modulus());
          while (std::gcd(u, t.modulus()) != 1) u = (u + o) % t.modulus();
          for (std::size_t i(0); i < k; ++i) {
            if (t.value(i, image) != t.value(i, c).galois(static_cast<std::int64_t>(u))) {
              s.power_maps_consistent = false;
              break;
            }
          }
        }
      }
      return s;
    }

    std::uint64_t eval_mod(const Cyclotomic &v, std::uint64_t l, const std::vector<std::uint64_t> &powers,
                           bool conjugate) {
      std::uint64_t s(0), e(powers.size());
      auto coeffs(v.dense_coeffs());
      if (v.modulus() != e) coeffs = v.promote(e).dense_coeffs();
      for (std::size_t t(0); t < coeffs.size(); ++t) {
        if (coeffs[t].is_zero()) continue;
        std::uint64_t z(powers[conjugate ? (e - t) % e : t]);
        s = (s + mulmod(coeffs[t].mod(l), z, l)) % l;
      }
      return s;
    }

    double l1_norm(const Cyclotomic &v) {
      double s(0);
      for (const auto &t : v.terms()) s += std::fabs(t.coeff.to_double());
      return s;
    }

    using Dense = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    void reduce(Dense &m, double l) {
      for (Eigen::Index i(0); i < m.size(); ++i) m.data()[i] = std::fmod(m.data()[i], l);
    }

    // Gram relations modulo primes l = 1 mod e whose product beats the archimedean bound
    void modular_certificate(const CharacterTable &t, IntegrityReport &report) {
      std::size_t k(t.size());
      std::uint64_t e(t.modulus());
      const auto &ids(t.contents().value_ids);
      std::vector<double> norms;
      for (const auto &v : t.pool()) norms.push_back(l1_norm(v));
      double row_bound(0), col_bound(0), max_norm(0);
      for (std::size_t c(0); c < k; ++c) {
        double m(0);
        for (std::size_t i(0); i < k; ++i) m = std::max(m, norms[ids[i * k + c]]);
        row_bound += static_cast<double>(t.class_sizes()[c]) * m * m;
        max_norm = std::max(max_norm, m);
      }
      row_bound += static_cast<double>(t.group_order());
      col_bound = static_cast<double>(k) * max_norm * max_norm + static_cast<double>(t.group_order());
      double bound(std::max(row_bound, col_bound));

      std::uint64_t limit(static_cast<std::uint64_t>(std::sqrt(9007199254740992.0 / static_cast<double>(k + 1))));
      std::uint64_t l(e);
      double product(1);
      bool rows_ok(true), cols_ok(true);
      while (product <= bound) {
        l = prime_one_mod(e, l);
        if (l > limit) {
          rows_ok = cols_ok = false;
          break;
        }
        report.primes.push_back(l);
        product *= static_cast<double>(l);
        std::uint64_t z(powmod(primitive_root(l), (l - 1) / e, l));
        std::vector<std::uint64_t> powers(e);
        powers[0] = 1;
        for (std::uint64_t i(1); i < e; ++i) powers[i] = mulmod(powers[i - 1], z, l);
        std::vector<double> value(t.pool().size()), conj(t.pool().size());
        for (std::size_t i(0); i < t.pool().size(); ++i) {
          value[i] = static_cast<double>(eval_mod(t.pool()[i], l, powers, false));
          conj[i] = static_cast<double>(eval_mod(t.pool()[i], l, powers, true));
        }
        Dense x(k, k), xbar(k, k), weighted(k, k);
        for (std::size_t i(0); i < k; ++i) {
          for (std::size_t c(0); c < k; ++c) {
            auto id(ids[i * k + c]);
            x(i, c) = value[id];
            xbar(i, c) = conj[id];
            weighted(i, c) = static_cast<double>(mulmod(static_cast<std::uint64_t>(value[id]), t.class_sizes()[c] % l, l));
          }
        }
        double lf(static_cast<double>(l));
        Dense rows(weighted * xbar.transpose());
        reduce(rows, lf);
        Dense cols(xbar.transpose() * x);
        reduce(cols, lf);
        double order_mod(static_cast<double>(t.group_order() % l));
        for (std::size_t i(0); i < k; ++i) {
          for (std::size_t j(0); j < k; ++j) {
            if (rows(i, j) != (i == j ? order_mod : 0.0)) rows_ok = false;
            double centralizer(static_cast<double>(t.centralizer_order(i) % l));
            if (cols(i, j) != (i == j ? centralizer : 0.0)) cols_ok = false;
          }
        }
        if (!rows_ok && !cols_ok) break;
      }
      report.row_orthogonal = rows_ok;
      report.column_orthogonal = cols_ok;
    }
  }

  IntegrityReport check_integrity(const CharacterTable &table) {
    IntegrityReport report;
    report.integral = std::all_of(table.pool().begin(), table.pool().end(), [](const auto &v) { return v.is_integral(); });
    report.galois_stable = galois_stable(table);
    auto s(structural_checks(table));
    report.degree_sum = s.degree_sum;
    report.degrees_divide = s.degrees_divide;
    report.first_row_trivial = s.first_row_trivial;
    report.power_maps_consistent = s.power_maps_consistent;
    // reduction mod primes needs integral values, the single embedding needs Galois stability
    if (report.integral && report.galois_stable) modular_certificate(table, report);
    return report;
  }

  IntegrityReport check_integrity_exact(const CharacterTable &table) {
    IntegrityReport report;
    report.integral = std::all_of(table.pool().begin(), table.pool().end(), [](const auto &v) { return v.is_integral(); });
    report.galois_stable = galois_stable(table);
    auto s(structural_checks(table));
    report.degree_sum = s.degree_sum;
    report.degrees_divide = s.degrees_divide;
    report.first_row_trivial = s.first_row_trivial;
    report.power_maps_consistent = s.power_maps_consistent;
    std::size_t k(table.size());
    std::vector<Cyclotomic> bar;
    for (const auto &v : table.pool()) bar.push_back(v.conj());
    const auto &ids(table.contents().value_ids);
    report.row_orthogonal = report.column_orthogonal = true;
    for (std::size_t i(0); i < k; ++i) {
      for (std::size_t j(i); j < k; ++j) {
        Cyclotomic r, c;
        for (std::size_t m(0); m < k; ++m) {
          r += (table.pool()[ids[i * k + m]] * bar[ids[j * k + m]])
                 .scaled(Rational(static_cast<std::int64_t>(table.class_sizes()[m])));
          c += bar[ids[m * k + i]] * table.pool()[ids[m * k + j]];
        }
        if (r != Cyclotomic(i == j ? static_cast<std::int64_t>(table.group_order()) : 0)) report.row_orthogonal = false;
        if (c != Cyclotomic(i == j ? static_cast<std::int64_t>(table.centralizer_order(i)) : 0)) {
          report.column_orthogonal = false;
        }
      }
    }
    return report;
  }

}
