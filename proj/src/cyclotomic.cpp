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
#include <sylowscope/numtheory.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sylowscope {

  namespace {
    using Sparse = std::vector<std::pair<std::uint32_t, std::int64_t>>;

    struct FieldData {
      std::uint64_t phi;
      std::vector<Sparse> reductions;  // indexed by exponent mod n
    };

    std::mutex cache_mutex;
    std::map<std::uint64_t, std::unique_ptr<const std::vector<std::int64_t>>> polynomials;
    std::map<std::uint64_t, std::unique_ptr<const FieldData>> fields;

    std::vector<std::int64_t> compute_polynomial(std::uint64_t n) {
      std::vector<std::int64_t> p(n + 1, 0);
      p[0] = -1;
      p[n] = 1;
      for (std::uint64_t d : divisors(n)) {
        if (d == n) continue;
        const auto &q(cyclotomic_polynomial(d));
        std::size_t dq(q.size() - 1);
        // exact division by a monic polynomial
        std::vector<std::int64_t> quotient(p.size() - dq, 0);
        for (std::size_t i(p.size() - 1); i + 1 > dq; --i) {
          std::int64_t c(p[i]);
          quotient[i - dq] = c;
          if (c) for (std::size_t j(0); j <= dq; ++j) p[i - dq + j] -= c * q[j];
          if (i == dq) break;
        }
        p = std::move(quotient);
      }
      return p;
    }

    const FieldData &field(std::uint64_t n) {
      {
        std::lock_guard lock(cache_mutex);
        auto it(fields.find(n));
        if (it != fields.end()) return *it->second;
      }
      const auto &poly(cyclotomic_polynomial(n));
      auto data(std::make_unique<FieldData>());
      std::uint64_t phi(poly.size() - 1);
      data->phi = phi;
      data->reductions.resize(n);
      Sparse tail;
      for (std::uint32_t i(0); i < phi; ++i) if (poly[i]) tail.emplace_back(i, poly[i]);
      std::vector<std::int64_t> acc(phi, 0);
      for (std::uint64_t j(0); j < n; ++j) {
        if (j < phi) {
          data->reductions[j] = {{static_cast<std::uint32_t>(j), 1}};
          continue;
        }
        for (auto [e, c] : data->reductions[j - 1]) {
          if (e + 1 < phi) acc[e + 1] += c;
          else for (auto [i, ci] : tail) acc[i] -= c * ci;
        }
        Sparse r;
        for (std::uint32_t i(0); i < phi; ++i) {
          if (acc[i]) r.emplace_back(i, acc[i]);
          acc[i] = 0;
        }
        data->reductions[j] = std::move(r);
      }
      std::lock_guard lock(cache_mutex);
      auto [it, inserted] = fields.emplace(n, std::move(data));
      return *it->second;
    }

    // dense scratch over the power basis
    class Accumulator {
    public:
      explicit Accumulator(std::uint64_t n) : n_(n), field_(field(n)), values_(field_.phi), used_(field_.phi, 0) {}

      void add_power(std::uint64_t exponent, const Rational &c) {
        for (auto [i, coeff] : field_.reductions[exponent % n_]) {
          if (!used_[i]) {
            used_[i] = 1;
            touched_.push_back(i);
          }
          values_[i] += coeff == 1 ? c : c * Rational(coeff);
        }
      }

      std::vector<Term> terms() {
        std::sort(touched_.begin(), touched_.end());
        std::vector<Term> result;
        for (auto i : touched_) if (!values_[i].is_zero()) result.push_back({i, values_[i]});
        return result;
      }

    private:
      std::uint64_t n_;
      const FieldData &field_;
      std::vector<Rational> values_;
      std::vector<char> used_;
      std::vector<std::uint32_t> touched_;
    };

    std::uint64_t unit_representative(std::int64_t k, std::uint64_t n) {
      std::int64_t m(static_cast<std::int64_t>(n));
      std::uint64_t r(static_cast<std::uint64_t>(((k % m) + m) % m));
      if (std::gcd(r, n) != 1 && n > 1) throw NotAUnit(std::to_string(k) + " is not a unit mod " + std::to_string(n));
      return r;
    }
  }

  const std::vector<std::int64_t> &cyclotomic_polynomial(std::uint64_t n) {
    if (n == 0) throw BadParameters("cyclotomic polynomial of index 0");
    {
      std::lock_guard lock(cache_mutex);
      auto it(polynomials.find(n));
      if (it != polynomials.end()) return *it->second;
    }
    auto p(std::make_unique<const std::vector<std::int64_t>>(compute_polynomial(n)));
    std::lock_guard lock(cache_mutex);
    auto [it, inserted] = polynomials.emplace(n, std::move(p));
    return *it->second;
  }

  const std::vector<std::pair<std::uint32_t, std::int64_t>> &power_reduction(std::uint64_t n, std::uint64_t j) {
    return field(n).reductions[j % n];
  }

  Cyclotomic::Cyclotomic(const Rational &r) {
    if (!r.is_zero()) terms_.push_back({0, r});
  }

  Cyclotomic Cyclotomic::root_of_unity(std::uint64_t n, std::int64_t k) {
    if (n == 0) throw BadParameters("root of unity of order 0");
    std::int64_t m(static_cast<std::int64_t>(n));
    return from_exponent_sum(n, {{static_cast<std::uint64_t>(((k % m) + m) % m), Rational(1)}});
  }

  Cyclotomic Cyclotomic::from_exponent_sum(std::uint64_t n,
                                           const std::vector<std::pair<std::uint64_t, Rational>> &sum) {
    Accumulator acc(n);
    for (const auto &[k, c] : sum) if (!c.is_zero()) acc.add_power(k, c);
    Cyclotomic r;
    r.n_ = n;
    r.terms_ = acc.terms();
    return r;
  }

  Cyclotomic Cyclotomic::from_integers(std::uint64_t n, std::span<const std::int64_t> by_exponent) {
    const FieldData &f(field(n));
    std::vector<__int128> acc(f.phi, 0);
    for (std::size_t k(0); k < by_exponent.size(); ++k) {
      std::int64_t c(by_exponent[k]);
      if (!c) continue;
      for (auto [i, coeff] : f.reductions[k % n]) acc[i] += static_cast<__int128>(c) * coeff;
    }
    Cyclotomic r;
    r.n_ = n;
    for (std::uint32_t i(0); i < f.phi; ++i) {
      if (!acc[i]) continue;
      if (acc[i] > INT64_MAX || acc[i] < -INT64_MAX) throw InternalInconsistency("integer coefficient overflow");
      r.terms_.push_back({i, Rational(static_cast<std::int64_t>(acc[i]))});
    }
    return r;
  }

  Cyclotomic Cyclotomic::from_basis(std::uint64_t n, const std::vector<Rational> &coeffs) {
    if (coeffs.size() != field(n).phi) throw FormatError("coefficient count differs from phi(n)");
    Cyclotomic r;
    r.n_ = n;
    for (std::uint32_t i(0); i < coeffs.size(); ++i) if (!coeffs[i].is_zero()) r.terms_.push_back({i, coeffs[i]});
    return r;
  }

  std::vector<Rational> Cyclotomic::dense_coeffs() const {
    std::vector<Rational> d(field(n_).phi);
    for (const auto &t : terms_) d[t.exponent] = t.coeff;
    return d;
  }

  bool Cyclotomic::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0);
  }

  std::optional<Rational> Cyclotomic::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
  }

  bool Cyclotomic::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term &t) { return t.coeff.is_integer(); });
  }

  Cyclotomic Cyclotomic::promote(std::uint64_t m) const {
    if (m == n_) return *this;
    if (m == 0 || m % n_) throw BadParameters("promotion needs a multiple of the modulus");
    std::uint64_t s(m / n_);
    Accumulator acc(m);
    for (const auto &t : terms_) acc.add_power(t.exponent * s, t.coeff);
    Cyclotomic r;
    r.n_ = m;
    r.terms_ = acc.terms();
    return r;
  }

  Cyclotomic Cyclotomic::galois(std::int64_t k) const {
    std::uint64_t u(unit_representative(k, n_));
    if (u == 1 % n_ || is_rational()) return *this;
    Accumulator acc(n_);
    for (const auto &t : terms_) acc.add_power(t.exponent * u, t.coeff);
    Cyclotomic r;
    r.n_ = n_;
    r.terms_ = acc.terms();
    return r;
  }

  Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto &t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Cyclotomic Cyclotomic::scaled(const Rational &c) const {
    if (c.is_zero()) return Cyclotomic();
    Cyclotomic r(*this);
    for (auto &t : r.terms_) t.coeff *= c;
    return r;
  }

  Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b) {
    if (a.n_ != b.n_) {
      std::uint64_t m(std::lcm(a.n_, b.n_));
      return a.promote(m) + b.promote(m);
    }
    Cyclotomic r;
    r.n_ = a.n_;
    auto i(a.terms_.begin()), j(b.terms_.begin());
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent < j->exponent)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->exponent < i->exponent) {
        r.terms_.push_back(*j++);
      } else {
        Rational s(i->coeff + j->coeff);
        if (!s.is_zero()) r.terms_.push_back({i->exponent, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b) { return a + (-b); }

  Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
    if (a.n_ != b.n_) {
      if (a.is_rational()) return b.scaled(a.as_rational().value());
      if (b.is_rational()) return a.scaled(b.as_rational().value());
      std::uint64_t m(std::lcm(a.n_, b.n_));
      return a.promote(m) * b.promote(m);
    }
    if (a.is_rational()) return b.scaled(a.as_rational().value());
    if (b.is_rational()) return a.scaled(b.as_rational().value());
    Accumulator acc(a.n_);
    for (const auto &s : a.terms_)
      for (const auto &t : b.terms_) acc.add_power(s.exponent + t.exponent, s.coeff * t.coeff);
    Cyclotomic r;
    r.n_ = a.n_;
    r.terms_ = acc.terms();
    return r;
  }

  bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
    if (a.n_ == b.n_) return a.terms_ == b.terms_;
    if (a.is_rational() && b.is_rational()) return a.terms_ == b.terms_;
    if (a.is_rational() != b.is_rational()) return false;
    std::uint64_t m(std::lcm(a.n_, b.n_));
    return a.promote(m).terms_ == b.promote(m).terms_;
  }

  std::size_t Cyclotomic::hash() const {
    std::size_t h(n_ * 0x9E3779B97F4A7C15ull);
    for (const auto &t : terms_) h = (h ^ (t.exponent + 0x51ed27ull * t.coeff.hash())) * 0x100000001b3ull;
    return h;
  }

  std::string Cyclotomic::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream s;
    bool first(true);
    for (const auto &t : terms_) {
      std::string c(t.coeff.to_string());
      bool negative(c[0] == '-');
      if (!first) s << (negative ? " - " : " + ");
      else if (negative) s << "-";
      if (negative) c.erase(0, 1);
      if (t.exponent == 0) s << c;
      else {
        if (c != "1") s << c << "*";
        s << "z" << n_;
        if (t.exponent != 1) s << "^" << t.exponent;
      }
      first = false;
    }
    return s.str();
  }

  std::ostream &operator<<(std::ostream &stream, const Cyclotomic &c) { return stream << c.to_string(); }

  // rationality

  std::vector<std::uint64_t> local_unit_generators(std::uint64_t n, std::uint64_t q, std::uint64_t v) {
    auto [qe, rest] = p_part(n, q);
    int e(qe == 1 ? 0 : log_exact(qe, q));
    std::vector<std::uint64_t> local;
    if (static_cast<int>(v) >= e) return {};
    if (q == 2) {
      if (e == 1) return {};
      if (v <= 1) {
        local.push_back(qe - 1);
        if (e >= 3) local.push_back(5);
      } else {
        local.push_back(1 + ipow(2, static_cast<unsigned>(v)));
      }
    } else if (v == 0) {
      std::uint64_t g(primitive_root(q));
      if (e >= 2 && powmod(g, q - 1, q * q) == 1) g += q;
      local.push_back(g);
    } else {
      local.push_back(1 + ipow(q, static_cast<unsigned>(v)));
    }
    // k = g mod q^e and k = 1 mod rest
    std::vector<std::uint64_t> lifted;
    for (std::uint64_t g : local) {
      g %= qe;
      std::uint64_t t(rest == 1 ? g - 1 : mulmod((g + qe - 1) % qe, invmod(rest % qe, qe), qe));
      lifted.push_back((1 + rest * t) % n);
    }
    return lifted;
  }

  std::uint64_t feit_number(const std::vector<Cyclotomic> &values, std::uint64_t n) {
    std::vector<Cyclotomic> promoted;
    for (const auto &v : values) {
      if (n % v.modulus()) throw BadParameters("value does not lie in Q(zeta_n)");
      if (!v.is_rational()) promoted.push_back(v.promote(n));
    }
    std::uint64_t f(1);
    if (promoted.empty()) return 1;
    for (auto [q, e] : factorize(n)) {
      for (int v(0); v <= e; ++v) {
        auto gens(local_unit_generators(n, q, static_cast<std::uint64_t>(v)));
        bool fixed(std::all_of(promoted.begin(), promoted.end(), [&](const Cyclotomic &x) {
          return std::all_of(gens.begin(), gens.end(), [&](std::uint64_t k) {
            return x.galois(static_cast<std::int64_t>(k)) == x;
          });
        }));
        if (fixed) {
          f *= ipow(q, static_cast<unsigned>(v));
          break;
        }
      }
    }
    return f;
  }

  std::uint64_t conductor(const Cyclotomic &value) { return feit_number({value}, value.modulus()); }

  RationalityData rationality(const std::vector<Cyclotomic> &values, std::uint64_t n) {
    RationalityData data{n, {}, 1, feit_number(values, n)};
    std::uint64_t f(data.feit_number);
    std::vector<Cyclotomic> promoted;
    for (const auto &v : values) if (!v.is_rational()) promoted.push_back(v.promote(n));
    std::vector<char> fixes(f, 0);
    std::uint64_t count(0);
    for (std::uint64_t u : units_mod(f)) {
      std::uint64_t k(u == 0 ? 1 : u);
      while (std::gcd(k, n) != 1) k += f;
      bool ok(std::all_of(promoted.begin(), promoted.end(), [&](const Cyclotomic &x) {
        return x.galois(static_cast<std::int64_t>(k)) == x;
      }));
      if (ok) {
        fixes[u] = 1;
        ++count;
      }
    }
    data.field_degree = euler_phi(f) / count;
    for (std::uint64_t k : units_mod(n)) if (fixes[k % f]) data.stabilizer.push_back(k);
    return data;
  }

}
