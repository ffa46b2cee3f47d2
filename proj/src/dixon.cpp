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

// Dixon-Schneider over GF(l) with l = 1 mod exp(G), split first by central characters

#include <sylowscope/chartab.hpp>
#include <sylowscope/errors.hpp>
#include <sylowscope/numtheory.hpp>

#include "modular.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace sylowscope {

  namespace {
    using modular::Field;
    using modular::Matrix;
    using SparseRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

    // orbits of the center acting on classes by multiplication
    struct CentralAction {
      std::vector<std::uint32_t> gen_order;               // order of each generator modulo the earlier ones
      std::vector<std::vector<std::uint64_t>> characters;  // exponent of lambda(z_i) in Z/e
      std::vector<std::uint32_t> orbit_of;                 // per class
      std::vector<std::uint32_t> orbit_rep;
      std::vector<std::vector<std::uint64_t>> word;        // per class, z with z K_rep = K_c
      std::vector<std::vector<std::vector<std::uint64_t>>> stabilizer;  // per orbit
    };

    std::uint64_t evaluate(const std::vector<std::uint64_t> &lambda, const std::vector<std::uint64_t> &w,
                           std::uint64_t e) {
      std::uint64_t s(0);
      for (std::size_t i(0); i < w.size(); ++i) s = (s + lambda[i] * w[i]) % e;
      return s;
    }

    CentralAction central_action(const Group &g, std::uint64_t e) {
      CentralAction a;
      auto z(center(g));
      std::vector<ElemId> gens;
      // members of the group generated so far, with their words
      std::unordered_map<ElemId, std::vector<std::uint64_t>> span{{identity_id, {}}};
      std::vector<std::vector<std::uint64_t>> chars{{}};
      for (ElemId zi : z.generator_ids()) {
        if (span.count(zi)) continue;
        std::uint32_t o(1);
        ElemId p(zi);
        while (!span.count(p)) {
          p = g.mul(p, zi);
          ++o;
        }
        auto base(span.at(p));
        base.resize(gens.size(), 0);
        std::unordered_map<ElemId, std::vector<std::uint64_t>> next;
        for (const auto &[h, w] : span) {
          ElemId x(h);
          for (std::uint32_t s(0); s < o; ++s) {
            auto ws(w);
            ws.resize(gens.size() + 1, 0);
            ws.back() = s;
            next.emplace(x, std::move(ws));
            x = g.mul(x, zi);
          }
        }
        span = std::move(next);
        std::vector<std::vector<std::uint64_t>> extended;
        for (const auto &lambda : chars) {
          auto padded(lambda);
          padded.resize(gens.size(), 0);
          std::uint64_t c(evaluate(padded, base, e));
          if (c % o) throw InternalInconsistency("central character does not extend");
          for (std::uint64_t t(0); t < o; ++t) {
            auto l(padded);
            l.push_back((c / o + t * (e / o)) % e);
            extended.push_back(std::move(l));
          }
        }
        chars = std::move(extended);
        gens.push_back(zi);
        a.gen_order.push_back(o);
      }
      a.characters = std::move(chars);

      const auto &classes(g.classes());
      std::size_t k(classes.size()), r(gens.size());
      std::vector<std::vector<std::uint32_t>> move(r, std::vector<std::uint32_t>(k));
      for (std::size_t i(0); i < r; ++i)
        for (std::size_t c(0); c < k; ++c) move[i][c] = g.class_of(g.mul(gens[i], classes[c].representative));

      constexpr std::uint32_t unseen(~std::uint32_t(0));
      a.orbit_of.assign(k, unseen);
      a.word.assign(k, {});
      for (std::uint32_t c0(0); c0 < k; ++c0) {
        if (a.orbit_of[c0] != unseen) continue;
        std::uint32_t orbit(static_cast<std::uint32_t>(a.orbit_rep.size()));
        a.orbit_rep.push_back(c0);
        a.stabilizer.emplace_back();
        auto &stab(a.stabilizer.back());
        a.orbit_of[c0] = orbit;
        a.word[c0].assign(r, 0);
        std::vector<std::uint32_t> queue{c0};
        for (std::size_t head(0); head < queue.size(); ++head) {
          std::uint32_t c(queue[head]);
          for (std::size_t i(0); i < r; ++i) {
            std::uint32_t d(move[i][c]);
            auto w(a.word[c]);
            w[i] = (w[i] + 1) % e;
            if (a.orbit_of[d] == unseen) {
              a.orbit_of[d] = orbit;
              a.word[d] = std::move(w);
              queue.push_back(d);
            } else {
              for (std::size_t j(0); j < r; ++j) w[j] = (w[j] + e - a.word[d][j]) % e;
              if (std::any_of(w.begin(), w.end(), [](auto x) { return x != 0; })) stab.push_back(std::move(w));
            }
          }
        }
        std::sort(stab.begin(), stab.end());
        stab.erase(std::unique(stab.begin(), stab.end()), stab.end());
      }
      return a;
    }

    std::mt19937_64 seeded(std::uint64_t order, std::uint64_t k, std::uint64_t seed) {
      std::seed_seq seq{order, order >> 32, k, seed, seed >> 32};
      return std::mt19937_64(seq);
    }

    class Solver {
    public:
      Solver(const Group &g, const DixonOptions &options)
        : g_(g), classes_(g.classes()), k_(classes_.size()), order_(g.order()), e_(g.exponent()),
          field_(prime_one_mod(e_, std::max<std::uint64_t>(2 * ceil_sqrt(order_), e_))),
          rng_(seeded(order_, k_, options.seed)) {
        std::uint64_t l(field_.prime());
        if (l >= (std::uint64_t(1) << 32)) throw CapExceeded("modular prime too large");
        zeta_ = field_.pow(primitive_root(l), (l - 1) / e_);
        zeta_pow_.resize(e_);
        zeta_pow_[0] = 1;
        for (std::uint64_t i(1); i < e_; ++i) zeta_pow_[i] = field_.mul(zeta_pow_[i - 1], zeta_);
        for (std::uint64_t i(0); i < e_; ++i) zeta_log_.emplace(zeta_pow_[i], static_cast<std::uint32_t>(i));
        std::vector<std::uint32_t> noncentral;
        for (std::uint32_t c(0); c < k_; ++c) if (classes_[c].size > 1) noncentral.push_back(c);
        std::stable_sort(noncentral.begin(), noncentral.end(),
                         [&](auto a, auto b) { return classes_[a].size < classes_[b].size; });
        splitters_ = std::move(noncentral);
        inverse_.resize(k_);
        for (std::uint32_t c(0); c < k_; ++c) inverse_[c] = g.class_of(g.inv(classes_[c].representative));
      }

      std::vector<std::vector<std::uint64_t>> characters_mod_l() {
        auto act(central_action(g_, e_));
        std::vector<std::vector<std::uint64_t>> chars;
        for (const auto &lambda : act.characters) {
          std::vector<std::uint32_t> orbits;
          for (std::uint32_t o(0); o < act.orbit_rep.size(); ++o) {
            bool ok(std::all_of(act.stabilizer[o].begin(), act.stabilizer[o].end(),
                                [&](const auto &s) { return evaluate(lambda, s, e_) == 0; }));
            if (ok) orbits.push_back(o);
          }
          std::vector<std::int64_t> coord(act.orbit_rep.size(), -1);
          for (std::size_t i(0); i < orbits.size(); ++i) coord[orbits[i]] = static_cast<std::int64_t>(i);
          // basis value at each class, zero outside admissible orbits
          std::vector<std::uint64_t> weight(k_, 0);
          std::vector<std::int64_t> where(k_, -1);
          for (std::uint32_t c(0); c < k_; ++c) {
            auto at(coord[act.orbit_of[c]]);
            if (at < 0) continue;
            where[c] = at;
            weight[c] = zeta_pow_[evaluate(lambda, act.word[c], e_)];
          }
          std::vector<std::uint32_t> reps;
          for (auto o : orbits) reps.push_back(act.orbit_rep[o]);
          split(reps, weight, where, chars);
        }
        if (chars.size() != k_) throw InternalInconsistency("number of characters differs from number of classes");
        return chars;
      }

      CharacterTable build(const DixonOptions &options) {
        auto chars(characters_mod_l());
        std::vector<std::uint64_t> degrees;
        for (auto &w : chars) degrees.push_back(to_character(w));
        std::vector<std::size_t> rank(k_);
        std::iota(rank.begin(), rank.end(), 0);
        auto trivial = [&](std::size_t i) {
          for (std::size_t m(0); m < k_; ++m) if (chars[i][m] != 1) return false;
          return true;
        };
        std::vector<char> is_trivial(k_);
        for (std::size_t i(0); i < k_; ++i) is_trivial[i] = trivial(i);
        std::stable_sort(rank.begin(), rank.end(), [&](auto a, auto b) {
          if (is_trivial[a] != is_trivial[b]) return is_trivial[a] > is_trivial[b];
          return degrees[a] < degrees[b];
        });

        TableContents t;
        t.group_order = order_;
        t.modulus = e_;
        t.strict_abstract = options.strict_abstract;
        for (const auto &c : classes_) {
          t.class_sizes.push_back(c.size);
          t.element_orders.push_back(c.element_order);
        }
        power_sequences();
        for (auto q : prime_divisors(e_)) {
          std::vector<std::uint32_t> map(k_);
          for (std::uint32_t c(0); c < k_; ++c) map[c] = sequence_[c][q % classes_[c].element_order];
          t.power_maps[q] = std::move(map);
        }
        t.value_ids.resize(k_ * k_);
        for (std::size_t i(0); i < k_; ++i) lift_row(chars[rank[i]], degrees[rank[i]], &t.value_ids[i * k_]);
        t.pool = std::move(pool_);
        return CharacterTable(std::move(t), g_);
      }

    private:
      const SparseRow &class_row(std::uint32_t j, std::uint32_t l) {
        auto key((std::uint64_t(j) << 32) | l);
        auto it(rows_.find(key));
        if (it != rows_.end()) return it->second;
        std::map<std::uint32_t, std::uint64_t> count;
        ElemId y(classes_[l].representative);
        for (ElemId x : classes_[j].members) ++count[g_.class_of(g_.mul(x, y))];
        SparseRow row;
        for (auto [m, n] : count) {
          std::uint64_t a(classes_[l].size * n);
          if (a % classes_[m].size) throw InternalInconsistency("class multiplication coefficient is not integral");
          row.emplace_back(m, (a / classes_[m].size) % field_.prime());
        }
        return rows_.emplace(key, std::move(row)).first->second;
      }

      // rows at the given classes of A_j B0, in orbit coordinates
      Matrix restricted(std::uint32_t j, const std::vector<std::uint32_t> &rows,
                        const std::vector<std::uint64_t> &weight, const std::vector<std::int64_t> &where,
                        std::size_t dim0) {
        Matrix m(rows.size(), dim0);
        for (std::size_t i(0); i < rows.size(); ++i) {
          for (auto [c, a] : class_row(j, rows[i])) {
            if (where[c] < 0) continue;
            auto &cell(m.at(i, static_cast<std::size_t>(where[c])));
            cell = field_.add(cell, field_.mul(a, weight[c]));
          }
        }
        return m;
      }

      Matrix multiply(const Matrix &a, const Matrix &b) {
        Matrix c(a.rows, b.cols);
        std::uint64_t l(field_.prime());
        for (std::size_t i(0); i < a.rows; ++i) {
          for (std::size_t t(0); t < a.cols; ++t) {
            std::uint64_t x(a.at(i, t));
            if (!x) continue;
            for (std::size_t j(0); j < b.cols; ++j) c.at(i, j) = (c.at(i, j) + x * b.at(t, j)) % l;
          }
        }
        return c;
      }

      struct Space {
        Matrix basis;                     // orbit coordinates x dim, identity on the pivots
        std::vector<std::size_t> pivots;  // positions in the coordinate list
      };

      void split(const std::vector<std::uint32_t> &reps, const std::vector<std::uint64_t> &weight,
                 const std::vector<std::int64_t> &where, std::vector<std::vector<std::uint64_t>> &out) {
        std::size_t dim0(reps.size());
        std::vector<Space> stack;
        {
          Space s{Matrix(dim0, dim0), {}};
          for (std::size_t i(0); i < dim0; ++i) {
            s.basis.at(i, i) = 1;
            s.pivots.push_back(i);
          }
          stack.push_back(std::move(s));
        }
        std::vector<Space> done;
        while (!stack.empty()) {
          Space s(std::move(stack.back()));
          stack.pop_back();
          if (s.pivots.size() == 1) {
            done.push_back(std::move(s));
            continue;
          }
          auto parts(split_once(s, reps, weight, where, dim0));
          for (auto it(parts.rbegin()); it != parts.rend(); ++it) stack.push_back(std::move(*it));
        }
        for (auto &s : done) {
          std::vector<std::uint64_t> w(k_, 0);
          for (std::uint32_t c(0); c < k_; ++c) {
            if (where[c] >= 0) w[c] = field_.mul(weight[c], s.basis.at(static_cast<std::size_t>(where[c]), 0));
          }
          if (w[0] == 0) throw InternalInconsistency("eigenvector vanishes at the identity");
          std::uint64_t inv(field_.inv(w[0]));
          for (auto &x : w) x = field_.mul(x, inv);
          out.push_back(std::move(w));
        }
      }

      std::vector<Space> split_once(const Space &s, const std::vector<std::uint32_t> &reps,
                                    const std::vector<std::uint64_t> &weight, const std::vector<std::int64_t> &where,
                                    std::size_t dim0) {
        std::vector<std::uint32_t> rows;
        for (auto p : s.pivots) rows.push_back(reps[p]);
        std::size_t n(splitters_.size());
        // combined candidates first, then single class matrices
        for (std::size_t attempt(0); attempt < 2 * n; ++attempt) {
          Matrix r(restricted(splitters_[attempt % n], rows, weight, where, dim0));
          if (attempt < n && n > 1) {
            std::uint64_t c(rng_() % field_.prime());
            Matrix r2(restricted(splitters_[(attempt + 1) % n], rows, weight, where, dim0));
            for (std::size_t i(0); i < r.data.size(); ++i) r.data[i] = field_.add(r.data[i], field_.mul(c, r2.data[i]));
          }
          Matrix local(multiply(r, s.basis));
          auto parts(eigenspaces(local, s));
          if (parts.size() > 1) return parts;
        }
        throw InternalInconsistency("class matrices do not split an eigenspace");
      }

      std::vector<Space> eigenspaces(const Matrix &m, const Space &s) {
        std::size_t dim(m.rows);
        auto poly(modular::charpoly(field_, m));
        auto values(modular::roots(field_, poly, rng_));
        if (values.size() <= 1) return {};
        std::sort(values.begin(), values.end());
        std::vector<Space> parts;
        std::size_t total(0);
        for (auto v : values) {
          Matrix shifted(m);
          for (std::size_t i(0); i < dim; ++i) shifted.at(i, i) = field_.sub(shifted.at(i, i), v);
          Matrix kernel(modular::nullspace(field_, shifted));
          Space part{multiply(s.basis, kernel), {}};
          for (std::size_t col(0); col < kernel.cols; ++col) {
            std::size_t free(0);
            while (kernel.at(free, col) != 1 || !only_one(kernel, free, col)) ++free;
            part.pivots.push_back(s.pivots[free]);
          }
          total += kernel.cols;
          parts.push_back(std::move(part));
        }
        if (total != dim) throw InternalInconsistency("class matrix is not diagonalizable");
        return parts;
      }

      // row r of the kernel basis is a unit vector at col
      static bool only_one(const Matrix &kernel, std::size_t r, std::size_t col) {
        for (std::size_t j(0); j < kernel.cols; ++j) if (j != col && kernel.at(r, j) != 0) return false;
        return true;
      }

      // turns a normalized eigenvector into character values, returns the degree
      std::uint64_t to_character(std::vector<std::uint64_t> &w) {
        std::uint64_t s(0);
        for (std::uint32_t m(0); m < k_; ++m) {
          s = field_.add(s, field_.mul(field_.mul(w[m], w[inverse_[m]]), field_.inv(classes_[m].size % field_.prime())));
        }
        if (s == 0) throw InternalInconsistency("vanishing norm in degree computation");
        std::uint64_t target(field_.mul(order_ % field_.prime(), field_.inv(s)));
        std::uint64_t degree(0);
        for (auto d : divisors(order_)) {
          if (d * d > order_) break;
          if (field_.mul(d, d) == target) {
            degree = d;
            break;
          }
        }
        if (!degree) throw InternalInconsistency("no admissible degree");
        for (std::uint32_t m(0); m < k_; ++m) {
          w[m] = field_.mul(field_.mul(degree, w[m]), field_.inv(classes_[m].size % field_.prime()));
        }
        return degree;
      }

      void power_sequences() {
        if (!sequence_.empty()) return;
        sequence_.resize(k_);
        for (std::uint32_t c(0); c < k_; ++c) {
          ElemId x(identity_id), r(classes_[c].representative);
          for (std::uint64_t s(0); s < classes_[c].element_order; ++s) {
            sequence_[c].push_back(g_.class_of(x));
            x = g_.mul(x, r);
          }
        }
        // classes of the same cyclic subgroup share one sequence
        rational_rep_.assign(k_, {~std::uint32_t(0), 0});
        for (std::uint32_t c(0); c < k_; ++c) {
          if (rational_rep_[c].first != ~std::uint32_t(0)) continue;
          std::uint64_t o(classes_[c].element_order);
          for (std::uint64_t r(1); r <= o; ++r) {
            if (std::gcd(r, o) != 1) continue;
            auto target(sequence_[c][r % o]);
            if (rational_rep_[target].first == ~std::uint32_t(0)) rational_rep_[target] = {c, r % o};
          }
        }
      }

      void lift_row(const std::vector<std::uint64_t> &chi, std::uint64_t degree, std::uint32_t *out) {
        std::map<std::uint32_t, std::vector<std::uint64_t>> multiplicities;
        for (std::uint32_t c(0); c < k_; ++c) {
          auto [rep, r] = rational_rep_[c];
          std::uint64_t o(classes_[rep].element_order), step(e_ / o);
          Key key;
          if (degree == 1) {
            auto it(zeta_log_.find(chi[c]));
            if (it == zeta_log_.end()) throw InternalInconsistency("linear character value is not a root of unity");
            key.emplace_back(it->second, 1);
          } else {
            auto found(multiplicities.find(rep));
            if (found == multiplicities.end()) found = multiplicities.emplace(rep, eigenvalue_counts(chi, rep, degree)).first;
            const auto &mu(found->second);
            for (std::uint64_t t(0); t < o; ++t) {
              if (mu[t]) key.emplace_back(static_cast<std::uint32_t>((t * r % o) * step), static_cast<std::uint32_t>(mu[t]));
            }
            std::sort(key.begin(), key.end());
          }
          out[c] = intern(key);
        }
      }

      std::vector<std::uint64_t> eigenvalue_counts(const std::vector<std::uint64_t> &chi, std::uint32_t rep,
                                                   std::uint64_t degree) {
        std::uint64_t o(classes_[rep].element_order);
        std::vector<std::uint64_t> x(o);
        for (std::uint64_t s(0); s < o; ++s) x[s] = chi[sequence_[rep][s]];
        // mu_t = o^-1 sum_s chi(g^s) w^(-st)
        std::uint64_t w_inv(zeta_pow_[(e_ - e_ / o) % e_]);
        auto mu(modular::dft(field_, x, w_inv));
        std::uint64_t o_inv(field_.inv(o % field_.prime())), total(0);
        for (auto &m : mu) {
          m = field_.mul(m, o_inv);
          if (m > degree) throw InternalInconsistency("eigenvalue multiplicity exceeds the degree");
          total += m;
        }
        if (total != degree) throw InternalInconsistency("eigenvalue multiplicities do not sum to the degree");
        return mu;
      }

      using Key = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

      std::uint32_t intern(const Key &key) {
        auto it(keys_.find(key));
        if (it != keys_.end()) return it->second;
        std::vector<std::int64_t> dense(e_, 0);
        for (auto [exp, mult] : key) dense[exp] += mult;
        auto value(Cyclotomic::from_integers(e_, dense));
        std::uint32_t id(static_cast<std::uint32_t>(pool_.size()));
        auto [lo, hi] = by_hash_.equal_range(value.hash());
        for (auto h(lo); h != hi; ++h) {
          if (pool_[h->second] == value) {
            id = h->second;
            break;
          }
        }
        if (id == pool_.size()) {
          by_hash_.emplace(value.hash(), id);
          pool_.push_back(std::move(value));
        }
        keys_.emplace(key, id);
        return id;
      }

      const Group &g_;
      const std::vector<ConjugacyClass> &classes_;
      std::size_t k_;
      std::uint64_t order_, e_;
      Field field_;
      std::mt19937_64 rng_;
      std::uint64_t zeta_{1};
      std::vector<std::uint64_t> zeta_pow_;
      std::unordered_map<std::uint64_t, std::uint32_t> zeta_log_;
      std::vector<std::uint32_t> splitters_, inverse_;
      std::unordered_map<std::uint64_t, SparseRow> rows_;
      std::vector<std::vector<std::uint32_t>> sequence_;
      std::vector<std::pair<std::uint32_t, std::uint64_t>> rational_rep_;
      std::map<Key, std::uint32_t> keys_;
      std::unordered_multimap<std::size_t, std::uint32_t> by_hash_;
      std::vector<Cyclotomic> pool_;
    };
  }

  CharacterTable dixon_schneider(const Group &group, const DixonOptions &options) {
    Solver solver(group, options);
    return solver.build(options);
  }

}
