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

// table isomorphism by colour refinement and individualization

#include <sylowscope/chartab.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace sylowscope {

  namespace {
    using Clock = std::chrono::steady_clock;

    std::uint64_t mix(std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    }

    std::uint64_t pair_hash(std::uint64_t a, std::uint64_t b) { return mix(a * 0x100000001b3ULL ^ mix(b)); }

    // both tables rewritten over one pool
    struct Joint {
      std::size_t k;
      std::vector<std::uint32_t> a, b;
    };

    Joint joint_ids(const CharacterTable &x, const CharacterTable &y) {
      std::uint64_t l(std::lcm(x.modulus(), y.modulus()));
      std::vector<Cyclotomic> pool;
      std::unordered_multimap<std::size_t, std::uint32_t> index;
      auto intern = [&](const Cyclotomic &v) {
        Cyclotomic p(v.promote(l));
        auto [lo, hi] = index.equal_range(p.hash());
        for (auto it(lo); it != hi; ++it) if (pool[it->second] == p) return it->second;
        auto id(static_cast<std::uint32_t>(pool.size()));
        index.emplace(p.hash(), id);
        pool.push_back(std::move(p));
        return id;
      };
      std::vector<std::uint32_t> xmap, ymap;
      for (const auto &v : x.pool()) xmap.push_back(intern(v));
      for (const auto &v : y.pool()) ymap.push_back(intern(v));
      Joint j{x.size(), {}, {}};
      for (auto id : x.contents().value_ids) j.a.push_back(xmap[id]);
      for (auto id : y.contents().value_ids) j.b.push_back(ymap[id]);
      return j;
    }

    struct Timeout {};

    class Matcher {
    public:
      Matcher(const CharacterTable &x, const CharacterTable &y, Clock::time_point deadline)
        : joint_(joint_ids(x, y)), k_(joint_.k), deadline_(deadline) {
        State s;
        s.row_a.assign(k_, 0);
        s.row_b.assign(k_, 0);
        for (std::size_t c(0); c < k_; ++c) {
          s.col_a.push_back(x.class_sizes()[c]);
          s.col_b.push_back(y.class_sizes()[c]);
        }
        initial_ = std::move(s);
      }

      std::optional<TablePermutation> run() { return search(initial_); }

    private:
      struct State {
        std::vector<std::uint64_t> row_a, row_b, col_a, col_b;
      };

      std::uint32_t at_a(std::size_t i, std::size_t c) const { return joint_.a[i * k_ + c]; }
      std::uint32_t at_b(std::size_t i, std::size_t c) const { return joint_.b[i * k_ + c]; }

      // recolours jointly; false if the colour histograms differ
      static bool renumber(std::vector<std::uint64_t> &a, std::vector<std::uint64_t> &b, std::size_t &classes) {
        std::map<std::uint64_t, std::int64_t> balance;
        for (auto v : a) ++balance[v];
        for (auto v : b) --balance[v];
        std::map<std::uint64_t, std::uint64_t> fresh;
        for (auto [v, n] : balance) {
          if (n) return false;
          fresh.emplace(v, fresh.size());
        }
        for (auto &v : a) v = fresh[v];
        for (auto &v : b) v = fresh[v];
        classes = fresh.size();
        return true;
      }

      bool refine(State &s) {
        std::size_t rows(0), cols(0);
        if (!renumber(s.row_a, s.row_b, rows) || !renumber(s.col_a, s.col_b, cols)) return false;
        while (true) {
          if (Clock::now() > deadline_) throw Timeout{};
          auto next(s);
          for (std::size_t i(0); i < k_; ++i) {
            std::uint64_t ha(0), hb(0);
            for (std::size_t c(0); c < k_; ++c) {
              ha += pair_hash(s.col_a[c], at_a(i, c));
              hb += pair_hash(s.col_b[c], at_b(i, c));
            }
            next.row_a[i] = pair_hash(s.row_a[i], ha);
            next.row_b[i] = pair_hash(s.row_b[i], hb);
          }
          for (std::size_t c(0); c < k_; ++c) {
            std::uint64_t ha(0), hb(0);
            for (std::size_t i(0); i < k_; ++i) {
              ha += pair_hash(s.row_a[i], at_a(i, c));
              hb += pair_hash(s.row_b[i], at_b(i, c));
            }
            next.col_a[c] = pair_hash(s.col_a[c], ha);
            next.col_b[c] = pair_hash(s.col_b[c], hb);
          }
          std::size_t r2(0), c2(0);
          if (!renumber(next.row_a, next.row_b, r2) || !renumber(next.col_a, next.col_b, c2)) return false;
          bool stable(r2 == rows && c2 == cols);
          s = std::move(next);
          rows = r2;
          cols = c2;
          if (stable) return true;
        }
      }

      std::optional<TablePermutation> leaf(const State &s) const {
        TablePermutation p;
        p.rows.assign(k_, 0);
        p.columns.assign(k_, 0);
        std::vector<std::uint32_t> row_of(k_), col_of(k_);
        for (std::uint32_t j(0); j < k_; ++j) {
          row_of[s.row_b[j]] = j;
          col_of[s.col_b[j]] = j;
        }
        for (std::size_t i(0); i < k_; ++i) {
          p.rows[i] = row_of[s.row_a[i]];
          p.columns[i] = col_of[s.col_a[i]];
        }
        for (std::size_t i(0); i < k_; ++i)
          for (std::size_t c(0); c < k_; ++c)
            if (at_a(i, c) != at_b(p.rows[i], p.columns[c])) return std::nullopt;
        return p;
      }

      // smallest colour class with more than one member
      static std::optional<std::uint64_t> open_cell(const std::vector<std::uint64_t> &colours) {
        std::map<std::uint64_t, std::size_t> count;
        for (auto v : colours) ++count[v];
        std::optional<std::uint64_t> best;
        std::size_t best_size(0);
        for (auto [v, n] : count) {
          if (n > 1 && (!best || n < best_size)) {
            best = v;
            best_size = n;
          }
        }
        return best;
      }

      std::optional<TablePermutation> search(State s) {
        if (!refine(s)) return std::nullopt;
        auto row_cell(open_cell(s.row_a));
        auto col_cell(row_cell ? std::nullopt : open_cell(s.col_a));
        if (!row_cell && !col_cell) return leaf(s);
        bool by_row(row_cell.has_value());
        auto &mine(by_row ? s.row_a : s.col_a);
        auto &theirs(by_row ? s.row_b : s.col_b);
        std::uint64_t cell(by_row ? *row_cell : *col_cell);
        std::size_t pick(static_cast<std::size_t>(std::find(mine.begin(), mine.end(), cell) - mine.begin()));
        std::uint64_t marker(k_ + 1);
        for (std::size_t j(0); j < k_; ++j) {
          if (theirs[j] != cell) continue;
          State t(s);
          (by_row ? t.row_a : t.col_a)[pick] = marker;
          (by_row ? t.row_b : t.col_b)[j] = marker;
          if (auto found = search(std::move(t))) return found;
        }
        return std::nullopt;
      }

      Joint joint_;
      std::size_t k_;
      Clock::time_point deadline_;
      State initial_;
    };
  }

  EquivalenceResult compare_tables(const CharacterTable &a, const CharacterTable &b, std::chrono::milliseconds budget) {
    auto deadline(Clock::now() + budget);
    if (a.group_order() != b.group_order() || a.size() != b.size()) return {EquivalenceStatus::Inequivalent, {}};
    auto sorted = [](std::vector<std::uint64_t> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    if (sorted(a.class_sizes()) != sorted(b.class_sizes())) return {EquivalenceStatus::Inequivalent, {}};
    std::size_t k(a.size());
    std::vector<std::uint64_t> da, db;
    for (std::size_t i(0); i < k; ++i) {
      da.push_back(a.degree(i));
      db.push_back(b.degree(i));
    }
    if (sorted(da) != sorted(db)) return {EquivalenceStatus::Inequivalent, {}};

    bool same(a.class_sizes() == b.class_sizes());
    for (std::size_t i(0); same && i < k; ++i)
      for (std::size_t c(0); same && c < k; ++c) same = a.value(i, c) == b.value(i, c);
    if (same) {
      TablePermutation id;
      id.rows.resize(k);
      id.columns.resize(k);
      std::iota(id.rows.begin(), id.rows.end(), 0);
      std::iota(id.columns.begin(), id.columns.end(), 0);
      return {EquivalenceStatus::Equivalent, id};
    }
    try {
      Matcher m(a, b, deadline);
      auto p(m.run());
      if (p) return {EquivalenceStatus::Equivalent, p};
      return {EquivalenceStatus::Inequivalent, {}};
    } catch (const Timeout &) {
      return {EquivalenceStatus::Timeout, {}};
    }
  }

  std::optional<TablePermutation> tables_equivalent(const CharacterTable &a, const CharacterTable &b,
                                                    std::chrono::milliseconds budget) {
    auto r(compare_tables(a, b, budget));
    return r.status == EquivalenceStatus::Equivalent ? r.permutation : std::nullopt;
  }

}
