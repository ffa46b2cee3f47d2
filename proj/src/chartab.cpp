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
#include <sylowscope/errors.hpp>
#include <sylowscope/numtheory.hpp>

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

namespace sylowscope {

  namespace detail {
    struct TableData {
      TableContents c;
      std::optional<Group> source;

      std::once_flag index_once;
      std::unordered_multimap<std::size_t, std::uint32_t> pool_index;
      std::once_flag conductor_once;
      std::vector<std::uint64_t> conductors;
      std::once_flag inverse_once;
      std::vector<std::uint32_t> inverses;

      const std::unordered_multimap<std::size_t, std::uint32_t> &index() {
        std::call_once(index_once, [this] {
          for (std::uint32_t i(0); i < c.pool.size(); ++i) pool_index.emplace(c.pool[i].hash(), i);
        });
        return pool_index;
      }

      std::optional<std::uint32_t> find(const Cyclotomic &v) {
        auto [lo, hi] = index().equal_range(v.hash());
        for (auto it(lo); it != hi; ++it) if (c.pool[it->second] == v) return it->second;
        return std::nullopt;
      }
    };
  }

  namespace {
    std::vector<std::uint32_t> distinct_ids(const CharacterTable &t, std::size_t row, bool by_row) {
      std::vector<std::uint32_t> ids;
      for (std::size_t j(0); j < t.size(); ++j) ids.push_back(by_row ? t.value_id(row, j) : t.value_id(j, row));
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      return ids;
    }
  }

  bool TableNormalSubgroup::contains(std::uint32_t c) const {
    return std::binary_search(classes.begin(), classes.end(), c);
  }

  bool TableNormalSubgroup::is_subset_of(const TableNormalSubgroup &other) const {
    return std::includes(other.classes.begin(), other.classes.end(), classes.begin(), classes.end());
  }

  CharacterTable::CharacterTable() : CharacterTable(TableContents{1, {1}, {1}, {}, 1, {0}, {Cyclotomic(1)}, true}) {}

  CharacterTable::CharacterTable(TableContents contents, std::optional<Group> source)
    : data_(std::make_shared<detail::TableData>()) {
    std::size_t k(contents.class_sizes.size());
    if (contents.element_orders.size() != k || contents.value_ids.size() != k * k) {
      throw FormatError("table dimensions are inconsistent");
    }
    for (auto id : contents.value_ids) {
      if (id >= contents.pool.size()) throw FormatError("value index outside the pool");
    }
    // one representation per value so that equal ids mean equal values
    std::vector<std::uint32_t> remap(contents.pool.size());
    std::vector<Cyclotomic> pool;
    std::unordered_multimap<std::size_t, std::uint32_t> seen;
    for (std::size_t i(0); i < contents.pool.size(); ++i) {
      Cyclotomic v(contents.pool[i]);
      if (contents.modulus % v.modulus()) throw FormatError("value outside the field of the table");
      if (v.modulus() != contents.modulus) v = v.promote(contents.modulus);
      std::uint32_t id(static_cast<std::uint32_t>(pool.size()));
      auto [lo, hi] = seen.equal_range(v.hash());
      for (auto it(lo); it != hi; ++it) {
        if (pool[it->second] == v) {
          id = it->second;
          break;
        }
      }
      if (id == pool.size()) {
        seen.emplace(v.hash(), id);
        pool.push_back(std::move(v));
      }
      remap[i] = id;
    }
    for (auto &id : contents.value_ids) id = remap[id];
    contents.pool = std::move(pool);
    data_->c = std::move(contents);
    data_->source = std::move(source);
  }

  std::uint64_t CharacterTable::group_order() const { return data_->c.group_order; }
  std::size_t CharacterTable::size() const { return data_->c.class_sizes.size(); }
  const std::vector<std::uint64_t> &CharacterTable::class_sizes() const { return data_->c.class_sizes; }
  const std::vector<std::uint64_t> &CharacterTable::element_orders() const { return data_->c.element_orders; }
  const std::map<std::uint64_t, std::vector<std::uint32_t>> &CharacterTable::power_maps() const {
    return data_->c.power_maps;
  }
  std::uint64_t CharacterTable::modulus() const { return data_->c.modulus; }
  bool CharacterTable::strict_abstract() const { return data_->c.strict_abstract; }
  const TableContents &CharacterTable::contents() const { return data_->c; }

  CharacterTable CharacterTable::with_strict_abstract(bool strict) const {
    TableContents c(data_->c);
    c.strict_abstract = strict;
    return CharacterTable(std::move(c), data_->source);
  }

  const std::optional<Group> &CharacterTable::source_group() const {
    static const std::optional<Group> none;
    return data_->c.strict_abstract ? none : data_->source;
  }

  std::uint32_t CharacterTable::value_id(std::size_t row, std::size_t col) const {
    return data_->c.value_ids[row * size() + col];
  }

  const Cyclotomic &CharacterTable::value(std::size_t row, std::size_t col) const {
    return data_->c.pool[value_id(row, col)];
  }

  const std::vector<Cyclotomic> &CharacterTable::pool() const { return data_->c.pool; }

  std::vector<Cyclotomic> CharacterTable::row(std::size_t i) const {
    std::vector<Cyclotomic> r;
    for (std::size_t j(0); j < size(); ++j) r.push_back(value(i, j));
    return r;
  }

  std::vector<Cyclotomic> CharacterTable::column(std::size_t j) const {
    std::vector<Cyclotomic> c;
    for (std::size_t i(0); i < size(); ++i) c.push_back(value(i, j));
    return c;
  }

  std::uint64_t CharacterTable::degree(std::size_t row) const {
    auto r(value(row, 0).as_rational());
    if (!r || !r->is_integer() || r->sign() <= 0 || !r->is_small()) {
      throw InternalInconsistency("degree is not a positive integer");
    }
    return static_cast<std::uint64_t>(r->small_num());
  }

  std::uint64_t CharacterTable::centralizer_order(std::size_t col) const {
    return group_order() / class_sizes()[col];
  }

  std::uint32_t CharacterTable::inverse_class(std::uint32_t col) const {
    std::call_once(data_->inverse_once, [this] {
      std::size_t k(size());
      std::vector<std::uint32_t> conj_pool(pool().size());
      for (std::uint32_t i(0); i < pool().size(); ++i) {
        auto found(data_->find(pool()[i].conj()));
        if (!found) throw InternalInconsistency("complex conjugate missing from the value pool");
        conj_pool[i] = *found;
      }
      std::map<std::vector<std::uint32_t>, std::uint32_t> columns;
      for (std::uint32_t j(0); j < k; ++j) {
        std::vector<std::uint32_t> col(k);
        for (std::size_t i(0); i < k; ++i) col[i] = value_id(i, j);
        columns.emplace(std::move(col), j);
      }
      std::vector<std::uint32_t> inv(k);
      for (std::uint32_t j(0); j < k; ++j) {
        std::vector<std::uint32_t> col(k);
        for (std::size_t i(0); i < k; ++i) col[i] = conj_pool[value_id(i, j)];
        auto it(columns.find(col));
        if (it == columns.end()) throw InternalInconsistency("conjugate column missing");
        inv[j] = it->second;
      }
      data_->inverses = std::move(inv);
    });
    return data_->inverses[col];
  }

  std::uint32_t CharacterTable::power_class(std::uint32_t col, std::uint64_t m) const {
    std::uint64_t o(element_orders()[col]);
    m %= o;
    if (m == 0) return 0;
    for (auto [q, k] : factorize(m)) {
      auto it(power_maps().find(q));
      if (it == power_maps().end()) {
        if (o % q == 0) throw PreconditionViolation("power map for " + std::to_string(q) + " missing");
        throw PreconditionViolation("power class needs exponents built from primes dividing the exponent");
      }
      for (int i(0); i < k; ++i) col = it->second[col];
    }
    return col;
  }

  std::uint64_t CharacterTable::value_conductor(std::uint32_t id) const {
    std::call_once(data_->conductor_once, [this] {
      std::vector<std::uint64_t> cond(pool().size());
      for (std::size_t i(0); i < pool().size(); ++i) cond[i] = pool()[i].is_rational() ? 1 : conductor(pool()[i]);
      data_->conductors = std::move(cond);
    });
    return data_->conductors[id];
  }

  std::uint64_t CharacterTable::row_feit_number(std::size_t row) const {
    std::uint64_t f(1);
    for (auto id : distinct_ids(*this, row, true)) f = std::lcm(f, value_conductor(id));
    return f;
  }

  std::uint64_t CharacterTable::column_feit_number(std::size_t col) const {
    std::uint64_t f(1);
    for (auto id : distinct_ids(*this, col, false)) f = std::lcm(f, value_conductor(id));
    return f;
  }

  // lattice

  TableNormalSubgroup kernel(const CharacterTable &table, std::size_t row) {
    TableNormalSubgroup n;
    std::uint32_t deg(table.value_id(row, 0));
    for (std::uint32_t c(0); c < table.size(); ++c) {
      if (table.value_id(row, c) == deg) {
        n.classes.push_back(c);
        n.order += table.class_sizes()[c];
      }
    }
    return n;
  }

  TableNormalSubgroup kernel_intersection(const CharacterTable &table, const std::vector<std::size_t> &rows) {
    TableNormalSubgroup n;
    for (std::uint32_t c(0); c < table.size(); ++c) {
      bool in(std::all_of(rows.begin(), rows.end(), [&](std::size_t r) {
        return table.value_id(r, c) == table.value_id(r, 0);
      }));
      if (in) {
        n.classes.push_back(c);
        n.order += table.class_sizes()[c];
      }
    }
    return n;
  }

  std::vector<TableNormalSubgroup> normal_subgroup_lattice(const CharacterTable &table) {
    std::size_t k(table.size()), words((k + 63) / 64);
    using Bits = std::vector<std::uint64_t>;
    auto to_bits = [&](const TableNormalSubgroup &n) {
      Bits b(words, 0);
      for (auto c : n.classes) b[c >> 6] |= std::uint64_t(1) << (c & 63);
      return b;
    };
    std::set<Bits> kernels;
    for (std::size_t i(0); i < k; ++i) kernels.insert(to_bits(kernel(table, i)));
    std::set<Bits> members(kernels);
    std::vector<Bits> queue(kernels.begin(), kernels.end());
    std::vector<Bits> gens(kernels.begin(), kernels.end());
    for (std::size_t head(0); head < queue.size(); ++head) {
      for (const auto &g : gens) {
        Bits b(words);
        for (std::size_t w(0); w < words; ++w) b[w] = queue[head][w] & g[w];
        if (members.insert(b).second) queue.push_back(std::move(b));
      }
    }
    std::vector<TableNormalSubgroup> result;
    for (const auto &b : members) {
      TableNormalSubgroup n;
      for (std::uint32_t c(0); c < k; ++c) {
        if ((b[c >> 6] >> (c & 63)) & 1) {
          n.classes.push_back(c);
          n.order += table.class_sizes()[c];
        }
      }
      result.push_back(std::move(n));
    }
    std::sort(result.begin(), result.end(), [](const auto &a, const auto &b) {
      return a.order != b.order ? a.order < b.order : a.classes < b.classes;
    });
    return result;
  }

  std::vector<std::size_t> rows_over(const CharacterTable &table, const TableNormalSubgroup &n) {
    std::vector<std::size_t> rows;
    for (std::size_t i(0); i < table.size(); ++i) {
      bool in(std::all_of(n.classes.begin(), n.classes.end(), [&](std::uint32_t c) {
        return table.value_id(i, c) == table.value_id(i, 0);
      }));
      if (in) rows.push_back(i);
    }
    return rows;
  }

  bool in_lattice(const CharacterTable &table, const TableNormalSubgroup &n) {
    if (n.classes.empty() || n.classes.front() != 0) return false;
    return kernel_intersection(table, rows_over(table, n)) == n;
  }

  std::vector<std::uint32_t> quotient_fusion(const CharacterTable &table, const TableNormalSubgroup &n) {
    if (!in_lattice(table, n)) throw NotInLattice("class set is not an intersection of kernels");
    std::vector<std::size_t> rows(rows_over(table, n));
    std::size_t k(table.size());
    // fuse columns with identical values on the inflated rows
    std::map<std::vector<std::uint32_t>, std::uint32_t> seen;
    std::vector<std::uint32_t> fused(k);
    for (std::uint32_t c(0); c < k; ++c) {
      std::vector<std::uint32_t> key;
      for (auto r : rows) key.push_back(table.value_id(r, c));
      auto [it, inserted] = seen.emplace(std::move(key), static_cast<std::uint32_t>(seen.size()));
      fused[c] = it->second;
    }
    if (seen.size() != rows.size()) throw InternalInconsistency("quotient table is not square");
    return fused;
  }

  CharacterTable quotient_table(const CharacterTable &table, const TableNormalSubgroup &n) {
    std::vector<std::uint32_t> fused(quotient_fusion(table, n));
    std::vector<std::size_t> rows(rows_over(table, n));
    std::size_t k(table.size());
    std::vector<std::uint32_t> reps;
    for (std::uint32_t c(0); c < k; ++c)
      if (fused[c] == reps.size()) reps.push_back(c);
    TableContents q;
    q.group_order = table.group_order() / n.order;
    q.class_sizes.assign(reps.size(), 0);
    for (std::uint32_t c(0); c < k; ++c) q.class_sizes[fused[c]] += table.class_sizes()[c];
    for (auto &s : q.class_sizes) s /= n.order;
    std::uint64_t exponent(1);
    for (auto c : reps) {
      std::uint64_t o(table.element_orders()[c]), order(o);
      for (std::uint64_t m : divisors(o)) {
        if (n.contains(table.power_class(c, m))) {
          order = m;
          break;
        }
      }
      q.element_orders.push_back(order);
      exponent = std::lcm(exponent, order);
    }
    for (const auto &[prime, map] : table.power_maps()) {
      if (exponent % prime) continue;
      std::vector<std::uint32_t> image;
      for (auto c : reps) image.push_back(fused[map[c]]);
      q.power_maps[prime] = std::move(image);
    }
    q.modulus = table.modulus();
    q.pool = table.pool();
    for (auto r : rows)
      for (auto c : reps) q.value_ids.push_back(table.value_id(r, c));
    q.strict_abstract = table.strict_abstract();
    return CharacterTable(std::move(q));
  }

  SubgroupHandle realize(const Group &group, const TableNormalSubgroup &n) {
    std::vector<std::uint64_t> bits((group.order() + 63) / 64, 0);
    const auto &classes(group.classes());
    for (auto c : n.classes) {
      if (c >= classes.size()) throw BadParameters("class index outside the group");
      for (auto x : classes[c].members) bits[x >> 6] |= std::uint64_t(1) << (x & 63);
    }
    return SubgroupHandle::from_bits(group, std::move(bits));
  }

  std::vector<std::uint32_t> locate_p_elements(const CharacterTable &table, std::uint64_t p) {
    std::vector<std::uint32_t> cols;
    for (std::uint32_t c(0); c < table.size(); ++c) {
      if (is_power_of(table.element_orders()[c], p)) cols.push_back(c);
    }
    return cols;
  }

  RationalityData column_rationality(const CharacterTable &table, std::size_t col) {
    std::vector<Cyclotomic> values;
    for (auto id : distinct_ids(table, col, false)) values.push_back(table.pool()[id]);
    return rationality(values, table.modulus());
  }

  RationalityData row_rationality(const CharacterTable &table, std::size_t row) {
    std::vector<Cyclotomic> values;
    for (auto id : distinct_ids(table, row, true)) values.push_back(table.pool()[id]);
    return rationality(values, table.modulus());
  }

}
