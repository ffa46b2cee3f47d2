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

#ifndef SYLOWSCOPE_CHARTAB_HPP
#define SYLOWSCOPE_CHARTAB_HPP

#include <sylowscope/cyclotomic.hpp>
#include <sylowscope/group.hpp>

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sylowscope {

  namespace detail { struct TableData; }

  // columns given as a sorted set of class indices
  struct TableNormalSubgroup {
    std::vector<std::uint32_t> classes;
    std::uint64_t order{0};

    bool contains(std::uint32_t c) const;
    bool is_subset_of(const TableNormalSubgroup &other) const;
    bool operator==(const TableNormalSubgroup &other) const { return classes == other.classes; }
  };

  struct TableContents {
    std::uint64_t group_order{1};
    std::vector<std::uint64_t> class_sizes;
    std::vector<std::uint64_t> element_orders;
    std::map<std::uint64_t, std::vector<std::uint32_t>> power_maps;
    std::uint64_t modulus{1};
    // rows x columns of indices into pool
    std::vector<std::uint32_t> value_ids;
    std::vector<Cyclotomic> pool;
    bool strict_abstract{true};
  };

  // immutable table; values are deduplicated into a pool over Q(zeta_modulus)
  class CharacterTable {
  public:
    CharacterTable();
    explicit CharacterTable(TableContents contents, std::optional<Group> source = std::nullopt);

    std::uint64_t group_order() const;
    std::size_t size() const;
    const std::vector<std::uint64_t> &class_sizes() const;
    const std::vector<std::uint64_t> &element_orders() const;
    const std::map<std::uint64_t, std::vector<std::uint32_t>> &power_maps() const;
    std::uint64_t modulus() const;
    bool strict_abstract() const;
    CharacterTable with_strict_abstract(bool strict) const;
    // the group the table was computed from, unless strict
    const std::optional<Group> &source_group() const;

    std::uint32_t value_id(std::size_t row, std::size_t col) const;
    const Cyclotomic &value(std::size_t row, std::size_t col) const;
    const std::vector<Cyclotomic> &pool() const;
    std::vector<Cyclotomic> row(std::size_t i) const;
    std::vector<Cyclotomic> column(std::size_t j) const;
    std::uint64_t degree(std::size_t row) const;
    std::uint64_t centralizer_order(std::size_t col) const;

    // class of g^m for any integer m, via the prime power maps
    std::uint32_t power_class(std::uint32_t col, std::uint64_t m) const;
    std::uint32_t inverse_class(std::uint32_t col) const;
    // largest conductor dividing the modulus over the values, per pool entry
    std::uint64_t value_conductor(std::uint32_t id) const;
    std::uint64_t row_feit_number(std::size_t row) const;
    std::uint64_t column_feit_number(std::size_t col) const;

    const TableContents &contents() const;

  private:
    std::shared_ptr<detail::TableData> data_;
  };

  struct DixonOptions {
    std::uint64_t seed{0};
    bool strict_abstract{true};
  };

  CharacterTable dixon_schneider(const Group &group, const DixonOptions &options = {});

  TableNormalSubgroup kernel(const CharacterTable &table, std::size_t row);
  std::vector<TableNormalSubgroup> normal_subgroup_lattice(const CharacterTable &table);
  // intersection of the kernels of all given rows
  TableNormalSubgroup kernel_intersection(const CharacterTable &table, const std::vector<std::size_t> &rows);
  bool in_lattice(const CharacterTable &table, const TableNormalSubgroup &n);
  CharacterTable quotient_table(const CharacterTable &table, const TableNormalSubgroup &n);
  // column of the quotient table receiving each column, in quotient_table order
  std::vector<std::uint32_t> quotient_fusion(const CharacterTable &table, const TableNormalSubgroup &n);
  // rows of the table whose kernel contains n
  std::vector<std::size_t> rows_over(const CharacterTable &table, const TableNormalSubgroup &n);
  // the subgroup of a group whose classes index the columns, as for a fresh dixon_schneider table
  SubgroupHandle realize(const Group &group, const TableNormalSubgroup &n);
  std::vector<std::uint32_t> locate_p_elements(const CharacterTable &table, std::uint64_t p);
  RationalityData column_rationality(const CharacterTable &table, std::size_t col);
  RationalityData row_rationality(const CharacterTable &table, std::size_t row);

  struct TablePermutation {
    std::vector<std::uint32_t> rows;     // row i of the first is row rows[i] of the second
    std::vector<std::uint32_t> columns;  // likewise for columns
  };

  enum class EquivalenceStatus { Equivalent, Inequivalent, Timeout };

  struct EquivalenceResult {
    EquivalenceStatus status;
    std::optional<TablePermutation> permutation;
  };

  EquivalenceResult compare_tables(const CharacterTable &a, const CharacterTable &b,
                                   std::chrono::milliseconds budget = std::chrono::seconds(5));
  std::optional<TablePermutation> tables_equivalent(const CharacterTable &a, const CharacterTable &b,
                                                    std::chrono::milliseconds budget = std::chrono::seconds(5));

  struct IntegrityReport {
    bool galois_stable{false};
    bool integral{false};
    bool row_orthogonal{false};
    bool column_orthogonal{false};
    bool degree_sum{false};
    bool degrees_divide{false};
    bool first_row_trivial{false};
    bool power_maps_consistent{false};
    std::vector<std::uint64_t> primes;
    bool ok() const {
      return galois_stable && integral && row_orthogonal && column_orthogonal && degree_sum &&
             degrees_divide && first_row_trivial && power_maps_consistent;
    }
  };

  // exact check of the table axioms via Galois stability and a modular Gram certificate
  IntegrityReport check_integrity(const CharacterTable &table);
  // direct evaluation over the cyclotomic field, for small tables
  IntegrityReport check_integrity_exact(const CharacterTable &table);

}

#endif
