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
#include <sylowscope/constructors.hpp>
#include <sylowscope/errors.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>

using namespace sylowscope;

namespace {
  std::vector<std::uint64_t> degrees(const CharacterTable &t) {
    std::vector<std::uint64_t> d;
    for (std::size_t i(0); i < t.size(); ++i) d.push_back(t.degree(i));
    return d;
  }

  // inner products evaluated directly in the cyclotomic field
  void expect_orthonormal(const CharacterTable &t) {
    std::size_t k(t.size());
    for (std::size_t i(0); i < k; ++i) {
      for (std::size_t j(i); j < k; ++j) {
        Cyclotomic s;
        for (std::size_t c(0); c < k; ++c) {
          s += (t.value(i, c) * t.value(j, c).conj()).scaled(Rational(static_cast<std::int64_t>(t.class_sizes()[c])));
        }
        Cyclotomic expected(i == j ? static_cast<std::int64_t>(t.group_order()) : 0);
        EXPECT_EQ(s, expected) << "rows " << i << " " << j;
      }
    }
  }

  std::vector<std::uint64_t> lattice_orders(const CharacterTable &t) {
    std::vector<std::uint64_t> o;
    for (const auto &n : normal_subgroup_lattice(t)) o.push_back(n.order);
    return o;
  }
}

TEST(DixonSchneider, SmallTables) {
  auto c2(dixon_schneider(cyclic(2)));
  ASSERT_EQ(c2.size(), 2u);
  EXPECT_EQ(c2.value(1, 1), Cyclotomic(-1));
  EXPECT_EQ(c2.value(0, 1), Cyclotomic(1));

  auto s3(dixon_schneider(named("S3")));
  EXPECT_EQ(degrees(s3), (std::vector<std::uint64_t>{1, 1, 2}));
  expect_orthonormal(s3);

  auto a5(dixon_schneider(named("A5")));
  EXPECT_EQ(degrees(a5), (std::vector<std::uint64_t>{1, 3, 3, 4, 5}));
  expect_orthonormal(a5);
  // the golden ratio appears on the classes of 5-cycles
  Cyclotomic phi(Cyclotomic(1) + Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4));
  bool found(false);
  for (const auto &v : a5.pool()) found = found || v == phi;
  EXPECT_TRUE(found);
}

TEST(DixonSchneider, NonAbelianOrderEight) {
  auto d8(dixon_schneider(dihedral(8)));
  auto q(dixon_schneider(q8()));
  EXPECT_EQ(degrees(d8), (std::vector<std::uint64_t>{1, 1, 1, 1, 2}));
  EXPECT_EQ(degrees(q), degrees(d8));
  expect_orthonormal(d8);
  expect_orthonormal(q);
  EXPECT_EQ(lattice_orders(q), (std::vector<std::uint64_t>{1, 2, 4, 4, 4, 8}));
}

TEST(DixonSchneider, Lattice) {
  auto s4(dixon_schneider(named("S4")));
  expect_orthonormal(s4);
  EXPECT_EQ(lattice_orders(s4), (std::vector<std::uint64_t>{1, 4, 12, 24}));
  auto lattice(normal_subgroup_lattice(s4));
  auto v4(quotient_table(s4, lattice[1]));
  EXPECT_EQ(degrees(v4), (std::vector<std::uint64_t>{1, 1, 2}));
  EXPECT_EQ(v4.group_order(), 6u);
  EXPECT_EQ(v4.element_orders(), (std::vector<std::uint64_t>{1, 2, 3}));
  // the 3-cycles with the identity do not form a subgroup
  TableNormalSubgroup bogus{{0}, 1};
  for (std::uint32_t c(0); c < s4.size(); ++c) {
    if (s4.element_orders()[c] == 3) {
      bogus.classes.push_back(c);
      bogus.order += s4.class_sizes()[c];
    }
  }
  EXPECT_FALSE(in_lattice(s4, bogus));
  EXPECT_THROW(quotient_table(s4, bogus), NotInLattice);
}

TEST(DixonSchneider, Families) {
  for (auto g : {gamma(3, 2, 1), delta(3, 1, 1), named("SL(2,3)"), named("PSL(2,7)"), named("A6"),
                 extraspecial(5, 25), named("M9")}) {
    auto t(dixon_schneider(g));
    std::uint64_t sum(0);
    for (auto d : degrees(t)) sum += d * d;
    EXPECT_EQ(sum, g.order()) << g.name();
    expect_orthonormal(t);
  }
}

TEST(DixonSchneider, Deterministic) {
  auto g(named("PSL(2,7)"));
  auto a(dixon_schneider(g, {3, true})), b(dixon_schneider(g, {3, true}));
  EXPECT_EQ(a.contents().value_ids, b.contents().value_ids);
}

TEST(Integrity, ComputedTablesPass) {
  for (auto g : {named("S4"), named("A5"), q8(), named("PSL(2,8)"), gamma(3, 2, 2), delta(2, 2, 1), named("A4:C4"),
                 named("SL(2,5)"), cyclic(12)}) {
    auto t(dixon_schneider(g));
    auto fast(check_integrity(t)), exact(check_integrity_exact(t));
    EXPECT_TRUE(fast.ok()) << g.name();
    EXPECT_TRUE(exact.ok()) << g.name();
    EXPECT_FALSE(fast.primes.empty());
  }
}

TEST(Integrity, CorruptedTablesFail) {
  auto t(dixon_schneider(named("A5")));
  // swap two entries of a row: orthogonality breaks
  auto c(t.contents());
  std::swap(c.value_ids[3 * t.size() + 1], c.value_ids[3 * t.size() + 2]);
  auto broken(check_integrity(CharacterTable(c)));
  EXPECT_FALSE(broken.row_orthogonal && broken.column_orthogonal);
  EXPECT_FALSE(check_integrity_exact(CharacterTable(c)).ok());

  // drop one irrational conjugate: Galois stability breaks
  auto d(t.contents());
  std::size_t k(t.size());
  for (std::size_t col(0); col < k; ++col) {
    if (!t.value(1, col).is_rational()) d.value_ids[2 * k + col] = d.value_ids[1 * k + col];
  }
  auto unstable(check_integrity(CharacterTable(d)));
  EXPECT_FALSE(unstable.galois_stable);
  EXPECT_FALSE(unstable.ok());

  // a wrong class size
  auto e(t.contents());
  e.class_sizes[1] += 1;
  EXPECT_FALSE(check_integrity(CharacterTable(e)).ok());
}

TEST(Integrity, LargeTableCertificate) {
  auto start(std::chrono::steady_clock::now());
  auto t(dixon_schneider(gamma(5, 2, 3)));
  auto report(check_integrity(t));
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(t.size(), 725u);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(60));
}

TEST(Equivalence, SmallCases) {
  auto d8(dixon_schneider(dihedral(8))), q(dixon_schneider(q8()));
  auto r(compare_tables(d8, q));
  EXPECT_EQ(r.status, EquivalenceStatus::Equivalent);
  ASSERT_TRUE(r.permutation);
  for (std::size_t i(0); i < d8.size(); ++i)
    for (std::size_t c(0); c < d8.size(); ++c)
      EXPECT_EQ(d8.value(i, c), q.value(r.permutation->rows[i], r.permutation->columns[c]));
  EXPECT_EQ(compare_tables(dixon_schneider(cyclic(4)), dixon_schneider(elementary_abelian(2, 2))).status,
            EquivalenceStatus::Inequivalent);
  EXPECT_FALSE(tables_equivalent(dixon_schneider(named("S4")), dixon_schneider(named("SL(2,3)"))));
}

TEST(Equivalence, PermutedTableMatches) {
  auto t(dixon_schneider(named("PSL(2,7)")));
  auto c(t.contents());
  std::size_t k(t.size());
  // reverse the nontrivial rows and rotate the nonidentity columns
  std::vector<std::uint32_t> ids(k * k);
  for (std::size_t i(0); i < k; ++i) {
    std::size_t ri(i == 0 ? 0 : k - i);
    for (std::size_t j(0); j < k; ++j) {
      std::size_t cj(j == 0 ? 0 : 1 + j % (k - 1));
      ids[ri * k + cj] = c.value_ids[i * k + j];
    }
  }
  auto sizes(c.class_sizes);
  for (std::size_t j(0); j < k; ++j) c.class_sizes[j == 0 ? 0 : 1 + j % (k - 1)] = sizes[j];
  c.value_ids = ids;
  c.power_maps.clear();
  EXPECT_TRUE(tables_equivalent(t, CharacterTable(c)));
}

TEST(Equivalence, CoincidencePair) {
  auto start(std::chrono::steady_clock::now());
  auto a(dixon_schneider(gamma(3, 2, 2))), b(dixon_schneider(delta(3, 2, 1)));
  EXPECT_EQ(compare_tables(a, b).status, EquivalenceStatus::Equivalent);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(5));
}

TEST(TableStructure, SpecExamples) {
  auto q(dixon_schneider(q8()));
  std::size_t two(4);
  ASSERT_EQ(q.degree(two), 2u);
  EXPECT_EQ(q.row_feit_number(two), 1u);
  EXPECT_EQ(row_rationality(q, two).field_degree, 1u);
  EXPECT_EQ(kernel(q, 0).order, 8u);
  EXPECT_EQ(kernel(q, two).order, 1u);

  auto d8(dixon_schneider(dihedral(8)));
  EXPECT_EQ(kernel(d8, 1).order, 4u);

  auto c4(dixon_schneider(cyclic(4)));
  for (std::uint32_t c(0); c < 4; ++c) {
    if (c4.element_orders()[c] == 4) {
      EXPECT_EQ(column_rationality(c4, c).field_degree, 2u);
    }
  }
  EXPECT_EQ(column_rationality(c4, 0).field_degree, 1u);

  auto s4(dixon_schneider(named("S4")));
  std::vector<std::uint64_t> orders;
  for (auto c : locate_p_elements(s4, 2)) orders.push_back(s4.element_orders()[c]);
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{1, 2, 2, 4}));
  auto s3(dixon_schneider(named("S3")));
  EXPECT_EQ(locate_p_elements(s3, 3).size(), 2u);

  auto a5(dixon_schneider(named("A5")));
  EXPECT_EQ(lattice_orders(a5), (std::vector<std::uint64_t>{1, 60}));

  // Q8 over its center is the Klein four group
  auto lattice(normal_subgroup_lattice(q));
  auto v4(quotient_table(q, lattice[1]));
  EXPECT_TRUE(tables_equivalent(v4, dixon_schneider(elementary_abelian(2, 2))));
  EXPECT_TRUE(tables_equivalent(quotient_table(s4, normal_subgroup_lattice(s4)[1]), s3));
  EXPECT_TRUE(tables_equivalent(quotient_table(q, lattice.front()), q));
}

TEST(TableStructure, LatticeMatchesStructure) {
  for (auto g : {named("S4"), q8(), named("SL(2,3)"), gamma(3, 2, 1), named("A4:C4"), dihedral(16), named("M9")}) {
    auto t(dixon_schneider(g));
    std::vector<std::uint64_t> table_side, group_side;
    for (const auto &n : normal_subgroup_lattice(t)) {
      table_side.push_back(n.order);
      EXPECT_TRUE(realize(g, n).is_normal());
    }
    for (const auto &n : normal_subgroups(g)) group_side.push_back(n.order());
    std::sort(group_side.begin(), group_side.end());
    EXPECT_EQ(table_side, group_side) << g.name();
  }
}

TEST(TableStructure, QuotientTableMatchesQuotientGroup) {
  for (auto g : {named("S4"), named("SL(2,3)"), gamma(3, 2, 1), named("A4:C4"), dihedral(16), q8()}) {
    auto t(dixon_schneider(g));
    for (const auto &n : normal_subgroup_lattice(t)) {
      auto fused(quotient_table(t, n));
      auto direct(dixon_schneider(quotient(g, realize(g, n))));
      EXPECT_TRUE(check_integrity(fused).ok());
      EXPECT_EQ(compare_tables(fused, direct).status, EquivalenceStatus::Equivalent) << g.name() << " " << n.order;
      auto sorted = [](std::vector<std::uint64_t> v) {
        std::sort(v.begin(), v.end());
        return v;
      };
      EXPECT_EQ(sorted(fused.element_orders()), sorted(direct.element_orders()));
    }
  }
}
