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

#include <gtest/gtest.h>

using namespace sylowscope;

namespace {
  std::uint64_t count_of_order(const SubgroupHandle &h, std::uint64_t o) {
    std::uint64_t n(0);
    for (ElemId x : h.elements()) n += h.parent().element_order(x) == o;
    return n;
  }

  // the defining relations evaluated literally on the two generators
  void expect_gamma_relations(const Group &g, std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    const Perm &x(g.generators()[0]), &y(g.generators()[1]);
    EXPECT_EQ(x.order(), ipow(p, a));
    EXPECT_EQ(y.order(), ipow(p, b));
    EXPECT_EQ(conjugate(y, x), x.pow(static_cast<std::int64_t>(1 + ipow(p, a - 1))));
  }

  void expect_delta_relations(const Group &g, std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    const Perm &x(g.generators()[0]), &y(g.generators()[1]);
    Perm z(commutator(x, y));
    EXPECT_EQ(x.order(), ipow(p, a));
    EXPECT_EQ(y.order(), ipow(p, b));
    EXPECT_EQ(z.order(), p);
    EXPECT_TRUE(commutator(z, x).is_identity());
    EXPECT_TRUE(commutator(z, y).is_identity());
  }
}

TEST(Mna, GammaOrdersAndRelations) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}}) {
      Group g(gamma(p, a, b));
      EXPECT_EQ(g.order(), ipow(p, a + b));
      expect_gamma_relations(g, p, a, b);
      EXPECT_EQ(derived_subgroup(g).order(), p);
    }
  }
}

TEST(Mna, DeltaOrdersAndRelations) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {2, 2}}) {
      Group g(delta(p, a, b));
      EXPECT_EQ(g.order(), ipow(p, a + b + 1));
      expect_delta_relations(g, p, a, b);
      EXPECT_EQ(derived_subgroup(g).order(), p);
    }
  }
}

TEST(Mna, LargeDeltaDegree) {
  Group g(delta(5, 4, 1));
  EXPECT_EQ(g.degree(), 650u);
  EXPECT_EQ(g.order(), 15625u);
}

TEST(Mna, SmallExamples) {
  Group g(gamma(3, 2, 1));
  EXPECT_EQ(g.order(), 27u);
  EXPECT_EQ(g.exponent(), 9u);
  EXPECT_EQ(nilpotency_class(g), 2u);
  Group d(delta(5, 1, 1));
  EXPECT_EQ(d.exponent(), 5u);
  EXPECT_EQ(nilpotency_class(d), 2u);
  // D8 in both guises: five classes, five involutions
  for (const Group &h : {gamma(2, 2, 1), delta(2, 1, 1), dihedral(8)}) {
    EXPECT_EQ(h.order(), 8u);
    EXPECT_EQ(h.classes().size(), 5u);
    EXPECT_EQ(count_of_order(whole(h), 2), 5u);
  }
  EXPECT_EQ(count_of_order(whole(q8()), 2), 1u);
  EXPECT_THROW(gamma(3, 1, 1), BadParameters);
  EXPECT_THROW(delta(3, 1, 2), BadParameters);
  EXPECT_THROW(gamma(4, 2, 1), BadParameters);
}

TEST(Families, TwoGroupsOfMaximalClass) {
  EXPECT_EQ(nilpotency_class(dihedral(16)), 3u);
  for (std::uint64_t n : {8, 16, 32, 64}) {
    EXPECT_EQ(dihedral(n).order(), n);
    EXPECT_EQ(generalized_quaternion(n).order(), n);
    EXPECT_EQ(nilpotency_class(dihedral(n)), log_exact(n, 2) - 1u);
    EXPECT_EQ(nilpotency_class(generalized_quaternion(n)), log_exact(n, 2) - 1u);
    EXPECT_EQ(count_of_order(whole(generalized_quaternion(n)), 2), 1u);
    if (n >= 16) {
      EXPECT_EQ(semidihedral(n).order(), n);
      EXPECT_EQ(nilpotency_class(semidihedral(n)), log_exact(n, 2) - 1u);
    }
  }
}

TEST(Families, AbelianAndExtraspecial) {
  EXPECT_EQ(cyclic(12).order(), 12u);
  EXPECT_EQ(elementary_abelian(3, 3).order(), 27u);
  EXPECT_EQ(elementary_abelian(3, 3).exponent(), 3u);
  Group e(extraspecial(5, 5));
  EXPECT_EQ(e.order(), 125u);
  EXPECT_EQ(e.exponent(), 5u);
  EXPECT_EQ(center(e).order(), 5u);
  EXPECT_EQ(extraspecial(3, 9).exponent(), 9u);
  EXPECT_EQ(abelian({4, 2}).classes().size(), 8u);
}

TEST(Products, DirectAndSemidirect) {
  Group a(cyclic(3)), b(cyclic(4));
  Group trivial_action(semidirect(a, b, {{a.generators()[0]}}));
  EXPECT_EQ(trivial_action.order(), 12u);
  EXPECT_TRUE(trivial_action.is_abelian());
  EXPECT_EQ(direct_product(a, b).order(), 12u);
  // C3 : C4 with the generator inverting
  Group dic(semidirect(a, b, {{a.generators()[0].inverse()}}));
  EXPECT_EQ(dic.order(), 12u);
  EXPECT_FALSE(dic.is_abelian());
  // squaring is not an automorphism of C4
  Group c4(cyclic(4)), c2(cyclic(2));
  EXPECT_THROW(semidirect(c4, c2, {{c4.generators()[0].pow(2)}}), NotAnAutomorphism);
  // inversion of C3 does not satisfy the relation of C3 acting on it
  EXPECT_THROW(semidirect(a, a, {{a.generators()[0].inverse()}}), NotAnAutomorphism);
}

TEST(Named, Orders) {
  std::vector<std::pair<std::string, std::uint64_t>> expected{
    {"S3", 6}, {"S4", 24}, {"A4", 12}, {"A5", 60}, {"A6", 360}, {"A7", 2520},
    {"SL(2,3)", 24}, {"SL(2,5)", 120}, {"SL(2,9)", 720}, {"GL(3,2)", 168},
    {"PSL(2,7)", 168}, {"PSL(2,8)", 504}, {"PSL(2,11)", 660}, {"PSL(2,13)", 1092},
    {"SL(2,7)", 336}, {"SL(2,11)", 1320}, {"SL(2,13)", 2184}, {"PSL(2,4)", 60},
    {"PSL(3,3)", 5616}, {"PSU(3,3)", 6048}, {"M9", 72}, {"A4:C4", 48}, {"M9:C9", 648}};
  for (const auto &[name, order] : expected) EXPECT_EQ(named(name).order(), order) << name;
  EXPECT_THROW(named("Monster"), UnknownName);
}

TEST(Named, Facts) {
  Group a7(named("A7"));
  EXPECT_EQ(sylow(a7, 2).order(), 8u);
  Group sl23(named("SL(2,3)"));
  SubgroupHandle q(sylow(sl23, 2));
  EXPECT_EQ(q.order(), 8u);
  EXPECT_EQ(count_of_order(q, 2), 1u);
  EXPECT_EQ(count_of_order(q, 4), 6u);
  // Frobenius: the complement acts fixed-point-freely on the kernel
  Group m9(named("M9"));
  SubgroupHandle k(sylow(m9, 3));
  EXPECT_EQ(k.order(), 9u);
  EXPECT_EQ(k.parent().exponent(), 12u);
  SubgroupHandle q8sub(sylow(m9, 2));
  for (ElemId x : q8sub.elements()) {
    if (x == identity_id) continue;
    EXPECT_EQ(centralizer(k, x).order(), 1u);
  }
  EXPECT_EQ(derived_subgroup(named("A5")).order(), 60u);
  EXPECT_EQ(center(named("SL(2,5)")).order(), 2u);
  EXPECT_EQ(named("PSL(2,9)").classes().size(), 7u);
  EXPECT_EQ(named("PSU(3,3)").classes().size(), 14u);
  EXPECT_EQ(named("PSL(3,3)").classes().size(), 12u);
}
