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

#include <sylowscope/group.hpp>
#include <sylowscope/errors.hpp>
#include <sylowscope/numtheory.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace sylowscope;

namespace {
  Group s3() { return Group({Perm{1, 0, 2}, Perm{1, 2, 0}}, 3, "S3"); }
  Group s4() { return Group({Perm{1, 0, 2, 3}, Perm{1, 2, 3, 0}}, 4, "S4"); }
  // generated by the rotation (0 1 2 3) and the reflection (1 3)
  Group d8() { return Group({Perm{1, 2, 3, 0}, Perm{0, 3, 2, 1}}, 4, "D8"); }
  // Q8 in its regular representation, i=(0 1 2 3)(4 5 6 7), j=(0 4 2 6)(1 7 3 5)
  Group q8() {
    return Group({Perm::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
                  Perm::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})}, 8, "Q8");
  }

  std::vector<std::uint64_t> class_sizes(const Group &g) {
    std::vector<std::uint64_t> sizes;
    for (const auto &c : g.classes()) sizes.push_back(c.size);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

  // brute-force oracle for commuting elements
  std::uint64_t brute_centralizer(const Group &g, ElemId x) {
    std::uint64_t count(0);
    auto elements(g.elements());
    for (const auto &y : elements) count += (elements[x] * y == y * elements[x]);
    return count;
  }
}

TEST(Enumeration, SmallGroups) {
  EXPECT_EQ(s3().order(), 6u);
  EXPECT_EQ(Group({}, 1).order(), 1u);
  EXPECT_EQ(Group({Perm{1, 0, 2, 3}, Perm{0, 1, 3, 2}}, 4).order(), 4u);
  EXPECT_EQ(s4().order(), 24u);
  EXPECT_EQ(d8().order(), 8u);
  EXPECT_EQ(q8().order(), 8u);
}

TEST(Enumeration, IdentityFirstAndClosed) {
  Group g(s4());
  EXPECT_TRUE(g.element(identity_id).is_identity());
  auto elements(g.elements());
  for (const auto &a : elements) {
    EXPECT_TRUE(g.contains(a.inverse()));
    for (const auto &b : elements) EXPECT_TRUE(g.contains(a * b));
  }
}

TEST(Enumeration, CapIsEnforced) {
  Group g({Perm{1, 0, 2, 3, 4}, Perm{1, 2, 3, 4, 0}}, 5, "S5", 100);
  EXPECT_THROW(g.order(), CapExceeded);
}

TEST(Classes, Sizes) {
  EXPECT_EQ(class_sizes(s3()), (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(class_sizes(d8()), (std::vector<std::uint64_t>{1, 1, 2, 2, 2}));
  Group c2c4({Perm{1, 0, 2, 3, 4, 5}, Perm{0, 1, 3, 4, 5, 2}}, 6);
  EXPECT_EQ(c2c4.classes().size(), 8u);
  Group g(s4());
  for (const auto &c : g.classes()) {
    EXPECT_EQ(24 % c.size, 0u);
    for (ElemId m : c.members) EXPECT_EQ(g.element_order(m), c.element_order);
  }
  EXPECT_EQ(g.classes().front().size, 1u);
}

TEST(PPart, Examples) {
  EXPECT_EQ(p_part(48, 2).p_part, 16u);
  EXPECT_EQ(p_part(48, 2).p_prime_part, 3u);
  EXPECT_EQ(p_part(7, 7).p_part, 7u);
  EXPECT_EQ(p_part(7, 7).p_prime_part, 1u);
  EXPECT_EQ(p_part(1, 5).p_part, 1u);
  EXPECT_EQ(p_part(1, 5).p_prime_part, 1u);
}

TEST(Sylow, Orders) {
  EXPECT_EQ(sylow(s4(), 2).order(), 8u);
  EXPECT_EQ(sylow(s4(), 3).order(), 3u);
  EXPECT_EQ(sylow(s4(), 5).order(), 1u);
  EXPECT_EQ(sylow(d8(), 2).order(), 8u);
}

TEST(Centralizer, Examples) {
  Group g(d8());
  EXPECT_EQ(centralizer(g, g.element(identity_id)).order(), 8u);
  Perm reflection{0, 3, 2, 1};
  ElemId r(g.index_of(reflection));
  EXPECT_EQ(centralizer(g, reflection).order(), brute_centralizer(g, r));
  EXPECT_EQ(centralizer(g, reflection).order(), 4u);
  EXPECT_EQ(center(q8()).order(), 2u);
  EXPECT_THROW(centralizer(g, Perm{1, 0, 2, 3}), ElementNotInGroup);
  Group s(s4());
  for (const auto &c : s.classes()) {
    EXPECT_EQ(centralizer(whole(s), c.representative).order() * c.size, 24u);
  }
}

TEST(PGroups, FrattiniAndSeries) {
  Group v({Perm{1, 0, 2, 3}, Perm{0, 1, 3, 2}}, 4);
  EXPECT_EQ(frattini_of_pgroup(v).order(), 1u);
  Group g(d8());
  EXPECT_EQ(frattini_of_pgroup(g).order(), 2u);
  EXPECT_TRUE(frattini_of_pgroup(g) == center(g));
  EXPECT_EQ(nilpotency_class(v), 1u);
  EXPECT_EQ(nilpotency_class(g), 2u);
  EXPECT_EQ(upper_central_series(g).size(), 3u);
  EXPECT_EQ(omega(q8()).order(), 2u);
  EXPECT_THROW(frattini_of_pgroup(s3()), NotAPGroup);
  auto inv(abelian_invariants(whole(g), derived_subgroup(g)));
  EXPECT_EQ(inv, (std::vector<std::uint64_t>{2, 2}));
}

TEST(Core, Examples) {
  Group g(s4());
  EXPECT_EQ(core_of(g, sylow(g, 2)).order(), 4u);
  Group h(s3());
  EXPECT_EQ(core_of(h, generate(h, std::vector<Perm>{Perm{1, 0, 2}})).order(), 1u);
  SubgroupHandle a4(derived_subgroup(g));
  EXPECT_EQ(a4.order(), 12u);
  EXPECT_TRUE(core_of(g, a4) == a4);
}

TEST(OSubgroups, Examples) {
  Group g(s4());
  EXPECT_EQ(o_p(g, 2).order(), 4u);
  EXPECT_EQ(o_upper_p_prime(g, 2).order(), 24u);
  EXPECT_EQ(o_p_prime(g, 2).order(), 1u);
  EXPECT_EQ(fitting(g).order(), 4u);
  Group q(q8());
  EXPECT_EQ(o_p(q, 2).order(), 8u);
  EXPECT_EQ(o_p_prime(q, 2).order(), 1u);
  EXPECT_EQ(o_upper_p_prime(q, 2).order(), 8u);
  // S3 x C2 on 5 points: O_{3'} is the central C2
  Group s3c2({Perm{1, 0, 2, 3, 4}, Perm{1, 2, 0, 3, 4}, Perm{0, 1, 2, 4, 3}}, 5);
  EXPECT_EQ(o_p_prime(s3c2, 3).order(), 2u);
  EXPECT_TRUE(is_p_constrained(q, 2));
  EXPECT_TRUE(is_p_constrained(g, 2));
  EXPECT_FALSE(is_p_constrained(Group({Perm{1, 2, 0, 3, 4}, Perm{0, 1, 3, 4, 2}}, 5), 2));
}

TEST(Quotient, Examples) {
  Group g(s4());
  Group q(quotient(g, o_p(g, 2)));
  EXPECT_EQ(q.order(), 6u);
  EXPECT_EQ(q.classes().size(), 3u);
  Group id(quotient(g, trivial_subgroup(g)));
  EXPECT_EQ(class_sizes(id), class_sizes(g));
  Group qq(q8());
  Group z(quotient(qq, center(qq)));
  EXPECT_EQ(z.order(), 4u);
  EXPECT_EQ(z.classes().size(), 4u);
  EXPECT_THROW(quotient(g, sylow(g, 2)), NotNormal);
}

TEST(NormalSubgroups, S4) {
  auto normals(normal_subgroups(s4()));
  std::vector<std::uint64_t> orders;
  for (const auto &n : normals) {
    orders.push_back(n.order());
    EXPECT_TRUE(n.is_normal());
  }
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{1, 4, 12, 24}));
}
