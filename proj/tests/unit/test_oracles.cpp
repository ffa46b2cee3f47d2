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
#include <sylowscope/oracles.hpp>

#include <gtest/gtest.h>

using namespace sylowscope;

namespace {
  Perm images(std::vector<int> img) {
    std::vector<Point> pts(img.begin(), img.end());
    return Perm(pts);
  }

  // C9 x| C6 acting on Z/9 by i -> i+1 and i -> 2i
  Group affine_nine() {
    std::vector<int> shift, twice;
    for (int i(0); i < 9; ++i) {
      shift.push_back((i + 1) % 9);
      twice.push_back((2 * i) % 9);
    }
    return Group({images(shift), images(twice)}, 9, "C9:C6");
  }
}

TEST(Oracles, MaximalClass) {
  EXPECT_TRUE(is_maximal_class(cyclic(9)));
  EXPECT_TRUE(is_maximal_class(cyclic(3)));
  EXPECT_TRUE(is_maximal_class(dihedral(16)));
  EXPECT_TRUE(is_maximal_class(semidihedral(16)));
  EXPECT_TRUE(is_maximal_class(generalized_quaternion(16)));
  EXPECT_FALSE(is_maximal_class(elementary_abelian(2, 3)));
  EXPECT_FALSE(is_maximal_class(gamma(3, 2, 2)));
  EXPECT_THROW(is_maximal_class(named("S3")), NotAPGroup);
}

TEST(Oracles, MinimalNonabelian) {
  EXPECT_TRUE(is_minimal_nonabelian(q8()));
  EXPECT_FALSE(is_minimal_nonabelian(dihedral(16)));
  EXPECT_TRUE(is_minimal_nonabelian(gamma(5, 2, 1)));
  EXPECT_FALSE(is_minimal_nonabelian(cyclic(8)));
  auto c(mna_characterizations(whole(dihedral(16))));
  EXPECT_FALSE(c.proper_subgroups_abelian || c.frattini_and_center || c.frattini_and_derived);
  EXPECT_EQ(maximal_subgroups(whole(elementary_abelian(3, 2))).size(), 4u);
  EXPECT_EQ(maximal_subgroups(whole(q8())).size(), 3u);
}

TEST(Oracles, Classification) {
  EXPECT_EQ(classify_mna(delta(3, 2, 2)).descriptor, (MnaDescriptor{MnaKind::Delta, 3, 2, 2}));
  EXPECT_EQ(classify_mna(gamma(3, 3, 1)).descriptor, (MnaDescriptor{MnaKind::Gamma, 3, 3, 1}));
  EXPECT_EQ(classify_mna(dihedral(8)).descriptor, (MnaDescriptor{MnaKind::Delta, 2, 1, 1}));
  EXPECT_EQ(classify_mna(q8()).descriptor, (MnaDescriptor{MnaKind::Q8, 2, 0, 0}));
  // same abelianization and order, told apart by the exponent
  EXPECT_EQ(classify_mna(gamma(3, 2, 3)).descriptor, (MnaDescriptor{MnaKind::Gamma, 3, 2, 3}));
  EXPECT_EQ(classify_mna(delta(3, 3, 1)).descriptor, (MnaDescriptor{MnaKind::Delta, 3, 3, 1}));
  EXPECT_THROW(classify_mna(dihedral(16)), PreconditionViolation);
  EXPECT_TRUE(is_metacyclic(whole(gamma(3, 2, 2))));
  EXPECT_FALSE(is_metacyclic(whole(delta(3, 1, 1))));
  EXPECT_FALSE(is_metacyclic(whole(elementary_abelian(2, 3))));
}

TEST(Oracles, Rank) {
  EXPECT_EQ(rank(cyclic(27)), 1u);
  EXPECT_EQ(rank(q8()), 2u);
  EXPECT_EQ(rank(elementary_abelian(2, 3)), 3u);
  EXPECT_TRUE(two_generated(delta(5, 1, 1)));
  EXPECT_FALSE(two_generated(abelian({4, 2, 2})));
}

TEST(Oracles, Fusion) {
  auto d8(dihedral(8));
  EXPECT_TRUE(fusion_controlled_by(d8, whole(d8), whole(d8)));
  auto s4(named("S4"));
  auto p(sylow(s4, 2));
  auto n(normalizer(whole(s4), p));
  EXPECT_EQ(n.order(), 8u);
  EXPECT_FALSE(fusion_controlled_by(s4, p, n));
  auto g(affine_nine());
  ASSERT_EQ(g.order(), 54u);
  auto p3(sylow(g, 3));
  EXPECT_EQ(classify_mna(p3.as_group()).descriptor, (MnaDescriptor{MnaKind::Gamma, 3, 2, 1}));
  EXPECT_TRUE(fusion_controlled_by(g, p3, normalizer(whole(g), p3)));
}

TEST(Oracles, Lemmas) {
  auto d8(dihedral(8));
  auto all(whole(d8));
  ElemId r(identity_id), s(identity_id);
  for (ElemId x : all.elements()) {
    if (d8.element_order(x) == 4 && r == identity_id) r = x;
  }
  auto rotations(generate(d8, std::vector<ElemId>{r}));
  for (ElemId x : all.elements()) {
    if (!rotations.contains(x) && s == identity_id) s = x;
  }
  EXPECT_TRUE(verify_lemabel(all, rotations, s));
  EXPECT_EQ(derived_subgroup(d8).order(), 2u);
  // central x: G = <x>A is abelian
  auto c6(cyclic(6));
  auto a(generate(c6, std::vector<ElemId>{c6.pow(c6.generator_ids()[0], 2)}));
  EXPECT_TRUE(verify_lemabel(whole(c6), a, c6.generator_ids()[0]));
  EXPECT_THROW(verify_lemabel(all, rotations, r), PreconditionViolation);

  auto p(delta(3, 2, 1));
  ElemId x(p.generator_ids()[0]), y(p.generator_ids()[1]);
  ElemId z(p.comm(x, y));
  // with x of order 9, <x> meets Q = <x^3,y,z> outside P', so the lemma does not apply
  auto q(generate(p, std::vector<ElemId>{p.pow(x, 3), y, z}));
  EXPECT_FALSE(lemPhi_admissible(whole(p), q, x));
  EXPECT_THROW(verify_lemPhi(whole(p), q, x), PreconditionViolation);
  // the generator of order 3 over Q = <x,z> satisfies the hypotheses
  auto q2(generate(p, std::vector<ElemId>{x, z}));
  EXPECT_TRUE(lemPhi_admissible(whole(p), q2, y));
  EXPECT_TRUE(verify_lemPhi(whole(p), q2, y));
  EXPECT_EQ(p.order() / frattini_of_pgroup(p).order(), 9u);
}

TEST(Oracles, SylowFacts) {
  auto f(sylow_facts(named("SL(2,3)"), 2));
  EXPECT_EQ(f.order, 8u);
  EXPECT_TRUE(f.minimal_nonabelian);
  EXPECT_TRUE(f.two_generated);
  EXPECT_FALSE(f.cyclic);
  auto s4(sylow_facts(named("S4"), 2));
  // Phi(D8) is the centre of order 2, not normal in S4
  EXPECT_EQ(s4.frattini_core_order, 1u);
  EXPECT_TRUE(s4.maximal_class);
  EXPECT_EQ(sylow_facts(named("A5"), 2).frattini_core_order, 1u);
}
