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
#include <sylowscope/detectors.hpp>
#include <sylowscope/numtheory.hpp>
#include <sylowscope/oracles.hpp>

#include <gtest/gtest.h>

using namespace sylowscope;

namespace {
  Group inverting(const Group &n, const std::vector<bool> &invert, const std::string &name) {
    std::vector<Perm> images;
    for (std::size_t i(0); i < n.generators().size(); ++i)
      images.push_back(invert[i] ? n.generators()[i].inverse() : n.generators()[i]);
    return semidirect(n, cyclic(2), {images}).renamed(name);
  }

  Group c3_cubed_inverted() { return inverting(elementary_abelian(3, 3), {true, true, true}, "C3^3:C2"); }
  Group gamma_inverted() { return inverting(gamma(3, 2, 1), {true, false}, "Gamma:C2"); }

  Answer expect(bool b) { return b ? Answer::Yes : Answer::No; }

  CharacterTable table_of(const std::string &name) { return dixon_schneider(named(name)); }
}

TEST(Detectors, FrattiniCore) {
  EXPECT_EQ(frattini_core(table_of("D8"), 2).order, 2u);
  // Phi(D8) is not normal in S4, so its core is trivial
  EXPECT_EQ(frattini_core(table_of("S4"), 2).order, 1u);
  EXPECT_EQ(frattini_core(table_of("A5"), 2).order, 1u);
  EXPECT_EQ(frattini_core(table_of("SL(2,3)"), 2).order, 2u);
  // with a p'-core the preimage comes back
  EXPECT_EQ(frattini_core(table_of("S3"), 2).order, 3u);
}

TEST(Detectors, Cyclic) {
  EXPECT_EQ(is_sylow_cyclic(table_of("C4"), 2).answer, Answer::Yes);
  EXPECT_EQ(is_sylow_cyclic(table_of("Q8"), 2).answer, Answer::No);
  EXPECT_EQ(is_sylow_cyclic(table_of("S3"), 3).answer, Answer::Yes);
}

TEST(Detectors, TwoGenerated) {
  EXPECT_EQ(two_generated_p_constrained(table_of("SL(2,3)"), 2).answer, Answer::Yes);
  EXPECT_EQ(two_generated_p_constrained(dixon_schneider(gamma_inverted()), 3).answer, Answer::Yes);
  Verdict v(two_generated_p_constrained(dixon_schneider(c3_cubed_inverted()), 3));
  EXPECT_EQ(v.answer, Answer::No);
  EXPECT_EQ(v.reason["rank"], 3);
  // A5 has no 2-core
  EXPECT_EQ(two_generated_p_constrained(table_of("A5"), 2).answer, Answer::Unknown);
}

TEST(Detectors, MaximalClass) {
  EXPECT_EQ(has_maximal_class_sylow(table_of("S4"), 2).answer, Answer::Yes);
  EXPECT_EQ(has_maximal_class_sylow(dixon_schneider(c3_cubed_inverted()), 3).answer, Answer::No);
  Verdict v(has_maximal_class_sylow(table_of("SL(2,9)"), 2));
  EXPECT_EQ(v.answer, Answer::Yes);
  EXPECT_EQ(v.reason["branch"], "quasisimple");
  EXPECT_EQ(v.reason["fingerprint"], "A6");
  for (const char *name : {"A7", "GL(3,2)"}) {
    Verdict q(quasisimple_branch(table_of(name), 2));
    EXPECT_EQ(q.answer, Answer::Yes) << name;
    EXPECT_EQ(q.reason["Z"]["order"], 1) << name;
  }
  // Q16 over a centre of order 2: the p-central check is what decides
  EXPECT_EQ(quasisimple_branch(table_of("SL(2,7)"), 2).answer, Answer::Yes);
}

TEST(Detectors, MinimalNonabelian) {
  EXPECT_EQ(has_minimal_nonabelian_sylow(table_of("A7"), 2).answer, Answer::Yes);
  EXPECT_EQ(has_minimal_nonabelian_sylow(table_of("SL(2,3)"), 2).answer, Answer::Yes);
  EXPECT_EQ(has_minimal_nonabelian_sylow(table_of("A5"), 2).answer, Answer::No);
  EXPECT_EQ(has_minimal_nonabelian_sylow(dixon_schneider(gamma(3, 2, 2)), 3).answer, Answer::Yes);
  EXPECT_EQ(has_minimal_nonabelian_sylow(dixon_schneider(gamma_inverted()), 3).answer, Answer::Yes);
  EXPECT_EQ(has_minimal_nonabelian_sylow(table_of("D16"), 2).answer, Answer::No);
}

TEST(Detectors, FingerprintDatabase) {
  const auto &db(fingerprint_database());
  for (std::size_t i(0); i < db.size(); ++i)
    for (std::size_t j(i + 1); j < db.size(); ++j)
      EXPECT_FALSE(db[i].order == db[j].order && db[i].class_count == db[j].class_count &&
                   db[i].degrees == db[j].degrees);
  for (const auto &e : db) {
    Group g(named(e.name));
    CharacterTable t(dixon_schneider(g));
    auto hit(lookup_fingerprint(t));
    ASSERT_TRUE(hit) << e.name;
    EXPECT_EQ(hit->name, e.name);
    for (const auto &[p, rec] : e.sylow_data) {
      auto f(sylow_facts(g, p));
      EXPECT_EQ(rec.order, f.order) << e.name << " " << p;
      EXPECT_EQ(rec.cyclic, f.cyclic) << e.name << " " << p;
      EXPECT_EQ(rec.maximal_class, f.maximal_class) << e.name << " " << p;
      EXPECT_EQ(rec.minimal_nonabelian, f.minimal_nonabelian) << e.name << " " << p;
      EXPECT_EQ(rec.two_generated, f.two_generated) << e.name << " " << p;
    }
  }
}

TEST(Detectors, AgreeWithOracles) {
  std::vector<Group> groups;
  for (const char *name : {"S3", "S4", "A4", "A5", "A6", "A7", "GL(3,2)", "PSL(2,8)", "PSL(2,11)", "SL(2,3)",
                           "SL(2,5)", "SL(2,7)", "SL(2,9)", "D8", "Q8", "D16", "SD16", "Q16", "M9", "A4:C4",
                           "M9:C9", "PSL(3,3)", "PSU(3,3)"})
    groups.push_back(named(name));
  groups.push_back(c3_cubed_inverted());
  groups.push_back(gamma_inverted());
  groups.push_back(gamma(3, 2, 1));
  groups.push_back(delta(2, 2, 1));
  groups.push_back(extraspecial(3, 3));
  groups.push_back(direct_product(named("A5"), cyclic(2)));
  groups.push_back(direct_product(named("S3"), cyclic(3)));
  groups.push_back(direct_product(named("D8"), cyclic(2)));
  for (const auto &g : groups) {
    CharacterTable t(dixon_schneider(g));
    for (auto p : prime_divisors(g.order())) {
      SCOPED_TRACE(g.name() + " p=" + std::to_string(p));
      auto f(sylow_facts(g, p));
      if (f.o_p_prime_order == 1) {
        EXPECT_EQ(frattini_core(t, p).order, f.frattini_core_order);
      }
      EXPECT_EQ(is_sylow_cyclic(t, p).answer, expect(f.cyclic));
      if (f.p_constrained) {
        EXPECT_EQ(two_generated_p_constrained(t, p).answer, expect(f.two_generated));
      }
      EXPECT_EQ(has_maximal_class_sylow(t, p).answer, expect(f.maximal_class));
      EXPECT_EQ(has_minimal_nonabelian_sylow(t, p).answer, expect(f.minimal_nonabelian));
    }
  }
}
