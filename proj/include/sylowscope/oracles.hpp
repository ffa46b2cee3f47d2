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

#ifndef SYLOWSCOPE_ORACLES_HPP
#define SYLOWSCOPE_ORACLES_HPP

#include <sylowscope/constructors.hpp>
#include <sylowscope/group.hpp>

#include <optional>
#include <string>

namespace sylowscope {

  // structural ground truth, computed on groups directly

  // P of order p^n has class n-1; |P| <= p^2 counts as maximal class
  bool is_maximal_class(const SubgroupHandle &pgroup);
  bool is_maximal_class(const Group &pgroup);

  // the three equivalent descriptions, evaluated separately
  struct MnaCharacterizations {
    bool proper_subgroups_abelian{false};  // non-abelian, all maximal subgroups abelian
    bool frattini_and_center{false};       // |P:Phi(P)| = |P:Z(P)| = p^2
    bool frattini_and_derived{false};      // |P:Phi(P)| = p^2 and |P'| = p
  };
  MnaCharacterizations mna_characterizations(const SubgroupHandle &pgroup);
  // InternalInconsistency if the descriptions disagree
  bool is_minimal_nonabelian(const SubgroupHandle &pgroup);
  bool is_minimal_nonabelian(const Group &pgroup);

  std::vector<SubgroupHandle> maximal_subgroups(const SubgroupHandle &pgroup);
  // some cyclic normal subgroup with cyclic quotient
  bool is_metacyclic(const SubgroupHandle &h);

  struct MnaClassification {
    std::optional<MnaDescriptor> descriptor;  // empty: not minimal non-abelian
    std::string to_string() const;
  };
  // PreconditionViolation unless minimal non-abelian; D8 is reported as Delta(1,1)
  MnaClassification classify_mna(const SubgroupHandle &pgroup);
  MnaClassification classify_mna(const Group &pgroup);

  // log_p |P:Phi(P)|
  std::size_t rank(const SubgroupHandle &pgroup);
  std::size_t rank(const Group &pgroup);
  bool two_generated(const SubgroupHandle &pgroup);
  bool two_generated(const Group &pgroup);

  // every G-fusion of elements of P is realized inside h
  bool fusion_controlled_by(const Group &group, const SubgroupHandle &sylow, const SubgroupHandle &h);

  // both sides of |G'| = |A : C_A(x)| and the epimorphism a -> [x,a]; PreconditionViolation off-hypothesis
  bool verify_lemabel(const SubgroupHandle &g, const SubgroupHandle &a, ElemId x);
  // |P:Phi(P)| = p^2 iff |C_{Q/Phi(Q)}(x)| = p
  bool verify_lemPhi(const SubgroupHandle &p, const SubgroupHandle &q, ElemId x);
  bool lemabel_admissible(const SubgroupHandle &g, const SubgroupHandle &a, ElemId x);
  bool lemPhi_admissible(const SubgroupHandle &p, const SubgroupHandle &q, ElemId x);

  // Sylow-level facts the detectors are compared against
  struct SylowFacts {
    std::uint64_t p{0};
    std::uint64_t order{1};
    bool cyclic{false};
    bool maximal_class{false};
    bool minimal_nonabelian{false};
    bool two_generated{false};
    std::size_t rank{0};
    std::uint64_t frattini_core_order{1};  // |core_G(Phi(P))|
    bool p_constrained{false};
    std::uint64_t o_p_prime_order{1};
  };
  SylowFacts sylow_facts(const Group &group, std::uint64_t p);

}

#endif
