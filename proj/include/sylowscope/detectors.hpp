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

#ifndef SYLOWSCOPE_DETECTORS_HPP
#define SYLOWSCOPE_DETECTORS_HPP

#include <sylowscope/chartab.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sylowscope {

  enum class Answer { Yes, No, Unknown };
  std::string to_string(Answer answer);

  struct Verdict {
    Answer answer{Answer::Unknown};
    // branch taken, witness columns and lattice members, computed quantities
    nlohmann::json reason;
    std::vector<std::string> used_black_boxes;
  };
  nlohmann::json to_json(const Verdict &verdict);

  struct SylowRecord {
    std::uint64_t order{1};
    bool cyclic{false};
    bool maximal_class{false};
    bool minimal_nonabelian{false};
    bool two_generated{false};
  };

  struct SimpleFingerprint {
    std::uint64_t order{1};
    std::uint64_t class_count{0};
    std::vector<std::uint64_t> degrees;  // sorted
    std::string name;
    std::map<std::uint64_t, SylowRecord> sylow_data;
    bool simple{false};
  };

  // shipped database; simple groups plus the quasisimple covers met by the corpus
  const std::vector<SimpleFingerprint> &fingerprint_database();
  // order, class count and degrees of a table, no Sylow data
  SimpleFingerprint fingerprint_of(const CharacterTable &table);
  std::optional<SimpleFingerprint> lookup_fingerprint(const CharacterTable &table);

  // intersection of the kernels of the almost p-rational p'-degree rows, taken
  // over the quotient by the largest normal p'-subgroup and returned as its
  // preimage in the given table
  TableNormalSubgroup frattini_core(const CharacterTable &table, std::uint64_t p);

  Verdict is_sylow_cyclic(const CharacterTable &table, std::uint64_t p);
  // meaningful for p-constrained groups only; Unknown when the p-core vanishes
  Verdict two_generated_p_constrained(const CharacterTable &table, std::uint64_t p);
  Verdict has_maximal_class_sylow(const CharacterTable &table, std::uint64_t p);
  // the quasisimple fallback on its own, skipping the centralizer scan
  Verdict quasisimple_branch(const CharacterTable &table, std::uint64_t p);
  Verdict has_minimal_nonabelian_sylow(const CharacterTable &table, std::uint64_t p);

}

#endif
