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

#ifndef SYLOWSCOPE_HARNESS_HPP
#define SYLOWSCOPE_HARNESS_HPP

#include <sylowscope/chartab.hpp>
#include <sylowscope/detectors.hpp>
#include <sylowscope/group.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sylowscope {

  enum class Property { FrattiniCore, Cyclic, TwoGenerated, MaximalClass, MinimalNonabelian };
  std::string to_string(Property property);
  // accepts the CLI spellings: frattini-core, cyclic, two-generated, maximal-class, minimal-nonabelian
  Property property_from_string(const std::string &name);
  const std::vector<Property> &all_properties();

  struct CorpusEntry {
    std::string name;
    std::function<Group()> make;
    std::vector<std::uint64_t> primes;  // empty: every prime dividing the order
    // "property@p" -> expected answer
    std::map<std::string, bool> expectations;
  };

  std::vector<CorpusEntry> build_default_corpus();
  // the corpus entry of that name, if any
  std::optional<CorpusEntry> find_entry(const std::string &name);

  // splitmix-style mix of the campaign seed with an entry name
  std::uint64_t entry_seed(std::uint64_t seed, const std::string &name);

  struct CampaignOptions {
    std::uint64_t seed{0};
    unsigned jobs{1};
    std::vector<Property> properties{all_properties()};
    bool strict_abstract{true};
    std::optional<std::string> cache_dir;
    // lemma triples per entry, split between the two lemmas
    std::size_t lemma_budget{300};
    bool lemmas{true};
  };

  struct CampaignReport {
    nlohmann::json report;  // no timings: byte-stable for a given seed
    std::size_t checks{0};
    std::size_t disagreements{0};
    std::size_t expectation_failures{0};
    std::size_t unknowns{0};
    std::size_t errors{0};
    std::size_t lemma_checks{0};
    std::size_t lemma_counterexamples{0};
    bool ok() const { return disagreements == 0 && expectation_failures == 0 && errors == 0 && lemma_counterexamples == 0; }
    std::string summary() const;
  };

  CampaignReport run_campaign(const std::vector<CorpusEntry> &corpus, const CampaignOptions &options = {});

  // the table of a group, through the cache directory when given
  CharacterTable cached_table(const Group &group, const std::string &key, std::uint64_t seed,
                              bool strict_abstract, const std::optional<std::string> &cache_dir);

  struct LemmaStats {
    std::size_t lemabel_checks{0};
    std::size_t lemPhi_checks{0};
    std::size_t counterexamples{0};
    nlohmann::json failures = nlohmann::json::array();
  };
  // random admissible triples inside the group and its Sylow subgroups
  LemmaStats sample_lemmas(const Group &group, std::uint64_t seed, std::size_t budget);

  struct CoincidenceReport {
    nlohmann::json report;
    bool ok{false};
  };
  CoincidenceReport verify_table_coincidences(std::chrono::milliseconds budget = std::chrono::seconds(5));

}

#endif
