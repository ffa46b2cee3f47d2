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
#include <sylowscope/errors.hpp>
#include <sylowscope/harness.hpp>
#include <sylowscope/io.hpp>
#include <sylowscope/oracles.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace sylowscope;

namespace {

  struct Globals {
    std::uint64_t seed{0};
    std::uint64_t cap{0};
    unsigned jobs{1};
    std::string strict{"on"};
    bool strict_abstract() const { return strict == "on"; }
  };

  std::optional<std::string> cache_dir() {
    if (const char *dir = std::getenv("SYLOWSCOPE_CACHE"); dir && *dir) return std::string(dir);
    return std::nullopt;
  }

  void emit(const Json &j, const std::string &out) {
    if (out.empty()) {
      std::cout << j.dump(1) << "\n";
    } else {
      write_json(out, j);
    }
  }

  // a group from --name (catalog or corpus) or --group (JSON file)
  Group load_group(const std::string &name, const std::string &file) {
    if (!file.empty()) return group_from_json(read_json(file));
    if (name.empty()) throw BadParameters("need --name or --group");
    if (auto entry = find_entry(name)) return entry->make();
    return named(name);
  }

  CharacterTable load_table(const Globals &g, const std::string &table, const std::string &name,
                            const std::string &file) {
    if (!table.empty()) return table_from_json(read_json(table)).with_strict_abstract(g.strict_abstract());
    Group group(load_group(name, file));
    return cached_table(group, group.name(), g.seed, g.strict_abstract(), cache_dir());
  }

  Verdict run_detector(Property prop, const CharacterTable &t, std::uint64_t p) {
    switch (prop) {
      case Property::FrattiniCore: {
        TableNormalSubgroup k(frattini_core(t, p));
        Verdict v;
        v.answer = Answer::Yes;
        v.reason = Json{{"branch", "almost p-rational kernels"}, {"order", k.order}, {"classes", k.classes}};
        return v;
      }
      case Property::Cyclic: return is_sylow_cyclic(t, p);
      case Property::TwoGenerated: return two_generated_p_constrained(t, p);
      case Property::MaximalClass: return has_maximal_class_sylow(t, p);
      default: return has_minimal_nonabelian_sylow(t, p);
    }
  }

}

int main(int argc, char **argv) {
  CLI::App app{"character-table detectors for Sylow subgroup properties"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--cap", g.cap, "enumeration cap on group orders (0 keeps the default)");
  app.add_option("--jobs", g.jobs, "worker threads for campaigns")->capture_default_str();
  app.add_option("--strict-abstract", g.strict, "drop the source group from tables")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();

  std::string name, group_file, table_file, out, property;
  std::uint64_t p(0);

  auto *construct = app.add_subcommand("construct", "write a group as JSON");
  construct->add_option("--name", name, "catalog name, corpus name or family like D16")->required();
  construct->add_option("--out", out, "output file");

  auto *chartab = app.add_subcommand("chartab", "compute a character table");
  chartab->add_option("--name", name, "group name");
  chartab->add_option("--group", group_file, "group JSON");
  chartab->add_option("--out", out, "output file");
  bool check(false);
  chartab->add_flag("--check", check, "verify the table axioms and print the report");

  auto *detect = app.add_subcommand("detect", "run a table-only detector");
  detect->add_option("--table", table_file, "table JSON");
  detect->add_option("--name", name, "group name, table computed on the fly");
  detect->add_option("--group", group_file, "group JSON, table computed on the fly");
  detect->add_option("--p", p, "prime")->required();
  detect->add_option("--property", property, "property")
      ->required()
      ->check(CLI::IsMember({"frattini-core", "cyclic", "two-generated", "maximal-class", "minimal-nonabelian"}));

  auto *oracle = app.add_subcommand("oracle", "structural ground truth for a Sylow subgroup");
  oracle->add_option("--name", name, "group name");
  oracle->add_option("--group", group_file, "group JSON");
  oracle->add_option("--p", p, "prime")->required();

  std::string left, right;
  std::uint64_t budget_ms(5000);
  auto *compare = app.add_subcommand("compare", "decide whether two tables agree up to permutations");
  compare->add_option("left", left, "table JSON")->required();
  compare->add_option("right", right, "table JSON")->required();
  compare->add_option("--budget", budget_ms, "milliseconds")->capture_default_str();

  std::vector<std::string> entries, properties;
  bool no_lemmas(false), quiet(false);
  auto *campaign = app.add_subcommand("campaign", "detectors against oracles over the corpus");
  campaign->add_option("--entry", entries, "restrict to these corpus entries");
  campaign->add_option("--property", properties, "restrict to these properties");
  campaign->add_option("--out", out, "report file (default stdout)");
  campaign->add_flag("--no-lemmas", no_lemmas, "skip the lemma sampling");
  campaign->add_flag("--quiet", quiet, "no summary on stderr");

  auto *coincidences = app.add_subcommand("coincidences", "the known table coincidences");
  coincidences->add_option("--out", out, "report file");
  coincidences->add_option("--budget", budget_ms, "milliseconds per pair")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (g.cap) set_default_cap(g.cap);
    if (*construct) {
      emit(group_to_json(load_group(name, "")), out);
      return 0;
    }
    if (*chartab) {
      Group group(load_group(name, group_file));
      CharacterTable t(cached_table(group, group.name(), g.seed, g.strict_abstract(), cache_dir()));
      if (check) {
        IntegrityReport r(check_integrity(t));
        Json j{{"galois_stable", r.galois_stable}, {"integral", r.integral},
               {"row_orthogonal", r.row_orthogonal}, {"column_orthogonal", r.column_orthogonal},
               {"degree_sum", r.degree_sum}, {"degrees_divide", r.degrees_divide},
               {"first_row_trivial", r.first_row_trivial}, {"power_maps_consistent", r.power_maps_consistent},
               {"primes", r.primes}, {"ok", r.ok()}};
        std::cerr << j.dump(1) << "\n";
        if (!r.ok()) return 1;
      }
      emit(table_to_json(t), out);
      return 0;
    }
    if (*detect) {
      CharacterTable t(load_table(g, table_file, name, group_file));
      emit(to_json(run_detector(property_from_string(property), t, p)), out);
      return 0;
    }
    if (*oracle) {
      SylowFacts f(sylow_facts(load_group(name, group_file), p));
      emit(Json{{"p", f.p}, {"order", f.order}, {"cyclic", f.cyclic}, {"maximal_class", f.maximal_class},
                {"minimal_nonabelian", f.minimal_nonabelian}, {"two_generated", f.two_generated},
                {"rank", f.rank}, {"frattini_core_order", f.frattini_core_order},
                {"p_constrained", f.p_constrained}, {"o_p_prime_order", f.o_p_prime_order}},
           out);
      return 0;
    }
    if (*compare) {
      EquivalenceResult r(compare_tables(table_from_json(read_json(left)), table_from_json(read_json(right)),
                                         std::chrono::milliseconds(budget_ms)));
      Json j{{"status", r.status == EquivalenceStatus::Equivalent     ? "equivalent"
                        : r.status == EquivalenceStatus::Inequivalent ? "inequivalent"
                                                                      : "timeout"}};
      if (r.permutation) j["permutation"] = Json{{"rows", r.permutation->rows}, {"columns", r.permutation->columns}};
      emit(j, out);
      return r.status == EquivalenceStatus::Timeout ? 2 : 0;
    }
    if (*campaign) {
      std::vector<CorpusEntry> corpus(build_default_corpus());
      if (!entries.empty()) {
        std::vector<CorpusEntry> picked;
        for (const auto &e : entries) {
          auto it(std::find_if(corpus.begin(), corpus.end(), [&](const CorpusEntry &c) { return c.name == e; }));
          if (it == corpus.end()) throw UnknownName("no corpus entry named '" + e + "'");
          picked.push_back(*it);
        }
        corpus = std::move(picked);
      }
      CampaignOptions o;
      o.seed = g.seed;
      o.jobs = g.jobs;
      o.strict_abstract = g.strict_abstract();
      o.cache_dir = cache_dir();
      o.lemmas = !no_lemmas;
      if (!properties.empty()) {
        o.properties.clear();
        for (const auto &s : properties) o.properties.push_back(property_from_string(s));
      }
      CampaignReport r(run_campaign(corpus, o));
      emit(r.report, out);
      if (!quiet) std::cerr << r.summary();
      return r.ok() ? 0 : 1;
    }
    if (*coincidences) {
      CoincidenceReport r(verify_table_coincidences(std::chrono::milliseconds(budget_ms)));
      emit(r.report, out);
      return r.ok ? 0 : 1;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
