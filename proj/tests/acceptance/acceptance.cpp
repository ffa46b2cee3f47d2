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

// one line per acceptance criterion; exit status 1 if any fails

#include <sylowscope/chartab.hpp>
#include <sylowscope/constructors.hpp>
#include <sylowscope/detectors.hpp>
#include <sylowscope/errors.hpp>
#include <sylowscope/harness.hpp>
#include <sylowscope/numtheory.hpp>
#include <sylowscope/oracles.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

using namespace sylowscope;
using nlohmann::json;

namespace {

  int failed = 0;

  void report(int id, bool pass, const std::string &what, const std::string &detail) {
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << what << "  (" << detail << ")"
              << std::endl;
    if (!pass) ++failed;
  }

  struct Tally {
    std::size_t checks{0}, agree{0}, disagree{0}, unknown{0};
    std::string first_bad;
  };

  Tally tally(const json &rep, const std::string &property) {
    Tally t;
    for (const auto &e : rep["entries"]) {
      if (!e.contains("results")) continue;
      for (const auto &r : e["results"]) {
        if (r["property"] != property || r.contains("skipped")) continue;
        ++t.checks;
        if (r["agree"].is_null()) {
          ++t.unknown;
        } else if (r["agree"].get<bool>()) {
          ++t.agree;
        } else {
          ++t.disagree;
        }
        if ((r["agree"].is_null() || !r["agree"].get<bool>()) && t.first_bad.empty())
          t.first_bad = e["name"].get<std::string>() + " p=" + std::to_string(r["p"].get<int>());
      }
    }
    return t;
  }

  std::string describe(const Tally &t) {
    std::ostringstream s;
    s << t.agree << "/" << t.checks << " agree, " << t.disagree << " disagree, " << t.unknown << " unknown";
    if (!t.first_bad.empty()) s << ", first off: " << t.first_bad;
    return s.str();
  }

  double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

}

int main() {
  std::vector<CorpusEntry> corpus(build_default_corpus());
  CampaignOptions options;
  options.seed = 0;
  options.jobs = std::max(1u, std::thread::hardware_concurrency());

  auto t0(std::chrono::steady_clock::now());
  CampaignReport first(run_campaign(corpus, options));
  double campaign_seconds(seconds_since(t0));
  const json &rep(first.report);

  {
    Tally t(tally(rep, "frattini-core"));
    bool pass(t.checks > 0 && t.agree == t.checks && campaign_seconds <= 600 && first.errors == 0);
    std::ostringstream d;
    d << describe(t) << ", campaign " << static_cast<int>(campaign_seconds) << " s on " << options.jobs
      << " thread(s), " << corpus.size() << " entries";
    report(1, pass, "frattini_core order equals |core_G(Phi(P))| where O_p'(G) = 1", d.str());
  }
  {
    Tally t(tally(rep, "two-generated"));
    report(2, t.checks > 0 && t.agree == t.checks, "two_generated_p_constrained matches the oracle on p-constrained entries",
           describe(t));
  }
  {
    Tally t(tally(rep, "maximal-class"));
    Verdict sl29(has_maximal_class_sylow(dixon_schneider(named("SL(2,9)")), 2));
    bool fires(sl29.answer == Answer::Yes && sl29.reason.value("branch", "") == "quasisimple" &&
               sylow_facts(named("SL(2,9)"), 2).maximal_class);
    for (const char *name : {"A7", "GL(3,2)"}) {
      Verdict v(quasisimple_branch(dixon_schneider(named(name)), 2));
      fires = fires && v.answer == (sylow_facts(named(name), 2).maximal_class ? Answer::Yes : Answer::No);
    }
    std::ostringstream d;
    d << describe(t) << ", quasisimple branch on SL(2,9), A7, GL(3,2): " << (fires ? "correct" : "wrong");
    report(3, t.checks > 0 && t.agree == t.checks && fires, "has_maximal_class_sylow matches the oracle", d.str());
  }
  {
    Tally t(tally(rep, "minimal-nonabelian"));
    report(4, t.checks > 0 && t.agree == t.checks, "has_minimal_nonabelian_sylow matches the oracle", describe(t));
  }
  {
    CoincidenceReport c(verify_table_coincidences(std::chrono::seconds(5)));
    std::size_t pass(0);
    for (const auto &p : c.report["pairs"]) pass += p["pass"].get<bool>();
    std::ostringstream d;
    d << pass << "/" << c.report["pairs"].size() << " pairs as expected, 5 s budget per match";
    report(5, c.ok, "Gamma(2,a) ~ Delta(a,1), D8 ~ Q8, C4 !~ C2^2", d.str());
  }
  {
    std::size_t tables(0), bad_tables(0), quotients(0), bad_quotients(0);
    std::string first_bad;
    for (const auto &e : corpus) {
      Group g(e.make());
      CharacterTable t(dixon_schneider(g));
      ++tables;
      if (!check_integrity(t).ok()) {
        ++bad_tables;
        if (first_bad.empty()) first_bad = e.name;
      }
      if (g.order() > 2000) continue;
      for (const auto &n : normal_subgroup_lattice(t)) {
        ++quotients;
        CharacterTable fused(quotient_table(t, n));
        CharacterTable direct(dixon_schneider(quotient(g, realize(g, n))));
        if (!check_integrity(fused).ok() ||
            compare_tables(fused, direct, std::chrono::seconds(30)).status != EquivalenceStatus::Equivalent) {
          ++bad_quotients;
          if (first_bad.empty()) first_bad = e.name + " / " + std::to_string(n.order);
        }
      }
    }
    std::ostringstream d;
    d << tables - bad_tables << "/" << tables << " tables certified, " << quotients - bad_quotients << "/" << quotients
      << " quotient tables match";
    if (!first_bad.empty()) d << ", first off: " << first_bad;
    report(6, bad_tables == 0 && bad_quotients == 0, "table axioms exact, quotient tables equal tables of quotients",
           d.str());
  }
  {
    std::size_t grid(0), match(0);
    std::string first_bad;
    for (std::uint64_t p : {2, 3, 5}) {
      std::vector<MnaDescriptor> ds;
      for (std::uint64_t a(2); a <= 4; ++a)
        for (std::uint64_t b(1); a + b <= 5; ++b) ds.push_back({MnaKind::Gamma, p, a, b});
      for (std::uint64_t a(1); a <= 4; ++a)
        for (std::uint64_t b(1); b <= a && a + b <= 5; ++b) ds.push_back({MnaKind::Delta, p, a, b});
      for (const auto &d : ds) {
        ++grid;
        bool ok(false);
        try {
          Group g(build(d));
          MnaCharacterizations c(mna_characterizations(whole(g)));
          MnaClassification k(classify_mna(g));
          // gamma(2,2,1) is D8, reported canonically as Delta(2,1,1)
          MnaDescriptor expected(d.kind == MnaKind::Gamma && p == 2 && d.a == 2 && d.b == 1
                                     ? MnaDescriptor{MnaKind::Delta, 2, 1, 1}
                                     : d);
          ok = c.proper_subgroups_abelian && c.frattini_and_center && c.frattini_and_derived && k.descriptor &&
               *k.descriptor == expected && g.order() == d.predicted_order();
        } catch (const std::exception &) {
          ok = false;
        }
        match += ok;
        if (!ok && first_bad.empty()) first_bad = d.to_string();
      }
    }
    std::ostringstream d;
    d << match << "/" << grid << " grid groups classified back, " << first.errors << " errors in the campaign";
    if (!first_bad.empty()) d << ", first off: " << first_bad;
    report(7, match == grid && first.errors == 0, "three mna characterizations agree and classify_mna inverts the constructors",
           d.str());
  }
  {
    std::ostringstream d;
    d << first.lemma_checks << " admissible triples, " << first.lemma_counterexamples << " counterexamples";
    report(8, first.lemma_checks >= 10000 && first.lemma_counterexamples == 0, "lemma harnesses", d.str());
  }
  {
    CampaignOptions again(options);
    again.jobs = 1;
    CampaignReport second(run_campaign(corpus, again));
    bool same(first.report.dump(1) == second.report.dump(1));
    report(9, same, "campaign with seed 0 is byte-identical across runs",
           std::to_string(first.report.dump(1).size()) + " bytes, threads " + std::to_string(options.jobs) + " vs 1");
  }
  return failed == 0 ? 0 : 1;
}
