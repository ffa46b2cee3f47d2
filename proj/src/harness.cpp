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
#include <sylowscope/harness.hpp>
#include <sylowscope/io.hpp>
#include <sylowscope/numtheory.hpp>
#include <sylowscope/oracles.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <random>
#include <sstream>
#include <thread>

namespace sylowscope {

  namespace {

    using nlohmann::json;

    Group inverting(const Group &n, const std::vector<bool> &invert, std::uint64_t order, const std::string &name) {
      std::vector<Perm> images;
      for (std::size_t i(0); i < n.generators().size(); ++i)
        images.push_back(invert[i] ? n.generators()[i].inverse() : n.generators()[i]);
      return semidirect(n, cyclic(order), {images}).renamed(name);
    }

    // C_n x| C_m with the generator of C_m acting as the power map x -> x^u
    Group cyclic_extension(std::uint64_t n, std::uint64_t m, std::uint64_t u) {
      Group c(cyclic(n));
      std::vector<Perm> images{c.generators()[0].pow(static_cast<std::int64_t>(u))};
      return semidirect(c, cyclic(m), {images}).renamed("C" + std::to_string(n) + ":C" + std::to_string(m));
    }

    // x -> x + 1 and x -> u x on Z/n
    Group affine(std::uint64_t n, std::uint64_t u, const std::string &name) {
      std::vector<Point> shift(n), scale(n);
      for (std::uint64_t i(0); i < n; ++i) {
        shift[i] = static_cast<Point>((i + 1) % n);
        scale[i] = static_cast<Point>((u * i) % n);
      }
      return Group({Perm(shift), Perm(scale)}, n, name);
    }

    std::string tag(std::uint64_t v) { return std::to_string(v); }

    std::uint64_t splitmix(std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    }

    std::string file_key(const std::string &name) {
      std::string key;
      for (char c : name) key += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
      return key;
    }

    Answer expected(bool b) { return b ? Answer::Yes : Answer::No; }

  }

  std::string to_string(Property property) {
    switch (property) {
      case Property::FrattiniCore: return "frattini-core";
      case Property::Cyclic: return "cyclic";
      case Property::TwoGenerated: return "two-generated";
      case Property::MaximalClass: return "maximal-class";
      default: return "minimal-nonabelian";
    }
  }

  Property property_from_string(const std::string &name) {
    for (auto p : all_properties())
      if (to_string(p) == name) return p;
    throw BadParameters("unknown property '" + name + "'");
  }

  const std::vector<Property> &all_properties() {
    static const std::vector<Property> all{Property::FrattiniCore, Property::Cyclic, Property::TwoGenerated,
                                           Property::MaximalClass, Property::MinimalNonabelian};
    return all;
  }

  std::uint64_t entry_seed(std::uint64_t seed, const std::string &name) {
    std::uint64_t h(0xcbf29ce484222325ULL);
    for (unsigned char c : name) h = (h ^ c) * 0x100000001b3ULL;
    return splitmix(seed ^ splitmix(h));
  }

  std::vector<CorpusEntry> build_default_corpus() {
    std::vector<CorpusEntry> corpus;
    auto add = [&](std::string name, std::function<Group()> make, std::map<std::string, bool> expect = {}) {
      corpus.push_back(CorpusEntry{std::move(name), std::move(make), {}, std::move(expect)});
    };
    for (std::uint64_t p : {2, 3, 5}) {
      for (unsigned k : {1, 2, 3}) {
        std::uint64_t n(ipow(p, k));
        add("C" + tag(n), [n] { return cyclic(n); },
            {{"cyclic@" + tag(p), true}});
      }
      for (unsigned r : {2, 3}) {
        add("C" + tag(p) + "^" + tag(r), [p, r] { return elementary_abelian(p, r); },
            {{"two-generated@" + tag(p), r <= 2}});
      }
      add("C" + tag(p * p) + "xC" + tag(p), [p] { return abelian({p * p, p}); });
      for (std::uint64_t a(2); a <= 4; ++a)
        for (std::uint64_t b(1); a + b <= 5; ++b)
          add("gamma(" + tag(p) + "," + tag(a) + "," + tag(b) + ")", [p, a, b] { return gamma(p, a, b); },
              {{"minimal-nonabelian@" + tag(p), true}});
      for (std::uint64_t a(1); a <= 4; ++a)
        for (std::uint64_t b(1); b <= a && a + b <= 5; ++b)
          add("delta(" + tag(p) + "," + tag(a) + "," + tag(b) + ")", [p, a, b] { return delta(p, a, b); },
              {{"minimal-nonabelian@" + tag(p), true}});
    }
    add("D8", [] { return dihedral(8); }, {{"minimal-nonabelian@2", true}, {"maximal-class@2", true}});
    add("Q8", [] { return q8(); }, {{"minimal-nonabelian@2", true}, {"maximal-class@2", true}});
    for (std::uint64_t n : {16, 32, 64}) {
      std::string s(tag(n));
      add("D" + s, [n] { return dihedral(n); }, {{"maximal-class@2", true}});
      add("SD" + s, [n] { return semidihedral(n); }, {{"maximal-class@2", true}});
      add("Q" + s, [n] { return generalized_quaternion(n); }, {{"maximal-class@2", true}});
    }
    for (std::uint64_t p : {3, 5}) {
      add(tag(p) + "^(1+2)_" + tag(p * p), [p] { return extraspecial(p, p * p); },
          {{"minimal-nonabelian@" + tag(p), true}});
    }
    for (const char *name : {"S3", "S4", "S5", "A4", "A5", "A6", "A7", "SL(2,3)", "SL(2,5)", "SL(2,7)", "SL(2,9)",
                             "SL(2,11)", "SL(2,13)", "GL(3,2)", "PSL(2,8)", "PSL(2,11)", "PSL(2,13)", "PSL(3,3)",
                             "PSU(3,3)", "M9", "A4:C4", "M9:C9"}) {
      std::string n(name);
      add(n, [n] { return named(n); });
    }
    corpus.back().expectations["minimal-nonabelian@3"] = true;
    for (auto &e : corpus) {
      if (e.name == "A7") e.expectations["minimal-nonabelian@2"] = true;
      if (e.name == "SL(2,9)") e.expectations["maximal-class@2"] = true;
      if (e.name == "SL(2,3)") e.expectations["minimal-nonabelian@2"] = true;
      if (e.name == "GL(3,2)") e.expectations["minimal-nonabelian@2"] = true;
      if (e.name == "SL(2,5)") e.expectations["minimal-nonabelian@2"] = true;
      if (e.name == "A4:C4") e.expectations["minimal-nonabelian@2"] = true;
      if (e.name == "S4") e.expectations["maximal-class@2"] = true;
      if (e.name == "C2^3") e.expectations["two-generated@2"] = false;
    }
    add("C3^3:C2", [] { return inverting(elementary_abelian(3, 3), {true, true, true}, 2, "C3^3:C2"); },
        {{"two-generated@3", false}, {"maximal-class@3", false}});
    add("gamma(3,2,1):C2", [] { return inverting(gamma(3, 2, 1), {true, false}, 2, "gamma(3,2,1):C2"); },
        {{"two-generated@3", true}});
    add("C5^2:C2", [] { return inverting(elementary_abelian(5, 2), {true, true}, 2, "C5^2:C2"); });
    add("C3^2:C4", [] {
      Group n(elementary_abelian(3, 2));
      // (u, v) -> (-v, u)
      std::vector<Perm> images{n.generators()[1], n.generators()[0].inverse()};
      return semidirect(n, cyclic(4), {images}).renamed("C3^2:C4");
    });
    // p'-parts around p-groups exercise the O_p' reduction
    for (std::uint64_t n : {6, 10, 12, 14, 18, 20, 24, 40}) {
      add("D" + tag(n), [n] { return dihedral(n); });
    }
    add("C9:C6", [] { return affine(9, 2, "C9:C6"); });
    add("F20", [] { return affine(5, 2, "F20"); });
    add("F21", [] { return affine(7, 2, "F21"); });
    add("F42", [] { return affine(7, 3, "F42"); });
    add("C11:C5", [] { return affine(11, 3, "C11:C5"); });
    add("C13:C3", [] { return affine(13, 3, "C13:C3"); });
    add("C13:C4", [] { return affine(13, 5, "C13:C4"); });
    add("C3:C4", [] { return cyclic_extension(3, 4, 2); });
    add("C3:C8", [] { return cyclic_extension(3, 8, 2); });
    add("C5:C4", [] { return cyclic_extension(5, 4, 4); });
    add("C5:C8", [] { return cyclic_extension(5, 8, 2); });
    add("C7:C9", [] { return cyclic_extension(7, 9, 2); });
    add("C9:C4", [] { return cyclic_extension(9, 4, 8); });
    struct Factor {
      const char *name;
      std::function<Group()> make;
    };
    std::vector<Factor> left{{"D8", [] { return dihedral(8); }},
                             {"Q8", [] { return q8(); }},
                             {"C4", [] { return cyclic(4); }},
                             {"C2^2", [] { return elementary_abelian(2, 2); }},
                             {"S3", [] { return named("S3"); }},
                             {"A4", [] { return named("A4"); }},
                             {"SL(2,3)", [] { return named("SL(2,3)"); }},
                             {"gamma(3,2,1)", [] { return gamma(3, 2, 1); }},
                             {"3^(1+2)_3", [] { return extraspecial(3, 3); }}};
    for (const auto &f : left) {
      for (std::uint64_t m : {2, 3, 5}) {
        std::string name(std::string(f.name) + "xC" + tag(m));
        auto make(f.make);
        add(name, [make, m, name] { return direct_product(make(), cyclic(m)).renamed(name); });
      }
    }
    add("A5xC2", [] { return direct_product(named("A5"), cyclic(2)).renamed("A5xC2"); });
    add("A5xC3", [] { return direct_product(named("A5"), cyclic(3)).renamed("A5xC3"); });
    add("S3xS3", [] { return direct_product(named("S3"), named("S3")).renamed("S3xS3"); });
    add("S4xC3", [] { return direct_product(named("S4"), cyclic(3)).renamed("S4xC3"); });
    add("D8xD8", [] { return direct_product(dihedral(8), dihedral(8)).renamed("D8xD8"); });
    add("C4xC4", [] { return abelian({4, 4}); });
    add("C4xC2^2", [] { return abelian({4, 2, 2}); });
    add("C8xC4", [] { return abelian({8, 4}); });
    add("Q8xQ8", [] { return direct_product(q8(), q8()).renamed("Q8xQ8"); });
    add("SL(2,5)xC3", [] { return direct_product(named("SL(2,5)"), cyclic(3)).renamed("SL(2,5)xC3"); });
    add("GL(3,2)xC3", [] { return direct_product(named("GL(3,2)"), cyclic(3)).renamed("GL(3,2)xC3"); });
    return corpus;
  }

  std::optional<CorpusEntry> find_entry(const std::string &name) {
    for (auto &e : build_default_corpus())
      if (e.name == name) return e;
    return std::nullopt;
  }

  CharacterTable cached_table(const Group &group, const std::string &key, std::uint64_t seed,
                              bool strict_abstract, const std::optional<std::string> &cache_dir) {
    std::filesystem::path path;
    if (cache_dir) {
      path = std::filesystem::path(*cache_dir) / (file_key(key) + ".json");
      if (std::filesystem::exists(path)) return table_from_json(read_json(path)).with_strict_abstract(strict_abstract);
    }
    // canonical column order either way, so traces do not depend on the cache
    CharacterTable t(canonical_columns(dixon_schneider(group, DixonOptions{seed, strict_abstract})));
    if (cache_dir) {
      std::filesystem::create_directories(*cache_dir);
      write_json(path, table_to_json(t));
    }
    return t;
  }

  LemmaStats sample_lemmas(const Group &group, std::uint64_t seed, std::size_t budget) {
    LemmaStats stats;
    std::mt19937_64 rng(seed);
    std::uint64_t order(group.order());
    auto pick = [&](std::uint64_t n) { return static_cast<std::size_t>(rng() % n); };
    // A: the normal closure of <a> in <x,a>, or <a> itself when x normalizes it
    // subgroup generation dominates; large groups get a smaller share
    if (order > 1024) budget = std::min<std::size_t>(budget, std::max<std::size_t>(40, budget * 1024 / order));
    std::size_t half(budget / 2);
    for (std::size_t attempt(0); attempt < 3 * half && stats.lemabel_checks < half; ++attempt) {
      ElemId x(static_cast<ElemId>(pick(order))), a(static_cast<ElemId>(pick(order)));
      SubgroupHandle h(generate(group, std::vector<ElemId>{x, a}));
      SubgroupHandle cands[2]{normal_closure(h, std::vector<ElemId>{a}), generate(group, std::vector<ElemId>{a})};
      for (const auto &na : cands) {
        if (!lemabel_admissible(h, na, x)) continue;
        ++stats.lemabel_checks;
        if (!verify_lemabel(h, na, x)) {
          ++stats.counterexamples;
          stats.failures.push_back(json{{"lemma", "lemabel"}, {"x", x}, {"a", a}});
        }
        break;
      }
    }
    for (auto p : prime_divisors(order)) {
      SubgroupHandle s(sylow(group, p));
      if (s.order() <= p) continue;
      std::vector<SubgroupHandle> maximal(maximal_subgroups(s));
      SubgroupHandle derived(derived_subgroup(s));
      // for maximal Q: x outside Q with x^p in P', listed lazily
      std::vector<std::optional<std::vector<ElemId>>> outside(maximal.size());
      std::size_t share((budget - half) / prime_divisors(order).size());
      std::size_t target(stats.lemPhi_checks + share);
      for (std::size_t attempt(0); attempt < 3 * share && stats.lemPhi_checks < target; ++attempt) {
        ElemId x(s.elements()[pick(s.order())]);
        SubgroupHandle q;
        if (attempt % 2 == 0) {
          std::size_t i(pick(maximal.size()));
          q = maximal[i];
          if (!outside[i]) {
            outside[i].emplace();
            for (ElemId y : s.elements())
              if (!q.contains(y) && derived.contains(group.pow(y, static_cast<std::int64_t>(p))))
                outside[i]->push_back(y);
          }
          if (outside[i]->empty()) continue;
          x = (*outside[i])[pick(outside[i]->size())];
        } else {
          q = normal_closure(s, std::vector<ElemId>{s.elements()[pick(s.order())]});
        }
        if (!lemPhi_admissible(s, q, x)) continue;
        ++stats.lemPhi_checks;
        if (!verify_lemPhi(s, q, x)) {
          ++stats.counterexamples;
          stats.failures.push_back(json{{"lemma", "lemPhi"}, {"p", p}, {"x", x}});
        }
      }
    }
    return stats;
  }

  namespace {

    struct EntryOutcome {
      json record;
      std::size_t checks{0}, disagreements{0}, expectation_failures{0}, unknowns{0}, errors{0};
      std::size_t lemma_checks{0}, lemma_counterexamples{0};
    };

    EntryOutcome run_entry(const CorpusEntry &entry, const CampaignOptions &options) {
      EntryOutcome out;
      out.record = json{{"name", entry.name}};
      try {
        Group g(entry.make());
        std::uint64_t seed(entry_seed(options.seed, entry.name));
        CharacterTable t(cached_table(g, entry.name, seed, options.strict_abstract, options.cache_dir));
        out.record["order"] = g.order();
        out.record["classes"] = t.size();
        std::vector<std::uint64_t> primes(entry.primes.empty() ? prime_divisors(g.order()) : entry.primes);
        json results = json::array();
        for (auto p : primes) {
          SylowFacts f(sylow_facts(g, p));
          for (auto prop : options.properties) {
            json r{{"p", p}, {"property", to_string(prop)}};
            std::optional<Verdict> v;
            std::optional<bool> truth;
            switch (prop) {
              case Property::FrattiniCore:
                if (f.o_p_prime_order != 1) {
                  r["skipped"] = "O_p'(G) != 1";
                  break;
                } else {
                  std::uint64_t got(frattini_core(t, p).order);
                  r["detector"] = got;
                  r["oracle"] = f.frattini_core_order;
                  r["agree"] = got == f.frattini_core_order;
                  ++out.checks;
                  if (got != f.frattini_core_order) ++out.disagreements;
                }
                break;
              case Property::Cyclic:
                v = is_sylow_cyclic(t, p);
                truth = f.cyclic;
                break;
              case Property::TwoGenerated:
                if (!f.p_constrained) {
                  r["skipped"] = "not p-constrained";
                } else {
                  v = two_generated_p_constrained(t, p);
                  truth = f.two_generated;
                }
                break;
              case Property::MaximalClass:
                v = has_maximal_class_sylow(t, p);
                truth = f.maximal_class;
                break;
              case Property::MinimalNonabelian:
                v = has_minimal_nonabelian_sylow(t, p);
                truth = f.minimal_nonabelian;
                break;
            }
            if (v) {
              ++out.checks;
              r["detector"] = to_json(*v);
              r["oracle"] = *truth;
              if (v->answer == Answer::Unknown) {
                ++out.unknowns;
                r["agree"] = nullptr;
              } else {
                bool agree(v->answer == expected(*truth));
                r["agree"] = agree;
                if (!agree) ++out.disagreements;
              }
            }
            auto ex(entry.expectations.find(to_string(prop) + "@" + std::to_string(p)));
            if (ex != entry.expectations.end()) {
              bool met(truth && *truth == ex->second &&
                       (!v || v->answer == Answer::Unknown || v->answer == expected(ex->second)));
              r["expectation"] = ex->second;
              r["expectation_met"] = met;
              if (!met) ++out.expectation_failures;
            }
            results.push_back(std::move(r));
          }
        }
        out.record["results"] = std::move(results);
        if (options.lemmas) {
          LemmaStats ls(sample_lemmas(g, seed, options.lemma_budget));
          out.record["lemmas"] = json{{"lemabel", ls.lemabel_checks}, {"lemPhi", ls.lemPhi_checks},
                                      {"counterexamples", ls.counterexamples}, {"failures", ls.failures}};
          out.lemma_checks = ls.lemabel_checks + ls.lemPhi_checks;
          out.lemma_counterexamples = ls.counterexamples;
        }
      } catch (const std::exception &e) {
        ++out.errors;
        out.record["error"] = e.what();
      }
      return out;
    }

  }

  CampaignReport run_campaign(const std::vector<CorpusEntry> &corpus, const CampaignOptions &options) {
    std::vector<EntryOutcome> outcomes(corpus.size());
    std::atomic<std::size_t> next(0);
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) outcomes[i] = run_entry(corpus[i], options);
    };
    unsigned jobs(std::max(1u, options.jobs));
    std::vector<std::thread> pool;
    for (unsigned j(1); j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto &th : pool) th.join();

    CampaignReport rep;
    json entries = json::array(), failures = json::array();
    for (auto &o : outcomes) {
      rep.checks += o.checks;
      rep.disagreements += o.disagreements;
      rep.expectation_failures += o.expectation_failures;
      rep.unknowns += o.unknowns;
      rep.errors += o.errors;
      rep.lemma_checks += o.lemma_checks;
      rep.lemma_counterexamples += o.lemma_counterexamples;
      if (o.record.contains("error")) failures.push_back(json{{"name", o.record["name"]}, {"error", o.record["error"]}});
      if (o.record.contains("results")) {
        for (const auto &r : o.record["results"]) {
          bool bad((r.contains("agree") && r["agree"].is_boolean() && !r["agree"].get<bool>()) ||
                   (r.contains("expectation_met") && !r["expectation_met"].get<bool>()));
          if (bad) failures.push_back(json{{"name", o.record["name"]}, {"p", r["p"]}, {"property", r["property"]}});
        }
      }
      entries.push_back(std::move(o.record));
    }
    rep.report = json{{"seed", options.seed},
                      {"strict_abstract", options.strict_abstract},
                      {"entries", std::move(entries)},
                      {"failures", std::move(failures)},
                      {"summary",
                       {{"entries", corpus.size()},
                        {"checks", rep.checks},
                        {"disagreements", rep.disagreements},
                        {"expectation_failures", rep.expectation_failures},
                        {"unknowns", rep.unknowns},
                        {"errors", rep.errors},
                        {"lemma_checks", rep.lemma_checks},
                        {"lemma_counterexamples", rep.lemma_counterexamples}}}};
    return rep;
  }

  std::string CampaignReport::summary() const {
    std::ostringstream s;
    auto line = [&](const char *label, std::size_t v) {
      s << label << std::string(24 - std::string(label).size(), ' ') << v << "\n";
    };
    line("entries", report["entries"].size());
    line("checks", checks);
    line("disagreements", disagreements);
    line("expectation failures", expectation_failures);
    line("unknowns", unknowns);
    line("errors", errors);
    line("lemma checks", lemma_checks);
    line("lemma counterexamples", lemma_counterexamples);
    return s.str();
  }

  CoincidenceReport verify_table_coincidences(std::chrono::milliseconds budget) {
    struct Pair {
      std::string left, right;
      std::function<Group()> a, b;
      bool equivalent;
    };
    std::vector<Pair> pairs;
    for (std::uint64_t p : {2, 3, 5})
      for (std::uint64_t a : {2, 3})
        pairs.push_back({"gamma(" + tag(p) + ",2," + tag(a) + ")", "delta(" + tag(p) + "," + tag(a) + ",1)",
                         [p, a] { return gamma(p, 2, a); }, [p, a] { return delta(p, a, 1); }, true});
    pairs.push_back({"D8", "Q8", [] { return dihedral(8); }, [] { return q8(); }, true});
    pairs.push_back({"C4", "C2^2", [] { return cyclic(4); }, [] { return elementary_abelian(2, 2); }, false});
    CoincidenceReport rep;
    rep.ok = true;
    json items = json::array();
    for (const auto &pr : pairs) {
      Group ga(pr.a()), gb(pr.b());
      EquivalenceResult r(compare_tables(dixon_schneider(ga), dixon_schneider(gb), budget));
      std::string status(r.status == EquivalenceStatus::Equivalent     ? "equivalent"
                         : r.status == EquivalenceStatus::Inequivalent ? "inequivalent"
                                                                       : "timeout");
      bool pass(pr.equivalent ? r.status == EquivalenceStatus::Equivalent
                              : r.status == EquivalenceStatus::Inequivalent);
      rep.ok = rep.ok && pass;
      items.push_back(json{{"left", pr.left}, {"right", pr.right}, {"order", ga.order()},
                           {"expected", pr.equivalent ? "equivalent" : "inequivalent"}, {"status", status},
                           {"pass", pass}});
    }
    rep.report = json{{"pairs", std::move(items)}, {"ok", rep.ok}};
    return rep;
  }

}
