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

#include <sylowscope/detectors.hpp>
#include <sylowscope/errors.hpp>
#include <sylowscope/numtheory.hpp>

#include <algorithm>

namespace sylowscope {

  namespace {

    using nlohmann::json;

    std::uint64_t pp(std::uint64_t n, std::uint64_t p) { return p_part(n, p).p_part; }

    json member_json(const TableNormalSubgroup &m) {
      return json{{"order", m.order}, {"classes", m.classes}};
    }

    // a table together with the reductions that produced it
    struct Stage {
      CharacterTable table;
      json reductions = json::array();
      std::vector<TableNormalSubgroup> lattice;

      explicit Stage(CharacterTable t): table(std::move(t)), lattice(normal_subgroup_lattice(table)) {}

      void pass_to(const TableNormalSubgroup &n, const std::string &why) {
        json r(member_json(n));
        r["why"] = why;
        reductions.push_back(std::move(r));
        table = quotient_table(table, n);
        lattice = normal_subgroup_lattice(table);
      }
      std::uint64_t sylow_order(std::uint64_t p) const { return pp(table.group_order(), p); }
    };

    // largest member whose order is coprime to p (resp. a power of p)
    const TableNormalSubgroup &largest_member(const Stage &s, std::uint64_t p, bool p_power) {
      const TableNormalSubgroup *best(&s.lattice.front());
      for (const auto &m : s.lattice) {
        bool fits(p_power ? is_power_of(m.order, p) : m.order % p != 0);
        if (fits && m.order > best->order) best = &m;
      }
      return *best;
    }

    void reduce_p_prime(Stage &s, std::uint64_t p) {
      const TableNormalSubgroup &o(largest_member(s, p, false));
      if (o.order > 1) s.pass_to(TableNormalSubgroup(o), "O_p'");
    }

    // the almost p-rational rows of p'-degree; assumes O_p'(G) = 1
    std::vector<std::size_t> almost_rational_rows(const CharacterTable &t, std::uint64_t p) {
      std::vector<std::size_t> rows;
      for (std::size_t r(0); r < t.size(); ++r) {
        if (t.degree(r) % p == 0) continue;
        if (t.row_feit_number(r) % (p * p) == 0) continue;
        rows.push_back(r);
      }
      return rows;
    }

    std::vector<std::uint32_t> p_columns(const CharacterTable &t, std::uint64_t p) {
      std::vector<std::uint32_t> cols;
      for (auto c : locate_p_elements(t, p))
        if (t.element_orders()[c] > 1) cols.push_back(c);
      return cols;
    }

    // every p-element has a p'-class size; the table knows abelian Sylow subgroups this way
    bool sylow_abelian(const CharacterTable &t, std::uint64_t p) {
      std::uint64_t np(pp(t.group_order(), p));
      for (auto c : p_columns(t, p))
        if (pp(t.centralizer_order(c), p) != np) return false;
      return true;
    }

    const TableNormalSubgroup *normal_sylow(const Stage &s, std::uint64_t p) {
      std::uint64_t np(s.sylow_order(p));
      for (const auto &m : s.lattice)
        if (m.order == np) return &m;
      return nullptr;
    }

    // for a normal Sylow P: the smallest member M <= P with P/M elementary
    // abelian, tested in G/M where P/M is again a normal Sylow subgroup
    TableNormalSubgroup frattini_of_normal(const Stage &s, const TableNormalSubgroup &sylow, std::uint64_t p) {
      std::vector<std::uint32_t> powers;
      for (auto c : sylow.classes) powers.push_back(s.table.power_class(c, p));
      for (const auto &m : s.lattice) {
        if (!m.is_subset_of(sylow)) continue;
        // P/M of exponent p needs every p-th power inside M
        if (!std::all_of(powers.begin(), powers.end(), [&](std::uint32_t c) { return m.contains(c); })) continue;
        CharacterTable q(quotient_table(s.table, m));
        std::vector<std::uint32_t> fused(quotient_fusion(s.table, m));
        std::uint64_t nq(pp(q.group_order(), p));
        bool elementary(true);
        for (auto c : sylow.classes) {
          std::uint32_t d(fused[c]);
          if (q.element_orders()[d] > p || pp(q.centralizer_order(d), p) != nq) {
            elementary = false;
            break;
          }
        }
        if (elementary) return m;  // lattice is sorted by order
      }
      return sylow;
    }

    // |Z(P)| for a normal Sylow P: elements of P centralizing all of P
    std::uint64_t center_of_normal(const Stage &s, const TableNormalSubgroup &sylow) {
      std::uint64_t z(0);
      for (auto c : sylow.classes)
        if (s.table.centralizer_order(c) % sylow.order == 0) z += s.table.class_sizes()[c];
      return z;
    }

    // G/O_p(G) for the p-constrained models above: S3, SL(2,3), GL(2,3)
    const std::vector<std::pair<std::uint64_t, SimpleFingerprint>> constrained_tops{
        {2, {6, 3, {1, 1, 2}, "S3", {}, false}},
        {3, {24, 7, {1, 1, 1, 2, 2, 2, 3}, "SL(2,3)", {}, false}},
        {3, {48, 8, {1, 1, 2, 2, 2, 3, 3, 4}, "GL(2,3)", {}, false}}};

    Verdict verdict(Answer a, json reason, std::vector<std::string> boxes = {}) {
      return Verdict{a, std::move(reason), std::move(boxes)};
    }

    std::vector<std::uint64_t> sorted_degrees(const CharacterTable &t) {
      std::vector<std::uint64_t> d;
      for (std::size_t r(0); r < t.size(); ++r) d.push_back(t.degree(r));
      std::sort(d.begin(), d.end());
      return d;
    }

  }

  std::string to_string(Answer answer) {
    switch (answer) {
      case Answer::Yes: return "Yes";
      case Answer::No: return "No";
      default: return "Unknown";
    }
  }

  json to_json(const Verdict &v) {
    return json{{"answer", to_string(v.answer)}, {"reason", v.reason}, {"used_black_boxes", v.used_black_boxes}};
  }

  SimpleFingerprint fingerprint_of(const CharacterTable &table) {
    SimpleFingerprint f;
    f.order = table.group_order();
    f.class_count = table.size();
    f.degrees = sorted_degrees(table);
    return f;
  }

  std::optional<SimpleFingerprint> lookup_fingerprint(const CharacterTable &table) {
    SimpleFingerprint f(fingerprint_of(table));
    for (const auto &e : fingerprint_database())
      if (e.order == f.order && e.class_count == f.class_count && e.degrees == f.degrees) return e;
    return std::nullopt;
  }

  TableNormalSubgroup frattini_core(const CharacterTable &table, std::uint64_t p) {
    Stage s(table);
    const TableNormalSubgroup &o(largest_member(s, p, false));
    std::vector<std::size_t> rows;
    for (auto r : rows_over(table, o)) {
      if (table.degree(r) % p == 0) continue;
      if (table.row_feit_number(r) % (p * p) == 0) continue;
      rows.push_back(r);
    }
    // the inflated rows keep degree and field, so their kernels give the preimage
    return kernel_intersection(table, rows);
  }

  Verdict is_sylow_cyclic(const CharacterTable &table, std::uint64_t p) {
    std::uint64_t np(pp(table.group_order(), p));
    for (std::uint32_t c(0); c < table.size(); ++c) {
      if (table.element_orders()[c] == np)
        return verdict(Answer::Yes, json{{"branch", "generator"}, {"sylow_order", np}, {"column", c}},
                       {"element orders locate p-elements"});
    }
    return verdict(Answer::No, json{{"branch", "no element of order |G|_p"}, {"sylow_order", np}},
                   {"element orders locate p-elements"});
  }

  Verdict two_generated_p_constrained(const CharacterTable &table, std::uint64_t p) {
    std::vector<std::string> boxes{"element orders locate p-elements", "Q(x) read from the column"};
    Stage s(table);
    // alternate until both the p'-core and the core of the Frattini subgroup vanish
    for (;;) {
      reduce_p_prime(s, p);
      TableNormalSubgroup k(kernel_intersection(s.table, almost_rational_rows(s.table, p)));
      if (k.order == 1) break;
      s.pass_to(k, "core_G(Phi(P))");
    }
    std::uint64_t np(s.sylow_order(p));
    json trace{{"reductions", s.reductions}, {"sylow_order", np}};
    auto done = [&](Answer a, const char *branch, std::uint64_t rank) {
      trace["branch"] = branch;
      trace["rank"] = rank;
      return verdict(a, trace, boxes);
    };
    if (np == 1) return done(Answer::Yes, "trivial Sylow", 0);
    for (std::uint32_t c(0); c < s.table.size(); ++c) {
      if (s.table.element_orders()[c] == np) {
        trace["column"] = c;
        return done(Answer::Yes, "cyclic", 1);
      }
    }
    const TableNormalSubgroup &n(largest_member(s, p, true));
    trace["O_p"] = member_json(n);
    if (n.order == 1) {
      trace["branch"] = "trivial p-core";
      trace["error"] = "PreconditionViolation: group is not p-constrained";
      return verdict(Answer::Unknown, trace, boxes);
    }
    if (n.order == np) {
      TableNormalSubgroup phi(frattini_of_normal(s, n, p));
      trace["frattini"] = member_json(phi);
      std::uint64_t rank(log_exact(np / phi.order, p));
      return done(rank <= 2 ? Answer::Yes : Answer::No, "normal Sylow", rank);
    }
    // P non-abelian from here on; a rank 2 Sylow forces N to be the unique minimal normal subgroup
    for (const auto &m : s.lattice) {
      if (m.order > 1 && !n.is_subset_of(m)) {
        trace["other_normal"] = member_json(m);
        trace["branch"] = "O_p not the unique minimal normal subgroup";
        return verdict(Answer::No, trace, boxes);
      }
    }
    CharacterTable q(quotient_table(s.table, n));
    std::vector<std::uint32_t> fused(quotient_fusion(s.table, n));
    std::uint64_t pa(pp(q.group_order(), p));
    bool cyclic_top(std::any_of(q.element_orders().begin(), q.element_orders().end(),
                                [&](std::uint64_t o) { return o == pa; }));
    trace["top_order"] = pa;
    if (!cyclic_top) {
      trace["branch"] = "P/N not cyclic";
      return verdict(Answer::No, trace, boxes);
    }
    std::uint32_t x(0);
    bool found(false);
    for (auto c : p_columns(s.table, p)) {
      if (q.element_orders()[fused[c]] == pa) {
        x = c;
        found = true;
        break;
      }
    }
    if (!found) throw InternalInconsistency("no p-element maps onto a generator of P/N");
    std::uint64_t cn(pp(s.table.centralizer_order(x), p) / pa);
    std::uint64_t derived(n.order / cn);
    std::uint64_t fp(pp(column_rationality(s.table, x).field_degree, p));
    int nn(log_exact(cn, p));
    std::uint64_t rank(p * fp == pa ? nn + 1 : nn);
    trace["column"] = x;
    trace["C_N(x)"] = cn;
    trace["derived_order"] = derived;
    trace["field_degree_p_part"] = fp;
    return done(rank <= 2 ? Answer::Yes : Answer::No, "x generates P/N", rank);
  }

  Verdict quasisimple_branch(const CharacterTable &table, std::uint64_t p) {
    std::vector<std::string> boxes{"simple chief factor identified from the table"};
    Stage s(table);
    reduce_p_prime(s, p);
    std::uint64_t np(s.sylow_order(p));
    json trace{{"reductions", s.reductions}, {"sylow_order", np}, {"branch", "quasisimple"}};
    auto finish = [&](Answer a, const char *why) {
      trace["outcome"] = why;
      return verdict(a, trace, boxes);
    };
    // K = O^p'(G): smallest member of p'-index
    const TableNormalSubgroup *k(&s.lattice.back());
    for (const auto &m : s.lattice)
      if ((s.table.group_order() / m.order) % p != 0 && m.order < k->order) k = &m;
    trace["K"] = member_json(*k);
    std::vector<const TableNormalSubgroup *> inner;
    for (const auto &m : s.lattice)
      if (m.order > 1 && m.order < k->order && m.is_subset_of(*k)) inner.push_back(&m);
    if (inner.size() > 1) return finish(Answer::No, "K has several normal sections");
    TableNormalSubgroup z(s.lattice.front());
    if (!inner.empty()) z = *inner.front();
    trace["Z"] = member_json(z);
    if (z.order > p) return finish(Answer::No, "|Z(K)| > p");
    std::uint64_t section(k->order / z.order);
    if (prime_power(section)) return finish(Answer::No, "K/Z(K) is abelian");
    std::optional<SimpleFingerprint> hit;
    if (k->order == s.table.group_order()) {
      hit = lookup_fingerprint(z.order == 1 ? s.table : quotient_table(s.table, z));
      if (hit && !hit->simple) hit.reset();
    } else {
      // K/Z(K) is a non-abelian chief factor; below the first coincidence of
      // simple orders the order pins it down
      for (const auto &e : fingerprint_database())
        if (e.simple && e.order == section) hit = e;
      trace["order_only_match"] = true;
    }
    if (!hit) return finish(Answer::Unknown, "fingerprint miss");
    trace["fingerprint"] = hit->name;
    auto rec(hit->sylow_data.find(p));
    if (rec == hit->sylow_data.end() || rec->second.order * z.order != np)
      return finish(Answer::Unknown, "fingerprint lacks matching Sylow data");
    if (!rec->second.maximal_class) return finish(Answer::No, "Sylow of K/Z(K) not of maximal class");
    if (z.order == 1) return finish(Answer::Yes, "K simple, Sylow of maximal class");
    // Z(K) = Z(P) exactly when no p-element outside Z(K) is p-central
    for (auto c : p_columns(s.table, p)) {
      if (z.contains(c)) continue;
      if (pp(s.table.centralizer_order(c), p) == np) {
        trace["column"] = c;
        return finish(Answer::No, "p-central element outside Z(K)");
      }
    }
    return finish(Answer::Yes, "Z(K) = Z(P)");
  }

  Verdict has_maximal_class_sylow(const CharacterTable &table, std::uint64_t p) {
    Stage s(table);
    reduce_p_prime(s, p);
    std::uint64_t np(s.sylow_order(p));
    json trace{{"reductions", s.reductions}, {"sylow_order", np}};
    if (np <= p * p) {
      trace["branch"] = "|P| <= p^2";
      return verdict(Answer::Yes, trace);
    }
    for (auto c : p_columns(s.table, p)) {
      if (pp(s.table.centralizer_order(c), p) == p * p) {
        trace["branch"] = "centralizer of order p^2";
        trace["column"] = c;
        return verdict(Answer::Yes, trace, {"element orders locate p-elements"});
      }
    }
    Verdict v(quasisimple_branch(s.table, p));
    v.reason["reductions"] = s.reductions;
    v.used_black_boxes.push_back("structure of groups without a p^2 centralizer");
    return v;
  }

  Verdict has_minimal_nonabelian_sylow(const CharacterTable &table, std::uint64_t p) {
    std::vector<std::string> boxes{"the table knows whether P is abelian"};
    Stage s(table);
    reduce_p_prime(s, p);
    std::uint64_t np(s.sylow_order(p));
    json trace{{"reductions", s.reductions}, {"sylow_order", np}};
    auto finish = [&](Answer a, const char *branch) {
      trace["branch"] = branch;
      return verdict(a, trace, boxes);
    };
    if (np <= p * p) return finish(Answer::No, "|P| <= p^2, abelian");
    if (sylow_abelian(s.table, p)) return finish(Answer::No, "P abelian");
    if (np == p * p * p) return finish(Answer::Yes, "non-abelian of order p^3");
    if (const TableNormalSubgroup *sylow = normal_sylow(s, p)) {
      TableNormalSubgroup phi(frattini_of_normal(s, *sylow, p));
      std::uint64_t z(center_of_normal(s, *sylow));
      trace["frattini"] = member_json(phi);
      trace["center_order"] = z;
      bool mna(np / phi.order == p * p && np / z == p * p);
      return finish(mna ? Answer::Yes : Answer::No, "normal Sylow");
    }
    boxes.push_back("classification of groups with minimal non-abelian Sylow subgroups");
    bool simple_section(false);
    for (const auto &m : s.lattice) {
      if (m.order == 1 || prime_power(m.order)) continue;
      bool minimal(std::none_of(s.lattice.begin(), s.lattice.end(), [&](const TableNormalSubgroup &u) {
        return u.order > 1 && u.order < m.order && u.is_subset_of(m);
      }));
      if (minimal) {
        trace["simple_normal"] = member_json(m);
        simple_section = true;
        break;
      }
    }
    if (!simple_section) {
      // p-constrained: only A4:C_2^a and M9:C_3^a, M9:D_(2.3^a) carry a non-normal
      // minimal non-abelian Sylow of order >= p^4; all have |P:O_p(G)| = p
      const TableNormalSubgroup &n(largest_member(s, p, true));
      trace["O_p"] = member_json(n);
      if (np / n.order != p) return finish(Answer::No, "p-constrained, |P:O_p(G)| != p");
      SimpleFingerprint top(fingerprint_of(quotient_table(s.table, n)));
      bool model(std::any_of(constrained_tops.begin(), constrained_tops.end(), [&](const auto &t) {
        return t.first == p && t.second.order == top.order && t.second.class_count == top.class_count &&
               t.second.degrees == top.degrees;
      }));
      if (!model) return finish(Answer::No, "p-constrained, G/O_p(G) not of the required shape");
    }
    std::optional<SimpleFingerprint> hit(lookup_fingerprint(s.table));
    if (!hit) return finish(Answer::Unknown, "fingerprint miss");
    trace["fingerprint"] = hit->name;
    boxes.push_back("simple chief factor identified from the table");
    auto rec(hit->sylow_data.find(p));
    if (rec == hit->sylow_data.end() || rec->second.order != np)
      return finish(Answer::Unknown, "fingerprint lacks matching Sylow data");
    return finish(rec->second.minimal_nonabelian ? Answer::Yes : Answer::No, "fingerprint");
  }

}
