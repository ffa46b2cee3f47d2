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

#include <sylowscope/errors.hpp>
#include <sylowscope/numtheory.hpp>
#include <sylowscope/oracles.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace sylowscope {

  namespace {
    std::uint64_t prime_of(const SubgroupHandle &h) {
      std::uint64_t p(0);
      if (!is_p_group(h.order(), &p)) throw NotAPGroup("order " + std::to_string(h.order()) + " is not a prime power");
      return p;
    }

    std::size_t log_order(std::uint64_t order, std::uint64_t p) {
      return order == 1 ? 0 : static_cast<std::size_t>(log_exact(order, p));
    }

    bool is_abelian(const SubgroupHandle &h) {
      const Group &g(h.parent());
      const auto &gens(h.generator_ids());
      for (std::size_t i(0); i < gens.size(); ++i)
        for (std::size_t j(i + 1); j < gens.size(); ++j)
          if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
      return true;
    }

    std::vector<ElemId> with(std::vector<ElemId> a, const std::vector<ElemId> &b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }

    // representatives of a basis of P/Phi(P)
    std::vector<ElemId> frattini_basis(const SubgroupHandle &p, const SubgroupHandle &phi) {
      std::vector<ElemId> basis;
      SubgroupHandle span(phi);
      for (ElemId x : p.elements()) {
        if (span.order() == p.order()) break;
        if (span.contains(x)) continue;
        basis.push_back(x);
        span = generate(p.parent(), with(phi.generator_ids(), basis));
      }
      return basis;
    }
  }

  bool is_maximal_class(const SubgroupHandle &pgroup) {
    std::uint64_t p(prime_of(pgroup));
    std::size_t n(log_order(pgroup.order(), p));
    if (n <= 2) return true;
    return nilpotency_class(pgroup) == n - 1;
  }

  bool is_maximal_class(const Group &pgroup) { return is_maximal_class(whole(pgroup)); }

  std::vector<SubgroupHandle> maximal_subgroups(const SubgroupHandle &pgroup) {
    std::uint64_t p(prime_of(pgroup));
    const Group &g(pgroup.parent());
    auto phi(frattini_of_pgroup(pgroup));
    auto basis(frattini_basis(pgroup, phi));
    std::size_t r(basis.size());
    std::vector<SubgroupHandle> result;
    // hyperplanes of F_p^r, one per functional with leading coefficient 1
    std::vector<std::uint64_t> f(r, 0);
    std::uint64_t total(ipow(p, static_cast<unsigned>(r)));
    for (std::uint64_t code(1); code < total; ++code) {
      std::uint64_t c(code);
      for (std::size_t i(0); i < r; ++i) {
        f[i] = c % p;
        c /= p;
      }
      std::size_t lead(0);
      while (f[lead] == 0) ++lead;
      if (f[lead] != 1) continue;
      std::vector<ElemId> gens(phi.generator_ids());
      for (std::size_t j(0); j < r; ++j) {
        if (j == lead) continue;
        // e_j - f_j e_lead
        ElemId x(basis[j]);
        std::uint64_t coeff((p - f[j]) % p);
        x = g.mul(x, g.pow(basis[lead], static_cast<std::int64_t>(coeff)));
        gens.push_back(x);
      }
      result.push_back(generate(g, gens));
    }
    return result;
  }

  MnaCharacterizations mna_characterizations(const SubgroupHandle &pgroup) {
    std::uint64_t p(prime_of(pgroup));
    MnaCharacterizations c;
    std::uint64_t p2(p * p);
    auto phi(frattini_of_pgroup(pgroup));
    auto z(center(pgroup));
    auto derived(derived_subgroup(pgroup));
    bool frattini(pgroup.order() == p2 * phi.order());
    c.frattini_and_center = frattini && pgroup.order() == p2 * z.order();
    c.frattini_and_derived = frattini && derived.order() == p;
    if (!is_abelian(pgroup)) {
      auto maximal(maximal_subgroups(pgroup));
      c.proper_subgroups_abelian = std::all_of(maximal.begin(), maximal.end(), is_abelian);
    }
    return c;
  }

  bool is_minimal_nonabelian(const SubgroupHandle &pgroup) {
    auto c(mna_characterizations(pgroup));
    if (c.proper_subgroups_abelian != c.frattini_and_center || c.proper_subgroups_abelian != c.frattini_and_derived) {
      throw InternalInconsistency("characterizations of minimal non-abelian groups disagree");
    }
    return c.proper_subgroups_abelian;
  }

  bool is_minimal_nonabelian(const Group &pgroup) { return is_minimal_nonabelian(whole(pgroup)); }

  bool is_metacyclic(const SubgroupHandle &h) {
    const Group &g(h.parent());
    std::vector<char> seen(g.order(), 0);
    auto elements(h.elements());
    std::stable_sort(elements.begin(), elements.end(),
                     [&](ElemId a, ElemId b) { return g.element_order(a) > g.element_order(b); });
    for (ElemId x : elements) {
      if (seen[x]) continue;
      std::uint64_t o(g.element_order(x));
      for (std::uint64_t k(1); k <= o; ++k) {
        if (std::gcd(k, o) == 1) seen[g.pow(x, static_cast<std::int64_t>(k))] = 1;
      }
      auto n(generate(g, std::vector<ElemId>{x}));
      std::uint64_t index(h.order() / n.order());
      if (index == 1) return true;
      if (!n.is_normal_in(h)) continue;
      auto top(prime_divisors(index));
      for (ElemId y : h.elements()) {
        // y N has order index iff no y^(index/q) lies in N
        bool generates(std::all_of(top.begin(), top.end(), [&](std::uint64_t q) {
          return !n.contains(g.pow(y, static_cast<std::int64_t>(index / q)));
        }));
        if (generates) return true;
      }
    }
    return false;
  }

  std::string MnaClassification::to_string() const {
    return descriptor ? descriptor->to_string() : "NotMinimalNonabelian";
  }

  MnaClassification classify_mna(const SubgroupHandle &pgroup) {
    if (!is_minimal_nonabelian(pgroup)) throw PreconditionViolation("not minimal non-abelian");
    const Group &g(pgroup.parent());
    std::uint64_t p(prime_of(pgroup));
    auto inv(abelian_invariants(pgroup, derived_subgroup(pgroup)));
    if (inv.size() != 2) throw InternalInconsistency("abelianization of rank other than 2");
    std::uint64_t u(log_order(inv[0], p)), v(log_order(inv[1], p));
    std::uint64_t e(log_order(exponent(pgroup), p));
    MnaDescriptor d{MnaKind::Delta, p, u, v};
    if (pgroup.order() == 8) {
      std::size_t involutions(0);
      for (ElemId x : pgroup.elements()) involutions += g.element_order(x) == 2;
      d = involutions == 1 ? MnaDescriptor{MnaKind::Q8, 2, 0, 0} : MnaDescriptor{MnaKind::Delta, 2, 1, 1};
    } else if (is_metacyclic(pgroup)) {
      // Gamma(a,b) has abelianization C_{p^(a-1)} x C_{p^b} and exponent p^max(a,b)
      if (u > v && e == u) {
        d = {MnaKind::Gamma, p, v + 1, u};
      } else {
        d = {MnaKind::Gamma, p, u + 1, v};
      }
    }
    if (d.predicted_order() != pgroup.order()) throw InternalInconsistency("classification contradicts the order");
    return {d};
  }

  MnaClassification classify_mna(const Group &pgroup) { return classify_mna(whole(pgroup)); }

  std::size_t rank(const SubgroupHandle &pgroup) {
    std::uint64_t p(prime_of(pgroup));
    return log_order(pgroup.order() / frattini_of_pgroup(pgroup).order(), p);
  }

  std::size_t rank(const Group &pgroup) { return rank(whole(pgroup)); }
  bool two_generated(const SubgroupHandle &pgroup) { return rank(pgroup) <= 2; }
  bool two_generated(const Group &pgroup) { return two_generated(whole(pgroup)); }

  bool fusion_controlled_by(const Group &group, const SubgroupHandle &sylow, const SubgroupHandle &h) {
    std::vector<std::uint32_t> orbit(group.order(), ~std::uint32_t(0));
    const auto &hgens(h.generator_ids());
    std::map<std::uint32_t, std::uint64_t> in_sylow;  // G-class -> |class meet P|
    for (ElemId x : sylow.elements()) ++in_sylow[group.class_of(x)];
    for (ElemId x : sylow.elements()) {
      if (orbit[x] != ~std::uint32_t(0)) continue;
      std::vector<ElemId> queue{x};
      orbit[x] = x;
      for (std::size_t head(0); head < queue.size(); ++head) {
        for (ElemId s : hgens) {
          ElemId y(group.conj(s, queue[head]));
          if (!sylow.contains(y)) return false;
          if (orbit[y] == ~std::uint32_t(0)) {
            orbit[y] = x;
            queue.push_back(y);
          }
        }
      }
      if (queue.size() != in_sylow[group.class_of(x)]) return false;
    }
    return true;
  }

  bool lemabel_admissible(const SubgroupHandle &g, const SubgroupHandle &a, ElemId x) {
    if (!a.is_subgroup_of(g) || !g.contains(x) || !a.is_normal_in(g) || !is_abelian(a)) return false;
    return join(generate(g.parent(), std::vector<ElemId>{x}), a).order() == g.order();
  }

  bool verify_lemabel(const SubgroupHandle &g, const SubgroupHandle &a, ElemId x) {
    if (!lemabel_admissible(g, a, x)) throw PreconditionViolation("need A abelian normal with G = <x>A");
    const Group &parent(g.parent());
    auto derived(derived_subgroup(g));
    auto kernel(centralizer(a, x));
    std::vector<char> image(parent.order(), 0);
    std::uint64_t distinct(0);
    for (ElemId y : a.elements()) {
      ElemId c(parent.comm(x, y));
      if (!derived.contains(c)) return false;
      if (!image[c]) {
        image[c] = 1;
        ++distinct;
      }
      // homomorphism: [x,ab] = [x,a][x,b] on generators of A
      for (ElemId s : a.generator_ids()) {
        if (parent.comm(x, parent.mul(y, s)) != parent.mul(c, parent.comm(x, s))) return false;
      }
      bool in_kernel(c == identity_id);
      if (in_kernel != kernel.contains(y)) return false;
    }
    return distinct == derived.order() && derived.order() * kernel.order() == a.order();
  }

  bool lemPhi_admissible(const SubgroupHandle &p, const SubgroupHandle &q, ElemId x) {
    std::uint64_t prime(0);
    if (!is_p_group(p.order(), &prime) || p.order() == 1) return false;
    if (!q.is_subgroup_of(p) || q.order() == p.order() || !p.contains(x) || !q.is_normal_in(p)) return false;
    auto cyc(generate(p.parent(), std::vector<ElemId>{x}));
    if (join(cyc, q).order() != p.order()) return false;
    auto meet(intersection(cyc, q));
    return meet.is_subgroup_of(derived_subgroup(p));
  }

  bool verify_lemPhi(const SubgroupHandle &p, const SubgroupHandle &q, ElemId x) {
    if (!lemPhi_admissible(p, q, x)) throw PreconditionViolation("need Q normal proper with P = <x>Q and <x> meet Q in P'");
    const Group &g(p.parent());
    std::uint64_t prime(prime_of(p));
    bool left(p.order() == prime * prime * frattini_of_pgroup(p).order());
    auto phi_q(frattini_of_pgroup(q));
    std::uint64_t fixed(0);
    for (ElemId y : q.elements()) {
      if (phi_q.contains(g.comm(x, y))) ++fixed;
    }
    bool right(fixed / phi_q.order() == prime);
    return left == right;
  }

  SylowFacts sylow_facts(const Group &group, std::uint64_t p) {
    SylowFacts f;
    f.p = p;
    auto s(sylow(group, p));
    f.order = s.order();
    f.cyclic = exponent(s) == s.order();
    f.maximal_class = is_maximal_class(s);
    f.minimal_nonabelian = s.order() > 1 && is_minimal_nonabelian(s);
    f.rank = s.order() > 1 ? rank(s) : 0;
    f.two_generated = f.rank <= 2;
    f.frattini_core_order = core_of(group, frattini_of_pgroup(s)).order();
    f.p_constrained = is_p_constrained(group, p);
    f.o_p_prime_order = o_p_prime(group, p).order();
    return f;
  }

}
