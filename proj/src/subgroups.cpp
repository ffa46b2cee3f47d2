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

#include <sylowscope/group.hpp>
#include <sylowscope/errors.hpp>
#include <sylowscope/numtheory.hpp>

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace sylowscope {

  namespace {
    std::size_t word_count(std::uint64_t order) { return (order + 63) / 64; }

    bool test(const std::vector<std::uint64_t> &bits, ElemId id) {
      return (bits[id >> 6] >> (id & 63)) & 1;
    }

    // incremental closure under right multiplication by generators
    class Closure {
    public:
      explicit Closure(const Group &group)
        : group_(group), bits_(word_count(group.order()), 0) {
        add(identity_id);
      }

      explicit Closure(const SubgroupHandle &start)
        : group_(start.parent()), bits_(start.bits()), elements_(start.elements()),
          generators_(start.generator_ids()) {}

      bool contains(ElemId id) const { return test(bits_, id); }
      std::uint64_t order() const { return elements_.size(); }

      // returns false when a bound is hit and the closure is abandoned
      bool extend(ElemId g, std::uint64_t bound = UINT64_MAX) {
        if (contains(g)) return true;
        std::size_t old_size(elements_.size());
        generators_.push_back(g);
        for (std::size_t i(0); i < old_size; ++i) {
          if (!push(group_.mul(elements_[i], g), bound)) return false;
        }
        for (std::size_t i(old_size); i < elements_.size(); ++i) {
          ElemId x(elements_[i]);
          for (ElemId s : generators_) {
            if (!push(group_.mul(x, s), bound)) return false;
          }
        }
        return true;
      }

      SubgroupHandle finish() {
        return SubgroupHandle::from_bits(group_, std::move(bits_), std::move(generators_));
      }

    private:
      void add(ElemId id) {
        bits_[id >> 6] |= std::uint64_t(1) << (id & 63);
        elements_.push_back(id);
      }

      bool push(ElemId id, std::uint64_t bound) {
        if (contains(id)) return true;
        add(id);
        return elements_.size() <= bound;
      }

      Group group_;
      std::vector<std::uint64_t> bits_;
      std::vector<ElemId> elements_;
      std::vector<ElemId> generators_;
    };

    void require_same_parent(const SubgroupHandle &a, const SubgroupHandle &b) {
      if (!a.parent().same_object(b.parent())) {
        throw NotASubgroup("subgroups belong to different groups");
      }
    }

    void require_sub(const SubgroupHandle &ambient, const SubgroupHandle &h) {
      require_same_parent(ambient, h);
      if (!h.is_subgroup_of(ambient)) throw NotASubgroup("not contained in the ambient group");
    }

    template <typename Pred>
    SubgroupHandle filter(const SubgroupHandle &ambient, Pred pred) {
      std::vector<std::uint64_t> bits(word_count(ambient.parent().order()), 0);
      for (ElemId id : ambient.elements()) {
        if (pred(id)) bits[id >> 6] |= std::uint64_t(1) << (id & 63);
      }
      return SubgroupHandle::from_bits(ambient.parent(), std::move(bits));
    }

    // nullopt once the closure order exceeds bound or is divisible by forbidden
    std::optional<SubgroupHandle> bounded_normal_closure(
      const SubgroupHandle &ambient, const std::vector<ElemId> &s,
      std::uint64_t bound, std::uint64_t forbidden
    ) {
      const Group &g(ambient.parent());
      Closure closure(g);
      auto ok = [&](bool fine) {
        return fine && !(forbidden > 1 && closure.order() % forbidden == 0);
      };
      std::vector<ElemId> pending(s.begin(), s.end());
      const auto &agens(ambient.generator_ids());
      while (!pending.empty()) {
        ElemId x(pending.back());
        pending.pop_back();
        if (closure.contains(x)) continue;
        if (!ok(closure.extend(x, bound))) return std::nullopt;
        for (ElemId a : agens) pending.push_back(g.conj(a, x));
      }
      return closure.finish();
    }

    std::uint64_t prime_of_pgroup(std::uint64_t order) {
      std::uint64_t p(0);
      if (order == 1) return 0;
      if (!is_p_group(order, &p)) throw NotAPGroup("order " + std::to_string(order) + " is not a prime power");
      return p;
    }
  }

  bool is_p_group(std::uint64_t order, std::uint64_t *p) {
    if (order == 1) {
      if (p) *p = 0;
      return true;
    }
    auto pk(prime_power(order));
    if (!pk) return false;
    if (p) *p = pk->first;
    return true;
  }

  // SubgroupHandle

  SubgroupHandle SubgroupHandle::from_bits(const Group &parent, std::vector<std::uint64_t> bits,
                                           std::vector<ElemId> generators) {
    SubgroupHandle h;
    h.parent_ = parent;
    h.bits_ = std::move(bits);
    for (std::size_t w(0); w < h.bits_.size(); ++w) {
      for (std::uint64_t word(h.bits_[w]); word; word &= word - 1) {
        h.elements_.push_back(static_cast<ElemId>(w * 64 + __builtin_ctzll(word)));
      }
    }
    h.generators_ = std::move(generators);
    return h;
  }

  SubgroupHandle SubgroupHandle::from_bits(const Group &parent, std::vector<std::uint64_t> bits) {
    SubgroupHandle h(from_bits(parent, std::move(bits), {}));
    Closure closure(parent);
    std::vector<ElemId> gens;
    for (ElemId id : h.elements_) {
      if (closure.contains(id)) continue;
      closure.extend(id);
      gens.push_back(id);
    }
    if (closure.order() != h.order()) throw InternalInconsistency("element set is not a subgroup");
    h.generators_ = std::move(gens);
    return h;
  }

  std::vector<Perm> SubgroupHandle::generators() const {
    std::vector<Perm> result;
    for (ElemId id : generators_) result.push_back(parent_.element(id));
    return result;
  }

  bool SubgroupHandle::is_normal() const {
    for (ElemId a : parent_.generator_ids()) {
      for (ElemId h : generators_) {
        if (!contains(parent_.conj(a, h))) return false;
      }
    }
    return true;
  }

  bool SubgroupHandle::is_normal_in(const SubgroupHandle &ambient) const {
    for (ElemId a : ambient.generator_ids()) {
      for (ElemId h : generators_) {
        if (!contains(parent_.conj(a, h))) return false;
      }
    }
    return true;
  }

  bool SubgroupHandle::is_subgroup_of(const SubgroupHandle &other) const {
    if (!parent_.same_object(other.parent_)) return false;
    if (order() > other.order() || other.order() % order() != 0) return false;
    for (ElemId h : generators_) if (!other.contains(h)) return false;
    return true;
  }

  bool SubgroupHandle::operator==(const SubgroupHandle &other) const {
    if (!parent_.same_object(other.parent_) || order() != other.order()) return false;
    if (order() > 10000) return bits_ == other.bits_;
    return is_subgroup_of(other) && other.is_subgroup_of(*this);
  }

  Group SubgroupHandle::as_group(std::string name) const {
    return Group(generators(), parent_.degree(), std::move(name), parent_.cap());
  }

  // constructions

  SubgroupHandle whole(const Group &group) {
    std::vector<std::uint64_t> bits(word_count(group.order()), 0);
    for (ElemId id(0); id < group.order(); ++id) bits[id >> 6] |= std::uint64_t(1) << (id & 63);
    return SubgroupHandle::from_bits(group, std::move(bits), group.generator_ids());
  }

  SubgroupHandle trivial_subgroup(const Group &group) { return Closure(group).finish(); }

  SubgroupHandle generate(const Group &group, std::vector<ElemId> generators) {
    Closure closure(group);
    for (ElemId g : generators) closure.extend(g);
    return closure.finish();
  }

  SubgroupHandle generate(const Group &group, const std::vector<Perm> &generators) {
    std::vector<ElemId> ids;
    for (const auto &g : generators) ids.push_back(group.index_of(g));
    return generate(group, std::move(ids));
  }

  SubgroupHandle join(const SubgroupHandle &h, const SubgroupHandle &k) {
    require_same_parent(h, k);
    Closure closure(h);
    for (ElemId g : k.generator_ids()) closure.extend(g);
    return closure.finish();
  }

  SubgroupHandle intersection(const SubgroupHandle &h, const SubgroupHandle &k) {
    require_same_parent(h, k);
    std::vector<std::uint64_t> bits(h.bits());
    for (std::size_t w(0); w < bits.size(); ++w) bits[w] &= k.bits()[w];
    if (bits == h.bits()) return h;
    if (bits == k.bits()) return k;
    return SubgroupHandle::from_bits(h.parent(), std::move(bits));
  }

  SubgroupHandle normal_closure(const SubgroupHandle &ambient, std::vector<ElemId> s) {
    return *bounded_normal_closure(ambient, s, UINT64_MAX, 0);
  }

  SubgroupHandle normal_closure(const SubgroupHandle &ambient, const SubgroupHandle &s) {
    require_sub(ambient, s);
    return normal_closure(ambient, s.generator_ids());
  }

  SubgroupHandle commutator_subgroup(const SubgroupHandle &ambient,
                                     const SubgroupHandle &h, const SubgroupHandle &k) {
    require_sub(ambient, h);
    require_sub(ambient, k);
    const Group &g(ambient.parent());
    std::vector<ElemId> s;
    for (ElemId x : h.generator_ids()) {
      for (ElemId y : k.generator_ids()) {
        ElemId c(g.comm(x, y));
        if (c != identity_id) s.push_back(c);
      }
    }
    return normal_closure(ambient, std::move(s));
  }

  SubgroupHandle centralizer(const SubgroupHandle &ambient, ElemId x) {
    const Group &g(ambient.parent());
    return filter(ambient, [&](ElemId y) { return g.mul(x, y) == g.mul(y, x); });
  }

  SubgroupHandle centralizer(const Group &group, const Perm &x) {
    return centralizer(whole(group), group.index_of(x));
  }

  SubgroupHandle centralizer(const SubgroupHandle &ambient, const SubgroupHandle &h) {
    require_same_parent(ambient, h);
    const Group &g(ambient.parent());
    const auto &gens(h.generator_ids());
    return filter(ambient, [&](ElemId y) {
      for (ElemId x : gens) if (g.mul(x, y) != g.mul(y, x)) return false;
      return true;
    });
  }

  SubgroupHandle center(const SubgroupHandle &h) { return centralizer(h, h); }
  SubgroupHandle center(const Group &group) { return center(whole(group)); }

  SubgroupHandle normalizer(const SubgroupHandle &ambient, const SubgroupHandle &h) {
    require_same_parent(ambient, h);
    const Group &g(ambient.parent());
    const auto &gens(h.generator_ids());
    return filter(ambient, [&](ElemId y) {
      for (ElemId x : gens) if (!h.contains(g.conj(y, x))) return false;
      return true;
    });
  }

  SubgroupHandle derived_subgroup(const SubgroupHandle &h) { return commutator_subgroup(h, h, h); }
  SubgroupHandle derived_subgroup(const Group &group) { return derived_subgroup(whole(group)); }

  std::vector<SubgroupHandle> derived_series(const SubgroupHandle &h) {
    std::vector<SubgroupHandle> series{h};
    while (true) {
      SubgroupHandle next(derived_subgroup(series.back()));
      if (next.order() == series.back().order()) break;
      series.push_back(std::move(next));
    }
    return series;
  }

  // p-groups

  SubgroupHandle agemo(const SubgroupHandle &pgroup) {
    std::uint64_t p(prime_of_pgroup(pgroup.order()));
    if (p == 0) return pgroup;
    const Group &g(pgroup.parent());
    Closure closure(g);
    for (ElemId x : pgroup.elements()) closure.extend(g.pow(x, static_cast<std::int64_t>(p)));
    return closure.finish();
  }

  SubgroupHandle omega(const SubgroupHandle &pgroup) {
    std::uint64_t p(prime_of_pgroup(pgroup.order()));
    if (p == 0) return pgroup;
    const Group &g(pgroup.parent());
    Closure closure(g);
    for (ElemId x : pgroup.elements()) if (g.element_order(x) == p) closure.extend(x);
    return closure.finish();
  }

  SubgroupHandle frattini_of_pgroup(const SubgroupHandle &pgroup) {
    SubgroupHandle mho(agemo(pgroup));
    if (pgroup.order() == 1) return pgroup;
    return join(mho, derived_subgroup(pgroup));
  }

  std::vector<SubgroupHandle> lower_central_series(const SubgroupHandle &pgroup) {
    prime_of_pgroup(pgroup.order());
    std::vector<SubgroupHandle> series{pgroup};
    while (!series.back().is_trivial()) {
      series.push_back(commutator_subgroup(pgroup, pgroup, series.back()));
    }
    return series;
  }

  std::vector<SubgroupHandle> upper_central_series(const SubgroupHandle &pgroup) {
    prime_of_pgroup(pgroup.order());
    const Group &g(pgroup.parent());
    const auto &gens(pgroup.generator_ids());
    std::vector<SubgroupHandle> series{trivial_subgroup(g)};
    while (series.back().order() < pgroup.order()) {
      const SubgroupHandle &z(series.back());
      series.push_back(filter(pgroup, [&](ElemId y) {
        for (ElemId x : gens) if (!z.contains(g.comm(y, x))) return false;
        return true;
      }));
    }
    return series;
  }

  std::size_t nilpotency_class(const SubgroupHandle &pgroup) {
    return lower_central_series(pgroup).size() - 1;
  }

  SubgroupHandle frattini_of_pgroup(const Group &pgroup) { return frattini_of_pgroup(whole(pgroup)); }
  SubgroupHandle agemo(const Group &pgroup) { return agemo(whole(pgroup)); }
  SubgroupHandle omega(const Group &pgroup) { return omega(whole(pgroup)); }
  std::vector<SubgroupHandle> lower_central_series(const Group &pgroup) {
    return lower_central_series(whole(pgroup));
  }
  std::vector<SubgroupHandle> upper_central_series(const Group &pgroup) {
    return upper_central_series(whole(pgroup));
  }
  std::size_t nilpotency_class(const Group &pgroup) { return nilpotency_class(whole(pgroup)); }

  std::uint64_t exponent(const SubgroupHandle &h) {
    std::uint64_t e(1);
    for (ElemId x : h.elements()) e = std::lcm(e, h.parent().element_order(x));
    return e;
  }

  std::vector<std::uint64_t> abelian_invariants(const SubgroupHandle &h, const SubgroupHandle &n) {
    require_sub(h, n);
    const Group &g(h.parent());
    std::uint64_t index(h.order() / n.order());
    std::vector<std::uint64_t> result;
    for (std::uint64_t q : prime_divisors(index)) {
      std::uint64_t qpart(p_part(index, q).p_part);
      std::vector<std::uint64_t> logs{0};
      const auto full(static_cast<std::uint64_t>(log_exact(qpart, q)));
      for (std::uint64_t qi(q); logs.back() < full; qi *= q) {
        std::uint64_t count(0);
        for (ElemId x : h.elements()) {
          if (n.contains(g.pow(x, static_cast<std::int64_t>(qi)))) ++count;
        }
        logs.push_back(log_exact(count / n.order(), q));
      }
      // number of cyclic factors of exponent >= i is logs[i] - logs[i-1]
      for (std::size_t i(logs.size() - 1); i >= 1; --i) {
        std::uint64_t at_least(logs[i] - logs[i - 1]);
        std::uint64_t above(i + 1 < logs.size() ? logs[i + 1] - logs[i] : 0);
        for (std::uint64_t c(above); c < at_least; ++c) result.push_back(ipow(q, i));
      }
    }
    std::sort(result.rbegin(), result.rend());
    return result;
  }

  // cores and Sylow machinery

  SubgroupHandle core_of(const SubgroupHandle &ambient, const SubgroupHandle &h) {
    require_sub(ambient, h);
    const Group &g(ambient.parent());
    SubgroupHandle core(h);
    bool changed(true);
    while (changed) {
      changed = false;
      for (ElemId a : ambient.generator_ids()) {
        ElemId ainv(g.inv(a));
        SubgroupHandle next(filter(core, [&](ElemId c) { return core.contains(g.conj(ainv, c)); }));
        if (next.order() != core.order()) {
          core = std::move(next);
          changed = true;
        }
      }
    }
    return core;
  }

  SubgroupHandle core_of(const Group &group, const SubgroupHandle &h) {
    if (!h.parent().same_object(group)) throw NotASubgroup("subgroup of a different group");
    return core_of(whole(group), h);
  }

  SubgroupHandle sylow(const SubgroupHandle &ambient, std::uint64_t p) {
    const Group &g(ambient.parent());
    std::uint64_t target(p_part(ambient.order(), p).p_part);
    if (target == 1) return trivial_subgroup(g);
    if (target == ambient.order()) return ambient;
    ElemId best(identity_id);
    std::uint64_t best_order(1);
    for (ElemId x : ambient.elements()) {
      std::uint64_t o(g.element_order(x));
      if (o > best_order && p_part(o, p).p_prime_part == 1) {
        best = x;
        best_order = o;
      }
    }
    SubgroupHandle h(generate(g, std::vector<ElemId>{best}));
    while (h.order() < target) {
      SubgroupHandle n(normalizer(ambient, h));
      std::optional<ElemId> step;
      for (ElemId y : n.elements()) {
        if (!h.contains(y) && h.contains(g.pow(y, static_cast<std::int64_t>(p)))) {
          step = y;
          break;
        }
      }
      if (!step) throw InternalInconsistency("no p-element extends the p-subgroup");
      Closure closure(h);
      closure.extend(*step);
      h = closure.finish();
    }
    return h;
  }

  SubgroupHandle sylow(const Group &group, std::uint64_t p) { return sylow(whole(group), p); }

  SubgroupHandle o_p(const Group &group, std::uint64_t p) {
    return core_of(group, sylow(group, p));
  }

  SubgroupHandle o_p_prime(const Group &group, std::uint64_t p) {
    SubgroupHandle all(whole(group));
    std::uint64_t bound(p_part(group.order(), p).p_prime_part);
    Closure result(group);
    for (const auto &c : group.classes()) {
      if (c.element_order % p == 0 || result.contains(c.representative)) continue;
      auto closure(bounded_normal_closure(all, {c.representative}, bound, p));
      if (!closure) continue;
      for (ElemId x : closure->generator_ids()) result.extend(x);
    }
    return result.finish();
  }

  SubgroupHandle o_upper_p_prime(const Group &group, std::uint64_t p) {
    std::vector<ElemId> reps;
    for (const auto &c : group.classes()) {
      if (c.element_order > 1 && p_part(c.element_order, p).p_prime_part == 1) {
        reps.push_back(c.representative);
      }
    }
    return normal_closure(whole(group), std::move(reps));
  }

  SubgroupHandle fitting(const Group &group) {
    Closure result(group);
    for (std::uint64_t q : prime_divisors(group.order())) {
      SubgroupHandle op(o_p(group, q));
      for (ElemId x : op.generator_ids()) result.extend(x);
    }
    return result.finish();
  }

  bool is_p_constrained(const Group &group, std::uint64_t p) {
    SubgroupHandle all(whole(group));
    SubgroupHandle k(o_p_prime(group, p));
    SubgroupHandle pk(join(sylow(group, p), k));
    SubgroupHandle m(core_of(all, pk));
    const auto &mgens(m.generator_ids());
    for (ElemId g : all.elements()) {
      if (m.contains(g)) continue;
      bool centralizes(true);
      for (ElemId x : mgens) {
        if (!k.contains(group.comm(g, x))) {
          centralizes = false;
          break;
        }
      }
      if (centralizes) return false;
    }
    return true;
  }

  Group quotient(const Group &group, const SubgroupHandle &n) {
    if (!n.parent().same_object(group)) throw NotASubgroup("subgroup of a different group");
    if (!n.is_normal()) throw NotNormal("quotient requires a normal subgroup");
    std::uint64_t index(group.order() / n.order());
    if (index > max_degree) {
      throw CapExceeded("quotient of index " + std::to_string(index) +
                        " exceeds the permutation degree limit");
    }
    std::vector<std::uint32_t> label(group.order(), UINT32_MAX);
    std::vector<ElemId> reps;
    for (ElemId g(0); g < group.order(); ++g) {
      if (label[g] != UINT32_MAX) continue;
      auto c(static_cast<std::uint32_t>(reps.size()));
      reps.push_back(g);
      for (ElemId x : n.elements()) label[group.mul(g, x)] = c;
    }
    std::vector<Perm> gens;
    for (ElemId s : group.generator_ids()) {
      std::vector<Point> images(index);
      for (std::size_t c(0); c < index; ++c) images[c] = static_cast<Point>(label[group.mul(s, reps[c])]);
      gens.emplace_back(std::move(images));
    }
    std::string name(group.name().empty() ? std::string() : group.name() + "/N");
    return Group(std::move(gens), index, std::move(name), group.cap());
  }

  std::vector<SubgroupHandle> normal_subgroups(const Group &group, std::size_t limit) {
    SubgroupHandle all(whole(group));
    std::vector<SubgroupHandle> atoms;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen_atoms;
    auto key = [](const SubgroupHandle &h) {
      std::uint64_t k(h.order());
      for (std::uint64_t w : h.bits()) k = (k ^ w) * 0x100000001b3ull;
      return k;
    };
    for (const auto &c : group.classes()) {
      if (c.representative == identity_id) continue;
      SubgroupHandle h(normal_closure(all, {c.representative}));
      auto &bucket(seen_atoms[key(h)]);
      bool dup(false);
      for (std::size_t i : bucket) dup = dup || atoms[i].bits() == h.bits();
      if (dup) continue;
      bucket.push_back(atoms.size());
      atoms.push_back(std::move(h));
    }
    std::vector<SubgroupHandle> result{trivial_subgroup(group)};
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
    seen[key(result[0])].push_back(0);
    for (std::size_t i(0); i < result.size(); ++i) {
      for (const auto &atom : atoms) {
        if (atom.is_subgroup_of(result[i])) continue;
        SubgroupHandle j(join(result[i], atom));
        auto &bucket(seen[key(j)]);
        bool dup(false);
        for (std::size_t t : bucket) dup = dup || result[t].bits() == j.bits();
        if (dup) continue;
        bucket.push_back(result.size());
        result.push_back(std::move(j));
        if (result.size() > limit) {
          throw CapExceeded("more than " + std::to_string(limit) + " normal subgroups");
        }
      }
    }
    std::stable_sort(result.begin(), result.end(),
                     [](const auto &a, const auto &b) { return a.order() < b.order(); });
    return result;
  }

}
