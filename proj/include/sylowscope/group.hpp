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

#ifndef SYLOWSCOPE_GROUP_HPP
#define SYLOWSCOPE_GROUP_HPP

#include <sylowscope/perm.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sylowscope {

  using ElemId = std::uint32_t;
  constexpr ElemId identity_id = 0;

  std::uint64_t default_cap();
  void set_default_cap(std::uint64_t cap);

  struct ConjugacyClass {
    ElemId representative;
    std::uint64_t size;
    std::uint64_t element_order;
    std::vector<ElemId> members;  // ascending
  };

  namespace detail { struct GroupData; }

  // generators plus a lazily enumerated element list, shared between copies
  class Group {
  public:
    Group();
    Group(std::vector<Perm> generators, std::size_t degree,
          std::string name = {}, std::uint64_t cap = default_cap());

    std::size_t degree() const;
    const std::vector<Perm> &generators() const;
    const std::string &name() const;
    Group renamed(std::string name) const;
    std::uint64_t cap() const;

    std::uint64_t order() const;
    std::span<const Point> images(ElemId id) const;
    Perm element(ElemId id) const;
    std::vector<Perm> elements() const;
    std::optional<ElemId> find(std::span<const Point> images) const;
    std::optional<ElemId> find(const Perm &p) const;
    ElemId index_of(const Perm &p) const;
    bool contains(const Perm &p) const;

    ElemId mul(ElemId a, ElemId b) const;
    ElemId inv(ElemId a) const;
    ElemId pow(ElemId a, std::int64_t e) const;
    // g x g^-1
    ElemId conj(ElemId g, ElemId x) const;
    // x y x^-1 y^-1
    ElemId comm(ElemId x, ElemId y) const;
    // x * generators()[s]
    ElemId right_gen(ElemId x, std::size_t s) const;
    std::vector<ElemId> generator_ids() const;

    std::uint64_t element_order(ElemId id) const;
    std::uint64_t exponent() const;
    const std::vector<ConjugacyClass> &classes() const;
    std::uint32_t class_of(ElemId id) const;
    bool is_abelian() const;

    bool same_object(const Group &other) const { return data_ == other.data_; }

  private:
    std::shared_ptr<detail::GroupData> data_;
  };

  // subgroup of an enumerated parent, stored as a membership set
  class SubgroupHandle {
  public:
    SubgroupHandle() = default;

    const Group &parent() const { return parent_; }
    std::uint64_t order() const { return elements_.size(); }
    bool contains(ElemId id) const { return (bits_[id >> 6] >> (id & 63)) & 1; }
    const std::vector<ElemId> &elements() const { return elements_; }
    const std::vector<ElemId> &generator_ids() const { return generators_; }
    std::vector<Perm> generators() const;
    const std::vector<std::uint64_t> &bits() const { return bits_; }

    bool is_normal() const;
    // normalized by every generator of ambient
    bool is_normal_in(const SubgroupHandle &ambient) const;
    bool is_trivial() const { return order() == 1; }
    bool is_whole() const { return order() == parent_.order(); }
    bool is_subgroup_of(const SubgroupHandle &other) const;
    Group as_group(std::string name = {}) const;

    bool operator==(const SubgroupHandle &other) const;

    // trusted constructors; the set must already be a subgroup
    static SubgroupHandle from_bits(const Group &parent, std::vector<std::uint64_t> bits);
    static SubgroupHandle from_bits(const Group &parent, std::vector<std::uint64_t> bits,
                                    std::vector<ElemId> generators);

  private:
    Group parent_;
    std::vector<std::uint64_t> bits_;
    std::vector<ElemId> elements_;
    std::vector<ElemId> generators_;
  };

  std::vector<Perm> enumerate(const Group &group);

  SubgroupHandle whole(const Group &group);
  SubgroupHandle trivial_subgroup(const Group &group);
  SubgroupHandle generate(const Group &group, std::vector<ElemId> generators);
  SubgroupHandle generate(const Group &group, const std::vector<Perm> &generators);
  // smallest subgroup containing both
  SubgroupHandle join(const SubgroupHandle &h, const SubgroupHandle &k);
  SubgroupHandle intersection(const SubgroupHandle &h, const SubgroupHandle &k);
  // normal closure of s inside ambient (s must lie in ambient)
  SubgroupHandle normal_closure(const SubgroupHandle &ambient, std::vector<ElemId> s);
  SubgroupHandle normal_closure(const SubgroupHandle &ambient, const SubgroupHandle &s);
  // [H,K] for subgroups normalized by ambient
  SubgroupHandle commutator_subgroup(const SubgroupHandle &ambient,
                                     const SubgroupHandle &h, const SubgroupHandle &k);

  SubgroupHandle centralizer(const Group &group, const Perm &x);
  SubgroupHandle centralizer(const SubgroupHandle &ambient, ElemId x);
  // elements of ambient centralizing all of h
  SubgroupHandle centralizer(const SubgroupHandle &ambient, const SubgroupHandle &h);
  SubgroupHandle center(const Group &group);
  SubgroupHandle center(const SubgroupHandle &h);
  SubgroupHandle normalizer(const SubgroupHandle &ambient, const SubgroupHandle &h);

  SubgroupHandle derived_subgroup(const Group &group);
  SubgroupHandle derived_subgroup(const SubgroupHandle &h);
  std::vector<SubgroupHandle> derived_series(const SubgroupHandle &h);

  // p-group operations; NotAPGroup unless |P| is a prime power (p inferred)
  SubgroupHandle frattini_of_pgroup(const SubgroupHandle &pgroup);
  SubgroupHandle frattini_of_pgroup(const Group &pgroup);
  SubgroupHandle agemo(const SubgroupHandle &pgroup);
  SubgroupHandle agemo(const Group &pgroup);
  SubgroupHandle omega(const SubgroupHandle &pgroup);
  SubgroupHandle omega(const Group &pgroup);
  // P = K_1 > K_2 = P' > ... > 1
  std::vector<SubgroupHandle> lower_central_series(const SubgroupHandle &pgroup);
  std::vector<SubgroupHandle> lower_central_series(const Group &pgroup);
  // 1 = Z_0 < Z_1 < ... < P
  std::vector<SubgroupHandle> upper_central_series(const SubgroupHandle &pgroup);
  std::vector<SubgroupHandle> upper_central_series(const Group &pgroup);
  std::size_t nilpotency_class(const SubgroupHandle &pgroup);
  std::size_t nilpotency_class(const Group &pgroup);
  std::uint64_t exponent(const SubgroupHandle &h);
  // invariants p^e1 >= p^e2 >= ... of the abelian group h/n (n normal in h)
  std::vector<std::uint64_t> abelian_invariants(const SubgroupHandle &h,
                                                const SubgroupHandle &n);

  SubgroupHandle core_of(const Group &group, const SubgroupHandle &h);
  SubgroupHandle core_of(const SubgroupHandle &ambient, const SubgroupHandle &h);

  SubgroupHandle sylow(const Group &group, std::uint64_t p);
  SubgroupHandle sylow(const SubgroupHandle &ambient, std::uint64_t p);
  SubgroupHandle o_p(const Group &group, std::uint64_t p);
  SubgroupHandle o_p_prime(const Group &group, std::uint64_t p);
  SubgroupHandle o_upper_p_prime(const Group &group, std::uint64_t p);
  SubgroupHandle fitting(const Group &group);
  bool is_p_constrained(const Group &group, std::uint64_t p);

  // regular action on the cosets gN
  Group quotient(const Group &group, const SubgroupHandle &n);

  // all normal subgroups, ordered by size; throws CapExceeded past limit
  std::vector<SubgroupHandle> normal_subgroups(const Group &group,
                                               std::size_t limit = 4096);

  bool is_p_group(std::uint64_t order, std::uint64_t *p = nullptr);

}

#endif
