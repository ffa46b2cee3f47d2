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

#include <algorithm>
#include <atomic>
#include <cstring>
#include <mutex>
#include <numeric>

namespace sylowscope {

  namespace {
    std::atomic<std::uint64_t> global_cap{200000};

    std::uint64_t hash_points(const Point *p, std::size_t n) {
      std::uint64_t h(0x9E3779B97F4A7C15ull ^ n);
      std::size_t i(0);
      for (; i + 4 <= n; i += 4) {
        std::uint64_t w;
        std::memcpy(&w, p + i, 8);
        h = (h ^ w) * 0xff51afd7ed558ccdull;
        h ^= h >> 32;
      }
      for (; i < n; ++i) {
        h = (h ^ p[i]) * 0xc4ceb9fe1a85ec53ull;
        h ^= h >> 29;
      }
      return h;
    }
  }

  std::uint64_t default_cap() { return global_cap.load(); }
  void set_default_cap(std::uint64_t cap) { global_cap.store(cap); }

  namespace detail {
    struct GroupData {
      std::size_t degree{1};
      std::vector<Perm> generators;
      std::string name;
      std::uint64_t cap{200000};

      std::once_flag enum_once;
      std::vector<Point> points;
      std::vector<std::uint32_t> slots;  // id+1, 0 = empty
      std::uint64_t mask{0};
      std::vector<ElemId> rmul;          // order x generators
      std::uint64_t order{0};

      std::once_flag inv_once;
      std::vector<ElemId> inverses;
      std::once_flag ord_once;
      std::vector<std::uint32_t> orders;
      std::once_flag cls_once;
      std::vector<ConjugacyClass> classes;
      std::vector<std::uint32_t> class_of;

      const Point *at(ElemId id) const { return points.data() + std::size_t(id) * degree; }

      std::optional<ElemId> lookup(const Point *p) const {
        std::uint64_t h(hash_points(p, degree) & mask);
        while (slots[h]) {
          ElemId id(slots[h] - 1);
          if (std::memcmp(at(id), p, degree * sizeof(Point)) == 0) return id;
          h = (h + 1) & mask;
        }
        return std::nullopt;
      }

      void insert_slot(ElemId id) {
        std::uint64_t h(hash_points(at(id), degree) & mask);
        while (slots[h]) h = (h + 1) & mask;
        slots[h] = id + 1;
      }

      void rehash(std::uint64_t size) {
        slots.assign(size, 0);
        mask = size - 1;
        for (ElemId id(0); id < order; ++id) insert_slot(id);
      }

      void enumerate() {
        std::size_t ngens(generators.size());
        points.resize(degree);
        std::iota(points.begin(), points.end(), Point(0));
        order = 1;
        rehash(64);
        std::vector<Point> scratch(degree);
        for (std::uint64_t x(0); x < order; ++x) {
          for (std::size_t s(0); s < ngens; ++s) {
            const auto &g(generators[s].images());
            const Point *xp(at(static_cast<ElemId>(x)));
            for (std::size_t i(0); i < degree; ++i) scratch[i] = xp[g[i]];
            auto found(lookup(scratch.data()));
            ElemId id;
            if (found) {
              id = *found;
            } else {
              if (order + 1 > cap) {
                throw CapExceeded("closure exceeds cap of " + std::to_string(cap) +
                                  " elements");
              }
              id = static_cast<ElemId>(order);
              points.insert(points.end(), scratch.begin(), scratch.end());
              ++order;
              if (2 * order > slots.size()) rehash(2 * slots.size());
              else insert_slot(id);
            }
            rmul.push_back(id);
          }
        }
        points.shrink_to_fit();
      }

      void ensure_enumerated() { std::call_once(enum_once, [this] { enumerate(); }); }
    };
  }

  Group::Group() : Group({}, 1) {}

  Group::Group(std::vector<Perm> generators, std::size_t degree, std::string name,
               std::uint64_t cap)
    : data_(std::make_shared<detail::GroupData>()) {
    if (degree == 0 || degree > max_degree) {
      throw BadParameters("degree must lie in 1.." + std::to_string(max_degree));
    }
    std::vector<Perm> kept;
    for (auto &g : generators) {
      if (g.degree() != degree) throw BadParameters("generator degree mismatch");
      if (!g.is_identity()) kept.push_back(std::move(g));
    }
    data_->degree = degree;
    data_->generators = std::move(kept);
    data_->name = std::move(name);
    data_->cap = cap;
  }

  std::size_t Group::degree() const { return data_->degree; }
  const std::vector<Perm> &Group::generators() const { return data_->generators; }
  const std::string &Group::name() const { return data_->name; }
  std::uint64_t Group::cap() const { return data_->cap; }

  Group Group::renamed(std::string name) const {
    return Group(data_->generators, data_->degree, std::move(name), data_->cap);
  }

  std::uint64_t Group::order() const {
    data_->ensure_enumerated();
    return data_->order;
  }

  std::span<const Point> Group::images(ElemId id) const {
    data_->ensure_enumerated();
    return {data_->at(id), data_->degree};
  }

  Perm Group::element(ElemId id) const { return Perm::from_images(images(id)); }

  std::vector<Perm> Group::elements() const {
    std::vector<Perm> result;
    result.reserve(order());
    for (ElemId id(0); id < order(); ++id) result.push_back(element(id));
    return result;
  }

  std::vector<Perm> enumerate(const Group &group) { return group.elements(); }

  std::optional<ElemId> Group::find(std::span<const Point> images) const {
    data_->ensure_enumerated();
    if (images.size() != data_->degree) return std::nullopt;
    return data_->lookup(images.data());
  }

  std::optional<ElemId> Group::find(const Perm &p) const { return find(std::span(p.images())); }

  ElemId Group::index_of(const Perm &p) const {
    auto id(find(p));
    if (!id) throw ElementNotInGroup("permutation is not an element of the group");
    return *id;
  }

  bool Group::contains(const Perm &p) const { return find(p).has_value(); }

  ElemId Group::mul(ElemId a, ElemId b) const {
    data_->ensure_enumerated();
    thread_local std::vector<Point> scratch;
    std::size_t n(data_->degree);
    scratch.resize(n);
    const Point *ap(data_->at(a)), *bp(data_->at(b));
    for (std::size_t i(0); i < n; ++i) scratch[i] = ap[bp[i]];
    return *data_->lookup(scratch.data());
  }

  ElemId Group::inv(ElemId a) const {
    data_->ensure_enumerated();
    std::call_once(data_->inv_once, [d = data_.get()] {
      std::vector<ElemId> inverses(d->order);
      std::vector<Point> scratch(d->degree);
      for (ElemId id(0); id < d->order; ++id) {
        const Point *p(d->at(id));
        for (std::size_t i(0); i < d->degree; ++i) scratch[p[i]] = static_cast<Point>(i);
        inverses[id] = *d->lookup(scratch.data());
      }
      d->inverses = std::move(inverses);
    });
    return data_->inverses[a];
  }

  ElemId Group::pow(ElemId a, std::int64_t e) const {
    std::uint64_t ord(element_order(a));
    std::int64_t m(static_cast<std::int64_t>(ord));
    std::uint64_t k(static_cast<std::uint64_t>(((e % m) + m) % m));
    ElemId result(identity_id), base(a);
    while (k) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  ElemId Group::conj(ElemId g, ElemId x) const { return mul(mul(g, x), inv(g)); }

  ElemId Group::comm(ElemId x, ElemId y) const {
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }

  ElemId Group::right_gen(ElemId x, std::size_t s) const {
    data_->ensure_enumerated();
    return data_->rmul[std::size_t(x) * data_->generators.size() + s];
  }

  std::vector<ElemId> Group::generator_ids() const {
    std::vector<ElemId> ids;
    for (std::size_t s(0); s < data_->generators.size(); ++s) ids.push_back(right_gen(identity_id, s));
    return ids;
  }

  std::uint64_t Group::element_order(ElemId id) const {
    data_->ensure_enumerated();
    std::call_once(data_->ord_once, [d = data_.get()] {
      std::vector<std::uint32_t> orders(d->order);
      for (ElemId i(0); i < d->order; ++i) {
        orders[i] = static_cast<std::uint32_t>(perm_order({d->at(i), d->degree}));
      }
      d->orders = std::move(orders);
    });
    return data_->orders[id];
  }

  std::uint64_t Group::exponent() const {
    std::uint64_t e(1);
    for (const auto &c : classes()) e = std::lcm(e, c.element_order);
    return e;
  }

  const std::vector<ConjugacyClass> &Group::classes() const {
    data_->ensure_enumerated();
    std::call_once(data_->cls_once, [this] {
      auto *d(data_.get());
      std::size_t n(d->degree);
      std::vector<Perm> ginv;
      for (const auto &g : d->generators) ginv.push_back(g.inverse());
      std::vector<std::uint32_t> class_of(d->order, UINT32_MAX);
      std::vector<ConjugacyClass> classes;
      std::vector<Point> scratch(n);
      std::vector<ElemId> queue;
      for (ElemId id(0); id < d->order; ++id) {
        if (class_of[id] != UINT32_MAX) continue;
        auto index(static_cast<std::uint32_t>(classes.size()));
        queue.assign(1, id);
        class_of[id] = index;
        for (std::size_t head(0); head < queue.size(); ++head) {
          const Point *y(d->at(queue[head]));
          for (std::size_t s(0); s < d->generators.size(); ++s) {
            const auto &g(d->generators[s].images());
            const auto &gi(ginv[s].images());
            for (std::size_t i(0); i < n; ++i) scratch[i] = g[y[gi[i]]];
            ElemId z(*d->lookup(scratch.data()));
            if (class_of[z] == UINT32_MAX) {
              class_of[z] = index;
              queue.push_back(z);
            }
          }
        }
        std::sort(queue.begin(), queue.end());
        classes.push_back({id, queue.size(), element_order(id), queue});
      }
      d->class_of = std::move(class_of);
      d->classes = std::move(classes);
    });
    return data_->classes;
  }

  std::uint32_t Group::class_of(ElemId id) const {
    classes();
    return data_->class_of[id];
  }

  bool Group::is_abelian() const {
    const auto &g(generators());
    for (std::size_t i(0); i < g.size(); ++i) {
      for (std::size_t j(i + 1); j < g.size(); ++j) {
        if (g[i] * g[j] != g[j] * g[i]) return false;
      }
    }
    return true;
  }

}
