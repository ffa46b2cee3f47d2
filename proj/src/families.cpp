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
#include <sylowscope/numtheory.hpp>

#include <numeric>
#include <string>

namespace sylowscope {

  namespace {
    void require_prime(std::uint64_t p) {
      if (!is_prime(p)) throw BadParameters(std::to_string(p) + " is not prime");
    }

    void require_degree(std::uint64_t degree) {
      if (degree == 0 || degree > max_degree) {
        throw BadParameters("permutation degree " + std::to_string(degree) + " out of range");
      }
    }

    std::vector<Point> identity_images(std::size_t degree) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point(0));
      return images;
    }

    // product p^k with an overflow guard against the degree limit
    std::uint64_t small_power(std::uint64_t p, std::uint64_t k) {
      std::uint64_t r(1);
      for (std::uint64_t i(0); i < k; ++i) {
        r *= p;
        if (r > max_degree) throw BadParameters("group too large for a small permutation degree");
      }
      return r;
    }
  }

  std::uint64_t MnaDescriptor::predicted_order() const {
    switch (kind) {
    case MnaKind::Gamma: return ipow(p, a + b);
    case MnaKind::Delta: return ipow(p, a + b + 1);
    case MnaKind::Q8: return 8;
    }
    return 0;
  }

  std::string MnaDescriptor::to_string() const {
    switch (kind) {
    case MnaKind::Gamma:
      return "Gamma(p=" + std::to_string(p) + ",a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
    case MnaKind::Delta:
      return "Delta(p=" + std::to_string(p) + ",a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
    case MnaKind::Q8: return "Q8";
    }
    return {};
  }

  Group gamma(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    require_prime(p);
    if (a < 2 || b < 1) throw BadParameters("gamma needs a >= 2 and b >= 1");
    std::uint64_t m(small_power(p, a)), n(small_power(p, b));
    require_degree(m + n);
    std::uint64_t u(1 + m / p);
    auto x(identity_images(m + n)), y(identity_images(m + n));
    for (std::uint64_t i(0); i < m; ++i) {
      x[i] = static_cast<Point>((i + 1) % m);
      y[i] = static_cast<Point>((u * i) % m);
    }
    for (std::uint64_t j(0); j < n; ++j) y[m + j] = static_cast<Point>(m + (j + 1) % n);
    return Group({Perm(std::move(x)), Perm(std::move(y))}, m + n,
                 MnaDescriptor{MnaKind::Gamma, p, a, b}.to_string());
  }

  Group delta(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    require_prime(p);
    if (b < 1 || a < b) throw BadParameters("delta needs a >= b >= 1");
    // cosets of <x> labelled (j, m) for y^j z^m <x>, then cosets of <y,z>
    std::uint64_t pa(small_power(p, a)), pb(small_power(p, b));
    std::uint64_t left(pb * p);
    require_degree(left + pa);
    auto x(identity_images(left + pa)), y(identity_images(left + pa));
    for (std::uint64_t j(0); j < pb; ++j) {
      for (std::uint64_t m(0); m < p; ++m) {
        x[j * p + m] = static_cast<Point>(j * p + (m + j) % p);
        y[j * p + m] = static_cast<Point>(((j + 1) % pb) * p + m);
      }
    }
    for (std::uint64_t i(0); i < pa; ++i) x[left + i] = static_cast<Point>(left + (i + 1) % pa);
    return Group({Perm(std::move(x)), Perm(std::move(y))}, left + pa,
                 MnaDescriptor{MnaKind::Delta, p, a, b}.to_string());
  }

  Group q8() {
    Group g(generalized_quaternion(8));
    return g.renamed("Q8");
  }

  Group build(const MnaDescriptor &d) {
    switch (d.kind) {
    case MnaKind::Gamma: return gamma(d.p, d.a, d.b);
    case MnaKind::Delta: return delta(d.p, d.a, d.b);
    case MnaKind::Q8: return q8();
    }
    throw BadParameters("unknown descriptor kind");
  }

  Group abelian(const std::vector<std::uint64_t> &factors) {
    std::uint64_t degree(0);
    for (auto f : factors) {
      if (f == 0) throw BadParameters("cyclic factor must be positive");
      degree += f;
      require_degree(degree);
    }
    if (degree == 0) return Group({}, 1, "C1");
    std::vector<Perm> gens;
    std::uint64_t offset(0);
    std::string name;
    for (auto f : factors) {
      auto images(identity_images(degree));
      for (std::uint64_t i(0); i < f; ++i) images[offset + i] = static_cast<Point>(offset + (i + 1) % f);
      gens.emplace_back(std::move(images));
      offset += f;
      name += (name.empty() ? "C" : "xC") + std::to_string(f);
    }
    return Group(std::move(gens), degree, name);
  }

  Group cyclic(std::uint64_t n) { return abelian({n}); }

  Group elementary_abelian(std::uint64_t p, std::uint64_t rank) {
    require_prime(p);
    std::vector<std::uint64_t> factors(rank, p);
    Group g(abelian(factors));
    return g.renamed(rank == 0 ? "C1" : "C" + std::to_string(p) + "^" + std::to_string(rank));
  }

  Group dihedral(std::uint64_t order) {
    if (order < 2 || order % 2) throw BadParameters("dihedral order must be even");
    std::uint64_t n(order / 2);
    std::string name("D" + std::to_string(order));
    if (n == 1) return cyclic(2).renamed(name);
    if (n == 2) return abelian({2, 2}).renamed(name);
    require_degree(n);
    auto r(identity_images(n)), s(identity_images(n));
    for (std::uint64_t i(0); i < n; ++i) {
      r[i] = static_cast<Point>((i + 1) % n);
      s[i] = static_cast<Point>((n - i) % n);
    }
    return Group({Perm(std::move(r)), Perm(std::move(s))}, n, name);
  }

  Group semidihedral(std::uint64_t order) {
    auto pk(prime_power(order));
    if (!pk || pk->first != 2 || pk->second < 4) throw BadParameters("semidihedral order must be 2^n with n >= 4");
    std::uint64_t m(order / 2);
    require_degree(m);
    std::uint64_t u(m / 2 - 1);
    auto x(identity_images(m)), y(identity_images(m));
    for (std::uint64_t i(0); i < m; ++i) {
      x[i] = static_cast<Point>((i + 1) % m);
      y[i] = static_cast<Point>((u * i) % m);
    }
    return Group({Perm(std::move(x)), Perm(std::move(y))}, m, "SD" + std::to_string(order));
  }

  Group generalized_quaternion(std::uint64_t order) {
    auto pk(prime_power(order));
    if (!pk || pk->first != 2 || pk->second < 3) throw BadParameters("quaternion order must be 2^n with n >= 3");
    require_degree(order);
    // regular action on normal forms x^i y^j, index 2i + j
    std::uint64_t m(order / 2);
    auto mul = [m](std::uint64_t i, std::uint64_t j, std::uint64_t k, std::uint64_t l) {
      std::uint64_t e(j ? (i + m - k) % m : (i + k) % m);
      if (j && l) e = (e + m / 2) % m;
      return 2 * e + (j ^ l);
    };
    std::vector<Point> x(order), y(order);
    for (std::uint64_t i(0); i < m; ++i) {
      for (std::uint64_t j(0); j < 2; ++j) {
        x[2 * i + j] = static_cast<Point>(mul(1, 0, i, j));
        y[2 * i + j] = static_cast<Point>(mul(0, 1, i, j));
      }
    }
    return Group({Perm(std::move(x)), Perm(std::move(y))}, order, "Q" + std::to_string(order));
  }

  Group extraspecial(std::uint64_t p, std::uint64_t exponent) {
    require_prime(p);
    std::string suffix(std::to_string(p) + "^(1+2) exponent " + std::to_string(exponent));
    if (p == 2) {
      if (exponent != 4) throw BadParameters("extraspecial 2-groups of order 8 have exponent 4");
      return dihedral(8).renamed(suffix);
    }
    if (exponent == p) return delta(p, 1, 1).renamed(suffix);
    if (exponent == p * p) return gamma(p, 2, 1).renamed(suffix);
    throw BadParameters("exponent must be p or p^2");
  }

  Group direct_product(const Group &a, const Group &b) {
    std::size_t degree(a.degree() + b.degree());
    require_degree(degree);
    std::vector<Perm> gens;
    for (const auto &g : a.generators()) {
      auto images(identity_images(degree));
      for (std::size_t i(0); i < a.degree(); ++i) images[i] = g(i);
      gens.emplace_back(std::move(images));
    }
    for (const auto &g : b.generators()) {
      auto images(identity_images(degree));
      for (std::size_t i(0); i < b.degree(); ++i) images[a.degree() + i] = static_cast<Point>(a.degree() + g(i));
      gens.emplace_back(std::move(images));
    }
    return Group(std::move(gens), degree, a.name() + "x" + b.name());
  }

  std::vector<std::vector<Perm>> conjugation_action(const Group &n,
                                                    const std::vector<Perm> &conjugators) {
    std::vector<std::vector<Perm>> action;
    for (const auto &t : conjugators) {
      std::vector<Perm> row;
      for (const auto &g : n.generators()) row.push_back(conjugate(t, g));
      action.push_back(std::move(row));
    }
    return action;
  }

  Group semidirect(const Group &n, const Group &h, const std::vector<std::vector<Perm>> &action) {
    const auto &ngens(n.generators());
    const auto &hgens(h.generators());
    if (action.size() != hgens.size()) throw NotAnAutomorphism("one image row per generator of H expected");
    std::uint64_t order(n.order());
    std::size_t degree(order + h.degree());
    require_degree(degree);
    std::vector<Perm> gens;
    // left multiplication on the elements of N
    for (std::size_t s(0); s < ngens.size(); ++s) {
      auto images(identity_images(degree));
      ElemId g(n.right_gen(identity_id, s));
      for (ElemId m(0); m < order; ++m) images[m] = static_cast<Point>(n.mul(g, m));
      gens.emplace_back(std::move(images));
    }
    for (std::size_t i(0); i < hgens.size(); ++i) {
      if (action[i].size() != ngens.size()) throw NotAnAutomorphism("one image per generator of N expected");
      std::vector<ElemId> targets;
      for (const auto &img : action[i]) {
        auto id(n.find(img));
        if (!id) throw NotAnAutomorphism("generator image lies outside N");
        targets.push_back(*id);
      }
      std::vector<std::uint32_t> phi(order, UINT32_MAX);
      phi[identity_id] = identity_id;
      for (ElemId x(0); x < order; ++x) {
        for (std::size_t s(0); s < ngens.size(); ++s) {
          ElemId y(n.right_gen(x, s));
          ElemId value(n.mul(phi[x], targets[s]));
          if (phi[y] == UINT32_MAX) phi[y] = value;
          else if (phi[y] != value) throw NotAnAutomorphism("images do not respect the relations of N");
        }
      }
      std::vector<char> hit(order, 0);
      for (auto v : phi) {
        if (hit[v]) throw NotAnAutomorphism("map on N is not bijective");
        hit[v] = 1;
      }
      auto images(identity_images(degree));
      for (ElemId m(0); m < order; ++m) images[m] = static_cast<Point>(phi[m]);
      for (std::size_t k(0); k < h.degree(); ++k) images[order + k] = static_cast<Point>(order + hgens[i](k));
      gens.emplace_back(std::move(images));
    }
    Group result(std::move(gens), degree, n.name() + ":" + h.name(), n.cap());
    if (result.order() != order * h.order()) {
      throw NotAnAutomorphism("generator automorphisms do not define an action of H");
    }
    return result;
  }

}
