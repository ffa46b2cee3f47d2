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

#ifndef SYLOWSCOPE_CONSTRUCTORS_HPP
#define SYLOWSCOPE_CONSTRUCTORS_HPP

#include <sylowscope/group.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sylowscope {

  enum class MnaKind { Gamma, Delta, Q8 };

  struct MnaDescriptor {
    MnaKind kind;
    std::uint64_t p;
    std::uint64_t a;
    std::uint64_t b;

    std::uint64_t predicted_order() const;
    std::string to_string() const;
    bool operator==(const MnaDescriptor &) const = default;
  };

  // <x,y | x^(p^a) = y^(p^b) = 1, y x y^-1 = x^(1+p^(a-1))>, a >= 2, b >= 1
  Group gamma(std::uint64_t p, std::uint64_t a, std::uint64_t b);
  // <x,y | x^(p^a) = y^(p^b) = [x,y]^p = 1, [x,y] central>, a >= b >= 1
  Group delta(std::uint64_t p, std::uint64_t a, std::uint64_t b);
  Group q8();
  Group build(const MnaDescriptor &descriptor);

  Group cyclic(std::uint64_t n);
  Group elementary_abelian(std::uint64_t p, std::uint64_t rank);
  // abelian group with the given cyclic factors
  Group abelian(const std::vector<std::uint64_t> &factors);
  Group dihedral(std::uint64_t order);
  Group semidihedral(std::uint64_t order);
  Group generalized_quaternion(std::uint64_t order);
  // p odd: exponent p or p^2; p = 2: exponent 4 gives D8
  Group extraspecial(std::uint64_t p, std::uint64_t exponent);

  Group direct_product(const Group &a, const Group &b);
  // action[i][j]: image of n.generators()[j] under the automorphism
  // attached to h.generators()[i]
  Group semidirect(const Group &n, const Group &h,
                   const std::vector<std::vector<Perm>> &action);
  // action of every generator of h by conjugation with the given permutations
  std::vector<std::vector<Perm>> conjugation_action(const Group &n,
                                                    const std::vector<Perm> &conjugators);

  Group named(const std::string &name);
  std::vector<std::string> catalog();

}

#endif
