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

#ifndef SYLOWSCOPE_IO_HPP
#define SYLOWSCOPE_IO_HPP

#include <sylowscope/chartab.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>

namespace sylowscope {

  using Json = nlohmann::json;

  // { "degree", "generators": image arrays, "name" }
  Json group_to_json(const Group &group);
  Group group_from_json(const Json &json);

  // { "n", "coeffs": [[num, den], ...] } over the power basis
  Json cyclotomic_to_json(const Cyclotomic &value);
  Cyclotomic cyclotomic_from_json(const Json &json);

  // columns reordered by (element order, class size, value tuple); rows untouched
  CharacterTable canonical_columns(const CharacterTable &table);

  Json table_to_json(const CharacterTable &table);
  CharacterTable table_from_json(const Json &json);

  Json read_json(const std::filesystem::path &path);
  void write_json(const std::filesystem::path &path, const Json &json);

}

#endif
