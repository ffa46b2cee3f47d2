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
#include <sylowscope/io.hpp>
#include <sylowscope/numtheory.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>

namespace sylowscope {

  namespace {
    Json integer_json(const std::string &digits, bool small, std::int64_t value) {
      if (small) return value;
      return digits;
    }

    Json rational_to_json(const Rational &r) {
      return Json::array({integer_json(r.num_str(), r.is_small(), r.small_num()),
                          integer_json(r.den_str(), r.is_small(), r.small_den())});
    }

    mpz_class integer_from_json(const Json &j) {
      if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
      if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw FormatError("malformed integer");
        return z;
      }
      throw FormatError("integer expected");
    }

    Rational rational_from_json(const Json &j) {
      if (j.is_number_integer() || j.is_string()) return Rational(mpq_class(integer_from_json(j)));
      if (!j.is_array() || j.size() != 2) throw FormatError("rational must be [num, den]");
      mpz_class den(integer_from_json(j[1]));
      if (den == 0) throw FormatError("zero denominator");
      mpq_class q(integer_from_json(j[0]), den);
      q.canonicalize();
      return Rational(q);
    }

    // fixed total order on values of one field: dense coefficients, lexicographic
    int compare_values(const Cyclotomic &a, const Cyclotomic &b) {
      auto x(a.dense_coeffs()), y(b.dense_coeffs());
      for (std::size_t i(0); i < std::max(x.size(), y.size()); ++i) {
        Rational u(i < x.size() ? x[i] : Rational(0)), v(i < y.size() ? y[i] : Rational(0));
        if (u != v) return u < v ? -1 : 1;
      }
      return 0;
    }

    template <typename T> T field(const Json &j, const char *key) {
      if (!j.contains(key)) throw FormatError(std::string("missing field ") + key);
      try {
        return j.at(key).get<T>();
      } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("bad field ") + key + ": " + e.what());
      }
    }
  }

  Json group_to_json(const Group &group) {
    Json gens(Json::array());
    for (const auto &g : group.generators()) {
      Json images(Json::array());
      for (std::size_t i(0); i < g.degree(); ++i) images.push_back(static_cast<int>(g(static_cast<Point>(i))));
      gens.push_back(std::move(images));
    }
    return Json{{"degree", group.degree()}, {"generators", std::move(gens)}, {"name", group.name()}};
  }

  Group group_from_json(const Json &json) {
    auto degree(field<std::size_t>(json, "degree"));
    if (degree == 0 || degree > max_degree) throw FormatError("degree out of range");
    std::vector<Perm> gens;
    for (const auto &g : field<std::vector<std::vector<int>>>(json, "generators")) {
      if (g.size() != degree) throw FormatError("generator length differs from degree");
      std::vector<Point> images;
      for (int x : g) {
        if (x < 0 || static_cast<std::size_t>(x) >= degree) throw FormatError("image out of range");
        images.push_back(static_cast<Point>(x));
      }
      try {
        gens.emplace_back(std::move(images));
      } catch (const Error &) {
        throw FormatError("generator is not a permutation");
      }
    }
    std::string name(json.contains("name") ? field<std::string>(json, "name") : "");
    return Group(std::move(gens), degree, name);
  }

  Json cyclotomic_to_json(const Cyclotomic &value) {
    auto coeffs(value.dense_coeffs());
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    Json c(Json::array());
    for (const auto &r : coeffs) c.push_back(rational_to_json(r));
    return Json{{"n", value.modulus()}, {"coeffs", std::move(c)}};
  }

  Cyclotomic cyclotomic_from_json(const Json &json) {
    if (json.is_number_integer() || json.is_string()) return Cyclotomic(rational_from_json(json));
    auto n(field<std::uint64_t>(json, "n"));
    if (n == 0) throw FormatError("modulus must be positive");
    const auto &c(json.at("coeffs"));
    if (!c.is_array()) throw FormatError("coeffs must be an array");
    std::uint64_t phi(euler_phi(n));
    if (c.size() > phi) throw FormatError("more coefficients than the field degree");
    std::vector<Rational> coeffs;
    for (const auto &x : c) coeffs.push_back(rational_from_json(x));
    coeffs.resize(phi, Rational(0));
    return Cyclotomic::from_basis(n, coeffs);
  }

  CharacterTable canonical_columns(const CharacterTable &table) {
    std::size_t k(table.size());
    std::vector<std::uint32_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (table.element_orders()[a] != table.element_orders()[b]) return table.element_orders()[a] < table.element_orders()[b];
      if (table.class_sizes()[a] != table.class_sizes()[b]) return table.class_sizes()[a] < table.class_sizes()[b];
      for (std::size_t i(0); i < k; ++i) {
        if (table.value_id(i, a) == table.value_id(i, b)) continue;
        return compare_values(table.value(i, a), table.value(i, b)) < 0;
      }
      return false;
    });
    std::vector<std::uint32_t> position(k);
    for (std::uint32_t j(0); j < k; ++j) position[order[j]] = j;
    TableContents c(table.contents());
    for (std::size_t j(0); j < k; ++j) {
      c.class_sizes[j] = table.class_sizes()[order[j]];
      c.element_orders[j] = table.element_orders()[order[j]];
      for (std::size_t i(0); i < k; ++i) c.value_ids[i * k + j] = table.value_id(i, order[j]);
    }
    for (auto &[q, map] : c.power_maps) {
      const auto &old(table.power_maps().at(q));
      for (std::size_t j(0); j < k; ++j) map[j] = position[old[order[j]]];
    }
    return CharacterTable(std::move(c), table.contents().strict_abstract ? std::nullopt : table.source_group());
  }

  Json table_to_json(const CharacterTable &table) {
    Json pmaps(Json::object());
    for (const auto &[q, map] : table.power_maps()) pmaps[std::to_string(q)] = map;
    std::vector<Json> pool;
    for (const auto &v : table.pool()) pool.push_back(cyclotomic_to_json(v));
    Json values(Json::array());
    for (std::size_t i(0); i < table.size(); ++i) {
      Json row(Json::array());
      for (std::size_t j(0); j < table.size(); ++j) row.push_back(pool[table.value_id(i, j)]);
      values.push_back(std::move(row));
    }
    return Json{{"group_order", table.group_order()},
                {"class_sizes", table.class_sizes()},
                {"element_orders", table.element_orders()},
                {"power_maps", std::move(pmaps)},
                {"values", std::move(values)},
                {"modulus", table.modulus()},
                {"strict_abstract", table.strict_abstract()}};
  }

  CharacterTable table_from_json(const Json &json) {
    TableContents c;
    c.group_order = field<std::uint64_t>(json, "group_order");
    c.class_sizes = field<std::vector<std::uint64_t>>(json, "class_sizes");
    c.element_orders = field<std::vector<std::uint64_t>>(json, "element_orders");
    c.modulus = field<std::uint64_t>(json, "modulus");
    if (c.modulus == 0) throw FormatError("modulus must be positive");
    if (json.contains("strict_abstract")) c.strict_abstract = field<bool>(json, "strict_abstract");
    if (json.contains("power_maps")) {
      for (const auto &[key, map] : json.at("power_maps").items()) {
        try {
          c.power_maps[std::stoull(key)] = map.get<std::vector<std::uint32_t>>();
        } catch (const std::exception &) {
          throw FormatError("bad power map " + key);
        }
      }
    }
    std::size_t k(c.class_sizes.size());
    const auto &values(json.at("values"));
    if (!values.is_array() || values.size() != k) throw FormatError("values must be a square matrix");
    std::vector<Cyclotomic> pool;
    for (const auto &row : values) {
      if (!row.is_array() || row.size() != k) throw FormatError("values must be a square matrix");
      for (const auto &v : row) {
        c.value_ids.push_back(static_cast<std::uint32_t>(pool.size()));
        pool.push_back(cyclotomic_from_json(v));
      }
    }
    for (const auto &v : pool) {
      if (c.modulus % v.modulus() != 0) throw FormatError("value outside the field of the table");
    }
    c.pool = std::move(pool);
    for (const auto &[q, map] : c.power_maps) {
      if (map.size() != k) throw FormatError("power map length differs from the class count");
      for (auto x : map) if (x >= k) throw FormatError("power map index out of range");
    }
    return CharacterTable(std::move(c));
  }

  Json read_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
      return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
      throw FormatError(path.string() + ": " + e.what());
    }
  }

  void write_json(const std::filesystem::path &path, const Json &json) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    out << json.dump(1) << '\n';
  }

}
