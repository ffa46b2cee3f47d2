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
#include <sylowscope/io.hpp>

#include <gtest/gtest.h>

using namespace sylowscope;

TEST(Io, GroupRoundTrip) {
  auto g(named("M9"));
  auto back(group_from_json(group_to_json(g)));
  EXPECT_EQ(back.order(), g.order());
  EXPECT_EQ(back.name(), "M9");
  EXPECT_THROW(group_from_json(Json{{"degree", 3}, {"generators", {{0, 0, 1}}}}), FormatError);
  EXPECT_THROW(group_from_json(Json{{"degree", 3}, {"generators", {{0, 1}}}}), FormatError);
  EXPECT_THROW(group_from_json(Json{{"generators", Json::array()}}), FormatError);
}

TEST(Io, CyclotomicRoundTrip) {
  auto z(Cyclotomic::root_of_unity(9, 4) + Cyclotomic(Rational(-3, 7)));
  auto j(cyclotomic_to_json(z));
  EXPECT_EQ(j["n"], 9);
  EXPECT_EQ(cyclotomic_from_json(j), z);
  Cyclotomic big(Rational(mpq_class("123456789012345678901234567890/7")));
  EXPECT_EQ(cyclotomic_from_json(cyclotomic_to_json(big)), big);
  EXPECT_THROW(cyclotomic_from_json(Json{{"n", 4}, {"coeffs", {{1, 1}, {2, 1}, {3, 1}}}}), FormatError);
}

TEST(Io, TableRoundTripAndCanonicalOrder) {
  for (auto g : {named("A5"), named("SL(2,3)"), gamma(3, 2, 1)}) {
    auto t(dixon_schneider(g));
    auto canon(canonical_columns(t));
    EXPECT_TRUE(check_integrity(canon).ok());
    EXPECT_TRUE(tables_equivalent(t, canon));
    for (std::size_t j(1); j < canon.size(); ++j) EXPECT_LE(canon.element_orders()[j - 1], canon.element_orders()[j]);
    auto text(table_to_json(canon).dump());
    auto back(table_from_json(Json::parse(text)));
    EXPECT_EQ(table_to_json(back).dump(), text);
    EXPECT_TRUE(check_integrity(back).ok());
    // canonical order does not depend on the starting column order
    EXPECT_EQ(table_to_json(canonical_columns(back)).dump(), text);
  }
}

TEST(Io, MalformedTables) {
  EXPECT_THROW(table_from_json(Json{{"group_order", 2}}), FormatError);
  Json t{{"group_order", 2}, {"class_sizes", {1, 1}}, {"element_orders", {1, 2}}, {"modulus", 2},
         {"values", {{1, 1}, {1}}}};
  EXPECT_THROW(table_from_json(t), FormatError);
  t["values"] = {{1, 1}, {1, -1}};
  EXPECT_EQ(table_from_json(t).value(1, 1), Cyclotomic(-1));
}
