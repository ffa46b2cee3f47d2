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

namespace sylowscope {

  // simple groups, their covers, and the p-constrained models with a non-normal
  // minimal non-abelian Sylow met by the corpus
  // per prime: Sylow order, cyclic, maximal class, minimal non-abelian, 2-generated
  const std::vector<SimpleFingerprint> &fingerprint_database() {
    static const std::vector<SimpleFingerprint> db{
      {60, 5, {1, 3, 3, 4, 5}, "A5", {{2, {4, false, true, false, true}}, {3, {3, true, true, false, true}}, {5, {5, true, true, false, true}}}, true},
      {168, 6, {1, 3, 3, 6, 7, 8}, "PSL(2,7)", {{2, {8, false, true, true, true}}, {3, {3, true, true, false, true}}, {7, {7, true, true, false, true}}}, true},
      {360, 7, {1, 5, 5, 8, 8, 9, 10}, "A6", {{2, {8, false, true, true, true}}, {3, {9, false, true, false, true}}, {5, {5, true, true, false, true}}}, true},
      {504, 9, {1, 7, 7, 7, 7, 8, 9, 9, 9}, "PSL(2,8)", {{2, {8, false, false, false, false}}, {3, {9, true, true, false, true}}, {7, {7, true, true, false, true}}}, true},
      {660, 8, {1, 5, 5, 10, 10, 11, 12, 12}, "PSL(2,11)", {{2, {4, false, true, false, true}}, {3, {3, true, true, false, true}}, {5, {5, true, true, false, true}}, {11, {11, true, true, false, true}}}, true},
      {1092, 9, {1, 7, 7, 12, 12, 12, 13, 14, 14}, "PSL(2,13)", {{2, {4, false, true, false, true}}, {3, {3, true, true, false, true}}, {7, {7, true, true, false, true}}, {13, {13, true, true, false, true}}}, true},
      {2520, 9, {1, 6, 10, 10, 14, 14, 15, 21, 35}, "A7", {{2, {8, false, true, true, true}}, {3, {9, false, true, false, true}}, {5, {5, true, true, false, true}}, {7, {7, true, true, false, true}}}, true},
      {5616, 12, {1, 12, 13, 16, 16, 16, 16, 26, 26, 26, 27, 39}, "PSL(3,3)", {{2, {16, false, true, false, true}}, {3, {27, false, true, true, true}}, {13, {13, true, true, false, true}}}, true},
      {6048, 14, {1, 6, 7, 7, 7, 14, 21, 21, 21, 27, 28, 28, 32, 32}, "PSU(3,3)", {{2, {32, false, false, false, true}}, {3, {27, false, true, true, true}}, {7, {7, true, true, false, true}}}, true},
      {48, 10, {1, 1, 1, 1, 2, 2, 3, 3, 3, 3}, "A4:C4", {{2, {16, false, false, true, true}}, {3, {3, true, true, false, true}}}, false},
      {648, 30, {1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 8, 8, 8, 8, 8, 8, 8, 8, 8}, "M9:C9", {{2, {8, false, true, true, true}}, {3, {81, false, false, true, true}}}, false},
      {120, 9, {1, 2, 2, 3, 3, 4, 4, 5, 6}, "SL(2,5)", {{2, {8, false, true, true, true}}, {3, {3, true, true, false, true}}, {5, {5, true, true, false, true}}}, false},
      {336, 11, {1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8}, "SL(2,7)", {{2, {16, false, true, false, true}}, {3, {3, true, true, false, true}}, {7, {7, true, true, false, true}}}, false},
      {720, 13, {1, 4, 4, 5, 5, 8, 8, 8, 8, 9, 10, 10, 10}, "SL(2,9)", {{2, {16, false, true, false, true}}, {3, {9, false, true, false, true}}, {5, {5, true, true, false, true}}}, false},
      {1320, 15, {1, 5, 5, 6, 6, 10, 10, 10, 10, 10, 11, 12, 12, 12, 12}, "SL(2,11)", {{2, {8, false, true, true, true}}, {3, {3, true, true, false, true}}, {5, {5, true, true, false, true}}, {11, {11, true, true, false, true}}}, false},
      {2184, 17, {1, 6, 6, 7, 7, 12, 12, 12, 12, 12, 12, 13, 14, 14, 14, 14, 14}, "SL(2,13)", {{2, {8, false, true, true, true}}, {3, {3, true, true, false, true}}, {7, {7, true, true, false, true}}, {13, {13, true, true, false, true}}}, false},
    };
    return db;
  }

}
