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

#ifndef SYLOWSCOPE_ERRORS_HPP
#define SYLOWSCOPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sylowscope {

  class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
  };

#define SYLOWSCOPE_ERROR(Name)                                        \
  class Name : public Error {                                         \
  public:                                                             \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {} \
  }

  SYLOWSCOPE_ERROR(CapExceeded);
  SYLOWSCOPE_ERROR(ElementNotInGroup);
  SYLOWSCOPE_ERROR(NotAPGroup);
  SYLOWSCOPE_ERROR(NotASubgroup);
  SYLOWSCOPE_ERROR(NotNormal);
  SYLOWSCOPE_ERROR(BadParameters);
  SYLOWSCOPE_ERROR(NotAnAutomorphism);
  SYLOWSCOPE_ERROR(UnknownName);
  SYLOWSCOPE_ERROR(NotAUnit);
  SYLOWSCOPE_ERROR(NotInLattice);
  SYLOWSCOPE_ERROR(PreconditionViolation);
  SYLOWSCOPE_ERROR(InternalInconsistency);
  SYLOWSCOPE_ERROR(FormatError);

#undef SYLOWSCOPE_ERROR

}

#endif
