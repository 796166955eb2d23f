/*
   Copyright 2026 The dhecke Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DHECKE_ERRORS_HPP
#define DHECKE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dhecke {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define DHECKE_DEFINE_ERROR(Name)                                      \
    class Name : public Error {                                        \
       public:                                                         \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    };

DHECKE_DEFINE_ERROR(DivisionByZero)
DHECKE_DEFINE_ERROR(InvalidInput)
DHECKE_DEFINE_ERROR(ShapeError)
DHECKE_DEFINE_ERROR(WrongDegree)
DHECKE_DEFINE_ERROR(GroupMismatch)
DHECKE_DEFINE_ERROR(InvariantViolation)
DHECKE_DEFINE_ERROR(InternalError)
DHECKE_DEFINE_ERROR(PrecisionError)
DHECKE_DEFINE_ERROR(NotFoundWithinDepth)

#undef DHECKE_DEFINE_ERROR

}  // namespace dhecke

#endif
