// Copyright 2026 The fqspectra Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FQSPECTRA_COUNT_H_
#define FQSPECTRA_COUNT_H_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fqs {

// Exact counts. Values that fit a machine word stay in-place; larger ones
// spill to the heap transparently.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline long double to_long_double(const Count& c) {
  return c.convert_to<long double>();
}

inline std::string to_decimal(const Count& c) { return c.str(); }

}  // namespace fqs

#endif  // FQSPECTRA_COUNT_H_
