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

#ifndef FQSPECTRA_ERROR_H_
#define FQSPECTRA_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqs {

enum class ErrorCode {
  kNotPrime,
  kEvenCharacteristic,
  kDegreeTooLarge,
  kOrderTooLarge,
  kInverseOfZero,
  kDimensionMismatch,
  kSearchSpaceTooLarge,
  kZeroParameter,
  kEmptyVariety,
  kDegenerateForm,
  kExponentDivisibleByCharacteristic,
  kNotDiagonal,
  kBudgetExceeded,
  kOddK,
  kEmptyX,
  kInconsistentTotal,
  kSizeExceedsVariety,
  kSubsetTooSmall,
  kInvalidArgument,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type. The message is
// prefixed with the error name so callers that only print what() still show
// which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fqs

#endif  // FQSPECTRA_ERROR_H_
