// Copyright 2026 The bentrack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BENTRACK_ERROR_H_
#define BENTRACK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace bentrack {

enum class ErrorCode {
  // Caller supplied an argument outside the documented domain.
  kInvalidArgument,
  kNonFiniteValue,
  kEmptySample,
  kReferenceSupport,
  kParse,
  kDuplicateDate,
  kInvalidSpread,
  kSeriesTooShort,
  kEmptySlice,
  kInsufficientWindows,
};

std::string_view ErrorCodeName(ErrorCode code);

// Single exception type thrown by the library. `code()` lets callers (the
// CLI in particular) separate configuration mistakes from bad data.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // True for errors caused by the data being analyzed rather than by how the
  // library was called.
  bool is_data_error() const noexcept {
    return code_ != ErrorCode::kInvalidArgument;
  }

 private:
  ErrorCode code_;
};

}  // namespace bentrack

#endif  // BENTRACK_ERROR_H_
