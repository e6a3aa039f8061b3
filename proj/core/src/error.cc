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

#include "bentrack/error.h"

namespace bentrack {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid argument";
    case ErrorCode::kNonFiniteValue:
      return "non-finite value";
    case ErrorCode::kEmptySample:
      return "empty sample";
    case ErrorCode::kReferenceSupport:
      return "reference support violation";
    case ErrorCode::kParse:
      return "parse error";
    case ErrorCode::kDuplicateDate:
      return "duplicate date";
    case ErrorCode::kInvalidSpread:
      return "invalid spread";
    case ErrorCode::kSeriesTooShort:
      return "series too short";
    case ErrorCode::kEmptySlice:
      return "empty slice";
    case ErrorCode::kInsufficientWindows:
      return "insufficient windows for trend";
  }
  return "unknown error";
}

}  // namespace bentrack
