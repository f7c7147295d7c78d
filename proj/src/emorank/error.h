// emorank/error.h

// Copyright 2026  The Emorank Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef EMORANK_ERROR_H_
#define EMORANK_ERROR_H_

#include <stdexcept>
#include <string>

namespace emorank {

enum class StatusCode {
  kOk = 0,
  kIoError = 1,
  kParseError = 2,
  kInvalidArgument = 3,
  kDimMismatch = 4,
  kNotConverged = 5,
  kInternal = 6,
};

inline const char* status_name(StatusCode code) {
  switch (code) {
    case StatusCode::kOk: return "ok";
    case StatusCode::kIoError: return "io_error";
    case StatusCode::kParseError: return "parse_error";
    case StatusCode::kInvalidArgument: return "invalid_argument";
    case StatusCode::kDimMismatch: return "dim_mismatch";
    case StatusCode::kNotConverged: return "not_converged";
    case StatusCode::kInternal: return "internal";
  }
  return "unknown";
}

// All fallible core operations throw Error; the C API layer translates it
// into a status code plus a thread-local message.
class Error : public std::runtime_error {
 public:
  Error(StatusCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  StatusCode code() const { return code_; }

 private:
  StatusCode code_;
};

}  // namespace emorank

#endif  // EMORANK_ERROR_H_
