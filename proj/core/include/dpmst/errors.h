// Copyright 2026 The dpmst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPMST_ERRORS_H_
#define DPMST_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dpmst {

enum class ErrorCode {
  kInvalidArgument,
  kSelfLoop,
  kEndpointOutOfRange,
  kLengthMismatch,
  kDisconnected,
  kDoubleRemoval,
  kEmpty,
  kGuardExceeded,
  kOracleInconsistent,
  kUnknownMechanism,
  kParse,
  kIo,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library carries a code so callers (the CLI in
// particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dpmst

#endif  // DPMST_ERRORS_H_
