// Copyright 2026 The ctclm Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ctclm {

// Error categories. Values mirror ctclm_status in the public C header so the
// C API can forward codes without a translation table.
enum class ErrorCode {
  kInvalidArg = 1,
  kParse = 2,
  kIo = 3,
  kInfeasible = 4,  // target cannot be aligned within the given frame count
  kSize = 5,        // guarded size limit exceeded
  kState = 6,       // unknown symbol, vocabulary mismatch, bad handle state
  kInternal = 7,
};

class CtclmError : public std::runtime_error {
 public:
  CtclmError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw CtclmError(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace ctclm
