// Copyright 2026 The drgkit Authors.
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

#ifndef DRG_ERROR_HPP_
#define DRG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace drg {

enum class ErrorKind {
  kParameter,       // caller supplied arguments outside the documented domain
  kParse,           // malformed graph file or JSON input
  kNotConnected,
  kNotRegular,
  kNotDistanceRegular,
  kInfeasible,      // parameters cannot be realized by any distance-regular graph
  kInconsistency,   // structural violation detected while re-verifying a claim
  kInternal,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameter: return "parameter";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kNotConnected: return "not-connected";
    case ErrorKind::kNotRegular: return "not-regular";
    case ErrorKind::kNotDistanceRegular: return "not-distance-regular";
    case ErrorKind::kInfeasible: return "infeasible";
    case ErrorKind::kInconsistency: return "inconsistency";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

/// Every failure raised by the library is an Error; `kind()` lets callers
/// distinguish bad input from structural findings without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::kParameter, message);
}

}  // namespace drg

#endif  // DRG_ERROR_HPP_
