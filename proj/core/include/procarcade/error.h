// Copyright 2026 The Procarcade Authors
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

#ifndef PROCARCADE_ERROR_H_
#define PROCARCADE_ERROR_H_

#include <stdexcept>
#include <string>

namespace procarcade {

enum class ErrorKind {
  kConfig,       // invalid EnvConfig / parameter table / CLI flag
  kDomain,       // argument outside an operation's domain
  kArithmetic,   // fixed-point overflow
  kGeneration,   // level generation exhausted its retries
  kUsage,        // API misuse, e.g. stepping a finished episode
  kDeterminism,  // replay diverged from a recorded log
};

const char* ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void Fail(ErrorKind kind, const std::string& message);

}  // namespace procarcade

#endif  // PROCARCADE_ERROR_H_
