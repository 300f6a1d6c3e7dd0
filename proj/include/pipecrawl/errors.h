// Copyright 2026 The Pipecrawl Authors
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

#ifndef PIPECRAWL_ERRORS_H_
#define PIPECRAWL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pipecrawl {

// Input outside an operation's mathematical domain (non-positive radius,
// point outside an ellipse, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Cutting plane parallel to the pipe axis; the section is two lines.
class DegenerateSectionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptySectorError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class PlanInfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No contacting module produces translation although motion is commanded.
class StalledError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad scenario configuration, or a plan that does not fit its network.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& message, std::string key = {},
                       int line = 0)
      : std::runtime_error(Format(message, key, line)),
        key_(std::move(key)),
        line_(line) {}

  const std::string& key() const { return key_; }
  int line() const { return line_; }

 private:
  static std::string Format(const std::string& message, const std::string& key,
                            int line) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!key.empty()) out += "'" + key + "': ";
    return out + message;
  }

  std::string key_;
  int line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pipecrawl

#endif  // PIPECRAWL_ERRORS_H_
