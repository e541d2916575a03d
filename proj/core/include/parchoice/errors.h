// Copyright 2026 The ParChoice Authors.
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

#ifndef PARCHOICE_ERRORS_H_
#define PARCHOICE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace parchoice {

// Failure classes surfaced to callers. The CLI maps each one to a stable
// process exit code.
enum class ErrorKind {
  kFormat,    // malformed input file or record
  kTask,      // invalid experiment/task setup (labels, classes, datasets)
  kResource,  // missing, unreadable or empty resource
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // 2 format error, 3 task error, 4 resource error.
  int exit_code() const;

 private:
  ErrorKind kind_;
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& message)
      : Error(ErrorKind::kFormat, message) {}
  FormatError(const std::string& file, size_t line, const std::string& message);
};

class TaskError : public Error {
 public:
  explicit TaskError(const std::string& message)
      : Error(ErrorKind::kTask, message) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message)
      : Error(ErrorKind::kResource, message) {}
};

}  // namespace parchoice

#endif  // PARCHOICE_ERRORS_H_
