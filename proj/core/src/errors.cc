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

#include "parchoice/errors.h"

namespace parchoice {

int Error::exit_code() const {
  switch (kind_) {
    case ErrorKind::kFormat:
      return 2;
    case ErrorKind::kTask:
      return 3;
    case ErrorKind::kResource:
      return 4;
  }
  return 1;
}

FormatError::FormatError(const std::string& file, size_t line,
                         const std::string& message)
    : Error(ErrorKind::kFormat,
            file + ":" + std::to_string(line) + ": " + message) {}

}  // namespace parchoice
