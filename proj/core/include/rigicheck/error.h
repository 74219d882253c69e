// Copyright 2026 The Rigicheck Authors.
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

#ifndef RIGICHECK_ERROR_H_
#define RIGICHECK_ERROR_H_

#include <stdexcept>
#include <string>

namespace rigicheck {

// Raised when an input violates an operation's precondition or cannot be
// parsed. The command-line tool maps it to exit code 3.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a computed object contradicts a structural guarantee that must
// hold for valid inputs (for example a surgery output that is not a circuit).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Raised when a brute-force or enumeration request exceeds its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace rigicheck

#endif  // RIGICHECK_ERROR_H_
