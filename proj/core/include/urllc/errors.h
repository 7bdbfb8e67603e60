// Copyright 2026 The urllc-power Authors
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

#ifndef URLLC_ERRORS_H_
#define URLLC_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace urllc {

enum class ErrorCategory { kUsage, kParse, kValidation, kIo, kAudit };

std::string_view ErrorCategoryName(ErrorCategory category);

// Error carrying a machine-readable category and, for configuration
// problems, the offending field.
class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string field, const std::string& message)
      : std::runtime_error(message), category_(category), field_(std::move(field)) {}

  ErrorCategory category() const { return category_; }
  const std::string& field() const { return field_; }

 private:
  ErrorCategory category_;
  std::string field_;
};

inline Error ValidationError(std::string field, const std::string& message) {
  return Error(ErrorCategory::kValidation, std::move(field), message);
}

}  // namespace urllc

#endif  // URLLC_ERRORS_H_
