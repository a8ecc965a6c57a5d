// Copyright 2026 The Inspection Game Authors.
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

#ifndef INSPECTION_ERRORS_H_
#define INSPECTION_ERRORS_H_

#include <stdexcept>
#include <string>

namespace inspection {

enum class ErrorCode {
  kValidation,
  kInfeasibleMarginal,
  kDomain,
  kSizeLimit,
  kNonconvergence,
  kSolverFailure,
  kNumericalInconsistency,
  kGeneration,
};

const char* ErrorCodeName(ErrorCode code);

// Base class for every error raised by the library. The code is stable and
// is what the command-line front end maps to exit statuses.
class InspectionError : public std::runtime_error {
 public:
  InspectionError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ValidationError : public InspectionError {
 public:
  explicit ValidationError(const std::string& message)
      : InspectionError(ErrorCode::kValidation, message) {}
};

class DomainError : public InspectionError {
 public:
  explicit DomainError(const std::string& message)
      : InspectionError(ErrorCode::kDomain, message) {}
};

class SizeLimitError : public InspectionError {
 public:
  SizeLimitError(const std::string& message, double cap)
      : InspectionError(ErrorCode::kSizeLimit, message), cap_(cap) {}

  double cap() const { return cap_; }

 private:
  double cap_;
};

}  // namespace inspection

#endif  // INSPECTION_ERRORS_H_
