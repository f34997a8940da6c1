// src/common/error.h

// Copyright 2026  SEANet C++ project

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SEANET_COMMON_ERROR_H_
#define SEANET_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace seanet {

// One category per externally visible failure mode. The CLI prints the
// category name as a machine-parsable prefix and the C API maps each
// category onto a status code.
enum class ErrorCategory {
  kInvalidArgument,
  kIo,
  kShape,
  kConfig,
  kMissingModality,
  kUndefinedMetric,
  kNonFiniteLoss,
  kInternal,
};

inline const char* category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kInvalidArgument: return "invalid-argument";
    case ErrorCategory::kIo: return "io";
    case ErrorCategory::kShape: return "shape";
    case ErrorCategory::kConfig: return "config";
    case ErrorCategory::kMissingModality: return "missing-modality";
    case ErrorCategory::kUndefinedMetric: return "undefined-metric";
    case ErrorCategory::kNonFiniteLoss: return "non-finite-loss";
    case ErrorCategory::kInternal: return "internal";
  }
  return "internal";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& msg)
      : std::runtime_error(msg), category_(category) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

[[noreturn]] inline void fail(ErrorCategory c, const std::string& msg) {
  throw Error(c, msg);
}

#define SEANET_CHECK(cond, category, msg)            \
  do {                                               \
    if (!(cond)) ::seanet::fail((category), (msg)); \
  } while (0)

}  // namespace seanet

#endif  // SEANET_COMMON_ERROR_H_
