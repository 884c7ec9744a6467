// Copyright 2026 The qslasym Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsl {

enum class ErrorKind {
  NotHermitian,
  DomainError,
  DimensionMismatch,
  NotPositive,
  TraceNotOne,
  NotPermutation,
  InvalidOrder,
  SupportError,
  InvalidEpsilon,
  InvalidHorizon,
  NotTracePreserving,
  NotIncoherentTarget,
  InvalidDilation,
  MissingCertificate,
  InvalidArgument,
  ParseError,
  IOError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::SupportError: return "SupportError";
    case ErrorKind::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorKind::InvalidHorizon: return "InvalidHorizon";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::NotIncoherentTarget: return "NotIncoherentTarget";
    case ErrorKind::InvalidDilation: return "InvalidDilation";
    case ErrorKind::MissingCertificate: return "MissingCertificate";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IOError: return "IOError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Validation failures (as opposed to parse or I/O failures) map to one CLI exit code.
inline bool is_validation_error(ErrorKind kind) {
  return kind != ErrorKind::ParseError && kind != ErrorKind::IOError;
}

}  // namespace qsl
