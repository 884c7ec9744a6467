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

#include <compare>
#include <cstdio>
#include <limits>
#include <string>

#include "qsl/error.hpp"

namespace qsl {

/// A non-NaN real number or +infinity. Infinity is an explicit state, never
/// the result of an overflowing division.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double value) : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtendedReal infinity() {
    ExtendedReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }

  double value() const {
    if (infinite_) throw Error(ErrorKind::DomainError, "value() of an infinite quantity");
    return value_;
  }

  /// IEEE view for arithmetic where +inf is well defined (comparisons, min).
  constexpr double as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.as_double() == b.as_double();
  }
  friend constexpr std::partial_ordering operator<=>(const ExtendedReal& a,
                                                     const ExtendedReal& b) {
    return a.as_double() <=> b.as_double();
  }

  std::string to_string() const {
    if (infinite_) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value_);
    return buf;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// x / y with y <= cutoff mapped to +infinity.
inline ExtendedReal ratio_or_infinity(double numerator, double denominator, double cutoff) {
  if (denominator <= cutoff) return ExtendedReal::infinity();
  return ExtendedReal(numerator / denominator);
}

}  // namespace qsl

