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

// Distinguishability measures D(sigma1, sigma2): each is zero on equal
// arguments and contracts under channels. Trace distance keeps the
// unnormalized convention with maximum 2.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>

#include "qsl/config.hpp"
#include "qsl/error.hpp"
#include "qsl/extended_real.hpp"
#include "qsl/operator_core.hpp"
#include "qsl/states.hpp"

namespace qsl {

inline bool is_valid_renyi_order(double s) {
  return std::isfinite(s) && ((s > 0.0 && s < 1.0) || (s > 1.0 && s <= 2.0));
}

inline void require_renyi_order(double s, const char* who) {
  if (!is_valid_renyi_order(s))
    throw Error(ErrorKind::InvalidOrder,
                std::string(who) + ": order " + std::to_string(s) + " outside (0,1) u (1,2]");
}

class DistinguishabilityMeasure {
 public:
  enum class Kind { TraceDistance, Renyi, Infidelity, Perp };

  static DistinguishabilityMeasure trace() { return DistinguishabilityMeasure(Kind::TraceDistance, 0.0); }
  static DistinguishabilityMeasure renyi(double s = 0.5) {
    require_renyi_order(s, "DistinguishabilityMeasure::renyi");
    return DistinguishabilityMeasure(Kind::Renyi, s);
  }
  static DistinguishabilityMeasure infidelity() { return DistinguishabilityMeasure(Kind::Infidelity, 0.0); }
  static DistinguishabilityMeasure perp() { return DistinguishabilityMeasure(Kind::Perp, 0.0); }

  /// Parses "trace", "renyi", "renyi:<s>", "infidelity" or "perp".
  static DistinguishabilityMeasure parse(std::string_view text) {
    if (text == "trace") return trace();
    if (text == "infidelity") return infidelity();
    if (text == "perp") return perp();
    if (text == "renyi") return renyi();
    if (text.substr(0, 6) == "renyi:") {
      const std::string number(text.substr(6));
      char* end = nullptr;
      const double s = std::strtod(number.c_str(), &end);
      if (number.empty() || end != number.c_str() + number.size())
        throw Error(ErrorKind::InvalidArgument, "bad Renyi order '" + number + "'");
      return renyi(s);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown measure '" + std::string(text) + "'");
  }

  Kind kind() const { return kind_; }
  double order() const { return order_; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::TraceDistance: return "trace";
      case Kind::Infidelity: return "infidelity";
      case Kind::Perp: return "perp";
      case Kind::Renyi: {
        char buf[40];
        std::snprintf(buf, sizeof buf, "renyi:%.17g", order_);
        return buf;
      }
    }
    return "unknown";
  }

  friend bool operator==(const DistinguishabilityMeasure&, const DistinguishabilityMeasure&) = default;

 private:
  DistinguishabilityMeasure(Kind kind, double order) : kind_(kind), order_(order) {}
  Kind kind_;
  double order_;
};

inline void require_same_dim(const DensityMatrix& a, const DensityMatrix& b, const char* who) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch,
                std::string(who) + ": dims " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

/// ||sigma1 - sigma2||_1, in [0, 2].
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_dim(a, b, "trace_distance");
  return std::min(2.0, trace_norm_hermitian(a.matrix() - b.matrix()));
}

/// log tr(sigma1^s sigma2^(1-s)) / (s - 1) with powers taken on the support.
/// Infinite when the overlap vanishes (s < 1) or when supp(sigma1) is not
/// inside supp(sigma2) (s > 1).
inline ExtendedReal renyi_relative_entropy(const DensityMatrix& a, const DensityMatrix& b, double s,
                                           const Tolerances& tol = default_tolerances()) {
  require_renyi_order(s, "renyi_relative_entropy");
  require_same_dim(a, b, "renyi_relative_entropy");
  if (s > 1.0) {
    const ComplexMatrix support_b = support_power(b.spectrum(), 0.0, tol);
    const double outside = 1.0 - (support_b * a.matrix()).trace().real();
    if (outside > tol.support) return ExtendedReal::infinity();
  }
  const double overlap = (a.power(s) * b.power(1.0 - s)).trace().real();
  if (s < 1.0 && overlap <= tol.zero_overlap) return ExtendedReal::infinity();
  return std::max(0.0, std::log(overlap) / (s - 1.0));
}

namespace detail {
// (sum_k sqrt(lambda_k))^2, with round-off eigenvalues (relative to the
// largest, at the clamp level) dropped before the square root.
inline double sqrt_trace_squared(const RealVector& lambda, const Tolerances& tol = default_tolerances()) {
  const double cut = tol.clamp * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  double root = 0.0;
  for (Eigen::Index k = 0; k < lambda.size(); ++k)
    if (lambda(k) > cut) root += std::sqrt(lambda(k));
  return root * root;
}
}  // namespace detail

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2.
inline double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_dim(a, b, "fidelity");
  const ComplexMatrix sa = a.sqrt();
  return std::clamp(detail::sqrt_trace_squared(eigenvalues_hermitian(sa * b.matrix() * sa)), 0.0, 1.0);
}

inline double infidelity(const DensityMatrix& a, const DensityMatrix& b) { return 1.0 - fidelity(a, b); }

inline bool is_perfectly_distinguishable(const DensityMatrix& a, const DensityMatrix& b, double tol = 1e-8) {
  return trace_distance(a, b) >= 2.0 - tol;
}

/// Dispatch on the measure. Perp is 1 for perfectly distinguishable pairs
/// (trace distance >= 2 - tol.perp) and 0 otherwise.
inline ExtendedReal distinguishability(const DistinguishabilityMeasure& measure, const DensityMatrix& a,
                                       const DensityMatrix& b, const Tolerances& tol = default_tolerances()) {
  using Kind = DistinguishabilityMeasure::Kind;
  switch (measure.kind()) {
    case Kind::TraceDistance: return trace_distance(a, b);
    case Kind::Renyi: return renyi_relative_entropy(a, b, measure.order(), tol);
    case Kind::Infidelity: return infidelity(a, b);
    case Kind::Perp: return is_perfectly_distinguishable(a, b, tol.perp) ? 1.0 : 0.0;
  }
  return 0.0;
}

}  // namespace qsl
