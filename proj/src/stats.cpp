// Copyright 2026 The geotree Authors
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


#include "geotree/stats.hpp"

#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "geotree/error.hpp"

namespace geotree {

Interval wilson_interval(std::size_t successes, std::size_t trials,
                         double confidence) {
  if (trials == 0) return {0.0, 1.0};
  const double z = boost::math::quantile(
      boost::math::complement(boost::math::normal(), (1.0 - confidence) / 2.0));
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half =
      z / (1 + z2 / n) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

bool statistically_non_decreasing(std::span<const Interval> intervals) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    for (std::size_t j = i + 1; j < intervals.size(); ++j) {
      if (intervals[i].lo > intervals[j].hi) return false;
    }
  }
  return true;
}

double chi_square_statistic(std::span<const std::size_t> observed,
                            std::span<const double> expected) {
  if (observed.size() != expected.size()) {
    throw PreconditionError("observed and expected sizes differ");
  }
  double acc = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double diff = static_cast<double>(observed[i]) - expected[i];
    acc += diff * diff / expected[i];
  }
  return acc;
}

double chi_square_critical(double dof, double alpha) {
  return boost::math::quantile(
      boost::math::complement(boost::math::chi_squared(dof), alpha));
}

}  // namespace geotree
