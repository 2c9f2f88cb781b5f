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


#pragma once

#include <cstddef>
#include <span>

namespace geotree {

struct Interval {
  double lo = 0;
  double hi = 1;
};

// Wilson score interval for a binomial proportion at the given two-sided
// confidence level.
Interval wilson_interval(std::size_t successes, std::size_t trials,
                         double confidence = 0.95);

// True unless some earlier interval lies entirely above a later one.
bool statistically_non_decreasing(std::span<const Interval> intervals);

// Pearson statistic sum (o - e)^2 / e.
double chi_square_statistic(std::span<const std::size_t> observed,
                            std::span<const double> expected);

// Upper-tail critical value of the chi-square law with `dof` degrees of
// freedom at significance `alpha`.
double chi_square_critical(double dof, double alpha);

}  // namespace geotree
