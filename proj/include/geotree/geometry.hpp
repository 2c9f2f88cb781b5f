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

// Threshold quantities, the odd-sided tessellation of the unit cube and the
// transit balls that route a subtree from the cube centre to its target cell.
//
// Logarithms are natural throughout. The radius ratio is base invariant but
// the epsilon expression (inner log n) is not.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geotree/error.hpp"

namespace geotree {

using CellIndex = std::int64_t;
inline constexpr CellIndex kNoCell = -1;

struct ThresholdParams {
  double n = 0;
  int d = 0;
  int delta = 0;
  double r_c = 0;
  double epsilon = 0;

  static ThresholdParams compute(double n, int d, int delta);
};

// sqrt(d) ln(delta - 1) / (2 ln n).
double critical_radius(double n, int d, int delta);

// 100 d ln(delta ln n) / ln n.
double epsilon_param(double n, int d, int delta);

// Admissible range for the cell diagonal sqrt(d)/s.
struct WidthRange {
  double lo = 0;
  double hi = 0;
  double midpoint() const { return 0.5 * (lo + hi); }
};

WidthRange cell_width_range(double r_c, double epsilon);

class TessellationInfeasible : public InfeasibleError {
 public:
  TessellationInfeasible(double s_min, double s_max);
  // Real-valued bounds on s implied by the width range.
  double s_min() const { return s_min_; }
  double s_max() const { return s_max_; }

 private:
  double s_min_;
  double s_max_;
};

// Odd s >= 3 with sqrt(d)/s in `range`, closest to the range midpoint; ties
// go to the smaller s. Throws TessellationInfeasible if none exists.
int choose_odd_s_in_range(int d, WidthRange range);
int choose_odd_s_for_radius(int d, double r_c, double epsilon);
int choose_odd_s(double n, int d, int delta, double epsilon);

struct Ball {
  std::vector<double> centre;
  double radius = 0;

  bool contains(std::span<const double> x) const;
};

// Squared Euclidean distance; every distance threshold in the library is
// evaluated as dist2(x, y) <= r * r so that all components agree on ties.
double dist2(std::span<const double> x, std::span<const double> y);
inline bool within(std::span<const double> x, std::span<const double> y,
                   double r) {
  return dist2(x, y) <= r * r;
}

// s^d closed cells of side 1/s, ordered by non-increasing distance of the
// cell centre from the cube centre. Equal distances are broken by ascending
// lexicographic grid coordinates, so the central cell is last.
class Tessellation {
 public:
  Tessellation(int d, int s);

  int dim() const { return d_; }
  int side() const { return s_; }
  double cell_side() const { return 1.0 / s_; }
  int eta() const { return (s_ + 3) / 4; }
  std::size_t cell_count() const { return cell_count_; }
  CellIndex central_cell() const { return central_; }

  // ordering()[p] is the cell at position p.
  std::span<const CellIndex> ordering() const { return ordering_; }
  std::size_t position(CellIndex c) const {
    return position_[static_cast<std::size_t>(c)];
  }
  // Adjacent successor; kNoCell for the central cell.
  CellIndex successor(CellIndex c) const {
    return successor_[static_cast<std::size_t>(c)];
  }

  std::vector<int> grid_coords(CellIndex c) const;
  CellIndex cell_at(std::span<const int> grid) const;
  std::vector<double> centre(CellIndex c) const;
  // Squared distance of the cell centre from the cube centre in units of
  // (1/s)^2; exact integer.
  std::int64_t centre_offset2(CellIndex c) const;

  // Grid index of x, coordinate-wise min(floor(x s), s - 1).
  CellIndex locate(std::span<const double> x) const;
  // Closed-box containment.
  bool contains(CellIndex c, std::span<const double> x) const;
  bool contains(CellIndex c, const Ball& ball) const;

 private:
  int d_;
  int s_;
  std::size_t cell_count_;
  CellIndex central_;
  std::vector<CellIndex> ordering_;
  std::vector<std::size_t> position_;
  std::vector<CellIndex> successor_;
};

Tessellation build_tessellation(int d, int s);

// Upper bound on the distance between a point of a cell and a point of its
// adjacent successor: sqrt(4 + (d - 1)) / s <= 2 sqrt(d) / s.
double successor_distance_bound(int d, int s);

struct TransitBalls {
  CellIndex target = kNoCell;
  CellIndex successor = kNoCell;
  // balls[j] for j = 0..eta, with host_cells[j] the cell containing it.
  std::vector<Ball> balls;
  std::vector<CellIndex> host_cells;
  double enclosing_radius = 0;
};

// Builds the eta + 1 balls for a non-central target cell and verifies the
// three routing properties against r (see check_transit_balls). Ball j sits
// inside the enclosing ball of radius epsilon / (10 s) around
// C + (j / eta)(c(nu) - C), centred on that segment when some cell allows it
// and otherwise at the nearest admissible point of a cell. Throws
// InfeasibleError when epsilon >= 5 or when a property fails at this r.
TransitBalls transit_balls(const Tessellation& tess, CellIndex target,
                           double epsilon, double r);

struct TransitCheck {
  bool later_cells = true;   // every ball lies in a cell after the target
  bool endpoints = true;     // first ball central, last in the successor
  bool consecutive = true;   // consecutive balls within distance r
  std::string detail;

  bool ok() const { return later_cells && endpoints && consecutive; }
};

TransitCheck check_transit_balls(const Tessellation& tess,
                                 const TransitBalls& balls, double r);

// Volume of the d-dimensional ball of radius `radius`.
double ball_volume(int d, double radius);

}  // namespace geotree
