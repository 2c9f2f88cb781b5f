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


#include "geotree/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace geotree {

namespace {

void check_threshold_inputs(double n, int d, int delta) {
  if (delta < 3) {
    throw PreconditionError("degenerate degree: delta must be >= 3");
  }
  if (!(n >= 3)) {
    throw PreconditionError("n too small: n must be >= 3");
  }
  if (d < 1) {
    throw PreconditionError("dimension must be >= 1");
  }
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

ThresholdParams ThresholdParams::compute(double n, int d, int delta) {
  return {n, d, delta, critical_radius(n, d, delta), epsilon_param(n, d, delta)};
}

double critical_radius(double n, int d, int delta) {
  check_threshold_inputs(n, d, delta);
  return std::sqrt(static_cast<double>(d)) * std::log(delta - 1.0) /
         (2.0 * std::log(n));
}

double epsilon_param(double n, int d, int delta) {
  check_threshold_inputs(n, d, delta);
  const double ln_n = std::log(n);
  return 100.0 * d * std::log(delta * ln_n) / ln_n;
}

WidthRange cell_width_range(double r_c, double epsilon) {
  return {(1.0 + epsilon / 2.0) * r_c / 3.0,
          (1.0 + 2.0 * epsilon / 3.0) * r_c / 2.0};
}

TessellationInfeasible::TessellationInfeasible(double s_min, double s_max)
    : InfeasibleError("tessellation infeasible: no odd s >= 3 in [" +
                      format_double(s_min) + ", " + format_double(s_max) +
                      "]"),
      s_min_(s_min),
      s_max_(s_max) {}

int choose_odd_s_in_range(int d, WidthRange range) {
  if (d < 1 || !(range.lo > 0) || !(range.hi >= range.lo)) {
    throw PreconditionError("invalid width range");
  }
  const double root_d = std::sqrt(static_cast<double>(d));
  const double s_min = root_d / range.hi;
  const double s_max = root_d / range.lo;
  // Relative slack absorbs the rounding in root_d / (root_d / s).
  constexpr double kSlack = 1e-9;
  const double first = std::ceil(s_min * (1.0 - kSlack));
  const double last = std::floor(s_max * (1.0 + kSlack));
  if (last > 1e9) {
    throw PreconditionError("width range too small: s would exceed 1e9");
  }
  const double mid = range.midpoint();
  int best = -1;
  double best_gap = 0;
  for (auto s = static_cast<long>(std::max(first, 3.0));
       s <= static_cast<long>(last); ++s) {
    if (s % 2 == 0) continue;
    const double gap = std::abs(root_d / static_cast<double>(s) - mid);
    if (best < 0 || gap < best_gap) {
      best = static_cast<int>(s);
      best_gap = gap;
    }
  }
  if (best < 0) throw TessellationInfeasible(s_min, s_max);
  return best;
}

int choose_odd_s_for_radius(int d, double r_c, double epsilon) {
  if (!(epsilon > 0)) throw PreconditionError("epsilon must be positive");
  if (!(r_c > 0)) throw PreconditionError("r_c must be positive");
  return choose_odd_s_in_range(d, cell_width_range(r_c, epsilon));
}

int choose_odd_s(double n, int d, int delta, double epsilon) {
  return choose_odd_s_for_radius(d, critical_radius(n, d, delta), epsilon);
}

double dist2(std::span<const double> x, std::span<const double> y) {
  double acc = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double diff = x[k] - y[k];
    acc += diff * diff;
  }
  return acc;
}

bool Ball::contains(std::span<const double> x) const {
  return within(x, centre, radius);
}

Tessellation::Tessellation(int d, int s) : d_(d), s_(s) {
  if (d < 1) throw PreconditionError("dimension must be >= 1");
  if (s < 3 || s % 2 == 0) {
    throw PreconditionError("tessellation side count must be odd and >= 3");
  }
  double cells = std::pow(static_cast<double>(s), d);
  if (cells > 1e8) throw PreconditionError("tessellation too large (> 1e8 cells)");
  cell_count_ = static_cast<std::size_t>(std::llround(cells));

  std::vector<std::int64_t> offset2(cell_count_);
  for (std::size_t c = 0; c < cell_count_; ++c) {
    offset2[c] = centre_offset2(static_cast<CellIndex>(c));
  }
  ordering_.resize(cell_count_);
  std::iota(ordering_.begin(), ordering_.end(), CellIndex{0});
  std::stable_sort(ordering_.begin(), ordering_.end(),
                   [&](CellIndex a, CellIndex b) {
                     return offset2[static_cast<std::size_t>(a)] >
                            offset2[static_cast<std::size_t>(b)];
                   });
  position_.resize(cell_count_);
  for (std::size_t p = 0; p < cell_count_; ++p) {
    position_[static_cast<std::size_t>(ordering_[p])] = p;
  }
  central_ = ordering_.back();

  const int half = (s - 1) / 2;
  successor_.assign(cell_count_, kNoCell);
  for (std::size_t c = 0; c < cell_count_; ++c) {
    auto g = grid_coords(static_cast<CellIndex>(c));
    for (int k = 0; k < d; ++k) {
      if (g[k] != half) {
        g[k] += g[k] < half ? 1 : -1;
        successor_[c] = cell_at(g);
        break;
      }
    }
  }
}

std::vector<int> Tessellation::grid_coords(CellIndex c) const {
  std::vector<int> g(static_cast<std::size_t>(d_));
  for (int k = d_ - 1; k >= 0; --k) {
    g[static_cast<std::size_t>(k)] = static_cast<int>(c % s_);
    c /= s_;
  }
  return g;
}

CellIndex Tessellation::cell_at(std::span<const int> grid) const {
  CellIndex c = 0;
  for (int g : grid) c = c * s_ + g;
  return c;
}

std::vector<double> Tessellation::centre(CellIndex c) const {
  auto g = grid_coords(c);
  std::vector<double> x(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    x[k] = (g[k] + 0.5) / s_;
  }
  return x;
}

std::int64_t Tessellation::centre_offset2(CellIndex c) const {
  const int half = (s_ - 1) / 2;
  std::int64_t acc = 0;
  for (int g : grid_coords(c)) {
    const std::int64_t o = g - half;
    acc += o * o;
  }
  return acc;
}

CellIndex Tessellation::locate(std::span<const double> x) const {
  CellIndex c = 0;
  for (double v : x) {
    auto g = static_cast<CellIndex>(std::floor(v * s_));
    g = std::clamp<CellIndex>(g, 0, s_ - 1);
    c = c * s_ + g;
  }
  return c;
}

bool Tessellation::contains(CellIndex c, std::span<const double> x) const {
  auto g = grid_coords(c);
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (x[k] < static_cast<double>(g[k]) / s_ ||
        x[k] > static_cast<double>(g[k] + 1) / s_) {
      return false;
    }
  }
  return true;
}

bool Tessellation::contains(CellIndex c, const Ball& ball) const {
  auto g = grid_coords(c);
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (ball.centre[k] - ball.radius < static_cast<double>(g[k]) / s_ ||
        ball.centre[k] + ball.radius > static_cast<double>(g[k] + 1) / s_) {
      return false;
    }
  }
  return true;
}

Tessellation build_tessellation(int d, int s) { return Tessellation(d, s); }

double successor_distance_bound(int d, int s) {
  return std::sqrt(4.0 + (d - 1.0)) / s;
}

namespace {

// Ball of radius rho centred on the segment e + t u, |t| <= t_max, inside
// cell c; picks the admissible t closest to zero. Returns false if none.
bool fit_on_segment(const Tessellation& tess, CellIndex c,
                    std::span<const double> e, std::span<const double> u,
                    double t_lo, double t_hi, double rho,
                    std::vector<double>& out) {
  const auto g = tess.grid_coords(c);
  const double side = tess.cell_side();
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double lo = g[k] * side + rho;
    const double hi = (g[k] + 1) * side - rho;
    if (lo > hi) return false;
    if (u[k] == 0.0) {
      if (e[k] < lo || e[k] > hi) return false;
      continue;
    }
    double a = (lo - e[k]) / u[k];
    double b = (hi - e[k]) / u[k];
    if (a > b) std::swap(a, b);
    t_lo = std::max(t_lo, a);
    t_hi = std::min(t_hi, b);
  }
  if (t_lo > t_hi) return false;
  const double t = std::clamp(0.0, t_lo, t_hi);
  out.resize(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) out[k] = e[k] + t * u[k];
  // Recheck after rounding.
  return tess.contains(c, Ball{out, rho});
}

// Ball of radius rho inside cell c whose centre is the point of the cell's
// inner box nearest to e, accepted if that centre is within `reach` of e.
bool fit_nearest(const Tessellation& tess, CellIndex c,
                 std::span<const double> e, double rho, double reach,
                 std::vector<double>& out) {
  const auto g = tess.grid_coords(c);
  const double side = tess.cell_side();
  out.resize(e.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double lo = g[k] * side + rho;
    const double hi = (g[k] + 1) * side - rho;
    if (lo > hi) return false;
    out[k] = std::clamp(e[k], lo, hi);
  }
  if (dist2(out, e) > reach * reach) return false;
  return tess.contains(c, Ball{out, rho});
}

}  // namespace

TransitBalls transit_balls(const Tessellation& tess, CellIndex target,
                           double epsilon, double r) {
  if (target < 0 || static_cast<std::size_t>(target) >= tess.cell_count()) {
    throw PreconditionError("target cell out of range");
  }
  if (target == tess.central_cell()) {
    throw PreconditionError("transit balls are undefined for the central cell");
  }
  if (!(epsilon > 0)) throw PreconditionError("epsilon must be positive");
  if (!(epsilon < 5.0)) {
    throw InfeasibleError(
        "ball construction infeasible at this epsilon; use epsilon override");
  }
  const int d = tess.dim();
  const int s = tess.side();
  const int eta = tess.eta();
  const double big_r = epsilon / (10.0 * s);
  const double rho = std::ldexp(big_r, -d);

  TransitBalls out;
  out.target = target;
  out.successor = tess.successor(target);
  out.enclosing_radius = big_r;

  const std::vector<double> mid(static_cast<std::size_t>(d), 0.5);
  const std::vector<double> goal = tess.centre(out.successor);
  std::vector<double> dir(static_cast<std::size_t>(d));
  double length = 0;
  for (int k = 0; k < d; ++k) {
    dir[k] = goal[k] - mid[k];
    length += dir[k] * dir[k];
  }
  length = std::sqrt(length);
  if (length > 0) {
    for (double& v : dir) v /= length;
  }

  for (int j = 0; j <= eta; ++j) {
    const double frac = static_cast<double>(j) / eta;
    std::vector<double> e(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) e[k] = mid[k] + frac * (goal[k] - mid[k]);

    // Cells meeting the enclosing ball; big_r < 1/(2s) keeps them within
    // one step of the cell holding e.
    const auto base = tess.grid_coords(tess.locate(e));
    std::vector<std::pair<double, CellIndex>> candidates;
    const std::size_t combos = static_cast<std::size_t>(std::pow(3, d));
    std::vector<int> g(static_cast<std::size_t>(d));
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t rest = code;
      bool inside = true;
      for (int k = d - 1; k >= 0; --k) {
        g[k] = base[k] + static_cast<int>(rest % 3) - 1;
        rest /= 3;
        if (g[k] < 0 || g[k] >= s) inside = false;
      }
      if (!inside) continue;
      const CellIndex c = tess.cell_at(g);
      double gap2 = 0;
      for (int k = 0; k < d; ++k) {
        const double lo = static_cast<double>(g[k]) / s;
        const double hi = static_cast<double>(g[k] + 1) / s;
        const double q = std::clamp(e[k], lo, hi);
        gap2 += (q - e[k]) * (q - e[k]);
      }
      if (gap2 > big_r * big_r) continue;
      candidates.emplace_back(dist2(tess.centre(c), e), c);
    }
    // Cell index order is lexicographic grid order.
    std::sort(candidates.begin(), candidates.end());

    const double reach = big_r - rho;
    const double t_lo = length > 0 ? std::max(-reach, -frac * length) : 0.0;
    const double t_hi = length > 0 ? std::min(reach, (1.0 - frac) * length) : 0.0;
    bool placed = false;
    std::vector<double> centre;
    for (const auto& [gap, c] : candidates) {
      if (fit_on_segment(tess, c, e, dir, t_lo, t_hi, rho, centre)) {
        out.balls.push_back(Ball{centre, rho});
        out.host_cells.push_back(c);
        placed = true;
        break;
      }
    }
    // Off the segment: the point of the inner box of c nearest to e. Some
    // cell meeting the enclosing ball always admits one within R - rho.
    for (std::size_t i = 0; !placed && i < candidates.size(); ++i) {
      const CellIndex c = candidates[i].second;
      if (fit_nearest(tess, c, e, rho, reach * (1 + 1e-9), centre)) {
        out.balls.push_back(Ball{centre, rho});
        out.host_cells.push_back(c);
        placed = true;
      }
    }
    if (!placed) {
      throw InfeasibleError("no cell admits transit ball " + std::to_string(j) +
                            " for target cell " + std::to_string(target));
    }
  }

  const TransitCheck check = check_transit_balls(tess, out, r);
  if (!check.ok()) {
    throw InfeasibleError("transit balls violate routing properties: " +
                          check.detail);
  }
  return out;
}

TransitCheck check_transit_balls(const Tessellation& tess,
                                 const TransitBalls& balls, double r) {
  TransitCheck check;
  std::ostringstream detail;
  const std::size_t target_pos = tess.position(balls.target);
  for (std::size_t j = 0; j < balls.balls.size(); ++j) {
    const CellIndex host = balls.host_cells[j];
    if (!tess.contains(host, balls.balls[j]) ||
        tess.position(host) <= target_pos) {
      check.later_cells = false;
      detail << "ball " << j << " not inside a later cell; ";
    }
  }
  if (balls.balls.empty() || balls.host_cells.front() != tess.central_cell() ||
      balls.host_cells.back() != balls.successor ||
      !tess.contains(tess.central_cell(), balls.balls.front()) ||
      !tess.contains(balls.successor, balls.balls.back())) {
    check.endpoints = false;
    detail << "first/last ball not in central/successor cell; ";
  }
  for (std::size_t j = 0; j + 1 < balls.balls.size(); ++j) {
    const auto& a = balls.balls[j];
    const auto& b = balls.balls[j + 1];
    const double reach =
        std::sqrt(dist2(a.centre, b.centre)) + a.radius + b.radius;
    if (reach > r) {
      check.consecutive = false;
      detail << "balls " << j << "," << j + 1 << " span " << reach << " > r="
             << r << "; ";
    }
  }
  check.detail = detail.str();
  return check;
}

double ball_volume(int d, double radius) {
  const double half = d / 2.0;
  return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0) *
         std::pow(radius, d);
}

}  // namespace geotree
