// Copyright 2026 The bidrec Authors
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

#include "bidrec/dists.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bidrec {

namespace {

constexpr double kBisectTol = 1e-9;
constexpr int kQuadPointsPerSegment = 1000;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

BidModel::BidModel(std::vector<std::vector<Breakpoint>> cdfs, double lipschitz)
    : cdfs_(std::move(cdfs)), lipschitz_(lipschitz) {
  require(!cdfs_.empty(), "BidModel needs at least one bidder");
  for (const auto& pts : cdfs_) {
    require(pts.size() >= 2, "each CDF needs at least two breakpoints");
  }
}

const std::vector<Breakpoint>& BidModel::breakpoints(int bidder) const {
  require(bidder >= 1 && bidder <= bidder_count(), "bidder id out of range");
  return cdfs_[static_cast<std::size_t>(bidder - 1)];
}

BidModel BidModel::uniform(int n) {
  require(n >= 1, "need n >= 1");
  std::vector<std::vector<Breakpoint>> cdfs(static_cast<std::size_t>(n),
                                            {{0.0, 0.0}, {1.0, 1.0}});
  return BidModel(std::move(cdfs), 1.0);
}

ValidationReport validate(const BidModel& model) {
  ValidationReport report;
  auto add = [&](int bidder, std::string what) {
    report.violations.push_back({bidder, std::move(what)});
  };
  for (int i = 1; i <= model.bidder_count(); ++i) {
    const auto& pts = model.breakpoints(i);
    const auto& lo = pts.front();
    const auto& hi = pts.back();
    if (lo.value != 0.0 || lo.cum != 0.0 || hi.value != 1.0 || hi.cum != 1.0) {
      add(i, "endpoint mismatch: breakpoints must start at (0,0) and end at (1,1)");
      continue;
    }
    bool bad = false;
    for (std::size_t k = 1; k < pts.size() && !bad; ++k) {
      const double dx = pts[k].value - pts[k - 1].value;
      const double dF = pts[k].cum - pts[k - 1].cum;
      if (dx < 0.0) {
        add(i, "breakpoints not in ascending x order");
        bad = true;
      } else if (dF < 0.0) {
        std::ostringstream os;
        os << "decreasing CDF at " << pts[k].value;
        add(i, os.str());
        bad = true;
      } else if (dx == 0.0 && dF > 0.0) {
        std::ostringstream os;
        os << "jump at " << pts[k].value;
        add(i, os.str());
        bad = true;
      } else if (dx > 0.0 && dF / dx > model.lipschitz() * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "slope " << dF / dx << " > L at [" << pts[k - 1].value << ","
           << pts[k].value << "]";
        add(i, os.str());
        bad = true;
      }
    }
  }
  return report;
}

double cdf_eval(const BidModel& model, int bidder, double x) {
  require(x >= 0.0 && x <= 1.0, "x out of [0,1]");
  const auto& pts = model.breakpoints(bidder);
  auto it = std::upper_bound(pts.begin(), pts.end(), x,
                             [](double v, const Breakpoint& p) { return v < p.value; });
  if (it == pts.begin()) return pts.front().cum;
  if (it == pts.end()) return pts.back().cum;
  const Breakpoint& a = *(it - 1);
  const Breakpoint& b = *it;
  if (b.value == a.value) return b.cum;
  const double t = (x - a.value) / (b.value - a.value);
  return a.cum + t * (b.cum - a.cum);
}

double sample_bid(const BidModel& model, int bidder, double u) {
  require(u >= 0.0 && u <= 1.0, "u out of [0,1]");
  const auto& pts = model.breakpoints(bidder);
  // inf of the preimage: first segment whose upper cumulative reaches u
  auto it = std::lower_bound(pts.begin(), pts.end(), u,
                             [](const Breakpoint& p, double v) { return p.cum < v; });
  if (it == pts.begin()) return pts.front().value;
  if (it == pts.end()) return pts.back().value;
  const Breakpoint& a = *(it - 1);
  const Breakpoint& b = *it;
  if (b.cum == a.cum) return a.value;
  const double t = (u - a.cum) / (b.cum - a.cum);
  return a.value + t * (b.value - a.value);
}

double max_cdf(const BidModel& model, std::span<const int> subset, double x) {
  require(!subset.empty(), "subset must be non-empty");
  double out = 1.0;
  for (int j : subset) out *= cdf_eval(model, j, x);
  return out;
}

namespace {

double all_cdf(const BidModel& model, double x) {
  double out = 1.0;
  for (int j = 1; j <= model.bidder_count(); ++j) out *= cdf_eval(model, j, x);
  return out;
}

// Merged breakpoint x-values of every bidder, restricted to [a,b].
std::vector<double> joint_grid(const BidModel& model, double a, double b) {
  std::set<double> xs{a, b};
  for (int j = 1; j <= model.bidder_count(); ++j) {
    for (const auto& p : model.breakpoints(j)) {
      if (p.value > a && p.value < b) xs.insert(p.value);
    }
  }
  return {xs.begin(), xs.end()};
}

// Composite Simpson of f over [lo,hi] with kQuadPointsPerSegment subintervals.
template <typename F>
double simpson(F&& f, double lo, double hi) {
  const int n = kQuadPointsPerSegment;  // even
  const double h = (hi - lo) / n;
  double acc = f(lo) + f(hi);
  for (int k = 1; k < n; ++k) acc += f(lo + k * h) * (k % 2 == 1 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace

double p_gamma(const BidModel& model, double gamma) {
  require(gamma > 0.0 && gamma <= 1.0, "gamma out of (0,1]");
  double lo = 0.0, hi = 1.0;
  while (hi - lo > kBisectTol) {
    const double mid = 0.5 * (lo + hi);
    if (all_cdf(model, mid) >= gamma) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double exact_conditional_win(const BidModel& model, int bidder, double a, double b) {
  require(a >= 0.0 && a < b && b <= 1.0, "need 0 <= a < b <= 1");
  const auto& pts = model.breakpoints(bidder);  // also checks the id
  (void)pts;
  const double denom = all_cdf(model, b);
  if (denom <= 0.0) {
    throw std::domain_error("conditioning event P[max <= b] has zero probability");
  }
  const auto grid = joint_grid(model, a, b);
  double num = 0.0;
  for (std::size_t s = 0; s + 1 < grid.size(); ++s) {
    const double lo = grid[s], hi = grid[s + 1];
    if (hi <= lo) continue;
    // density of bidder i is constant on the segment
    const double fi = (cdf_eval(model, bidder, hi) - cdf_eval(model, bidder, lo)) / (hi - lo);
    if (fi == 0.0) continue;
    auto others = [&](double x) {
      double out = 1.0;
      for (int j = 1; j <= model.bidder_count(); ++j) {
        if (j != bidder) out *= cdf_eval(model, j, x);
      }
      return out;
    };
    num += fi * simpson(others, lo, hi);
  }
  return num / denom;
}

double exact_max_mean(const BidModel& model) {
  const auto grid = joint_grid(model, 0.0, 1.0);
  double mean = 0.0;
  for (std::size_t s = 0; s + 1 < grid.size(); ++s) {
    const double lo = grid[s], hi = grid[s + 1];
    if (hi <= lo) continue;
    mean += simpson([&](double x) { return 1.0 - all_cdf(model, x); }, lo, hi);
  }
  return mean;
}

}  // namespace bidrec
