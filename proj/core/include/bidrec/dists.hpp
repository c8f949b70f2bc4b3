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

#ifndef BIDREC_DISTS_HPP
#define BIDREC_DISTS_HPP

#include <span>
#include <string>
#include <vector>

namespace bidrec {

struct Breakpoint {
  double value = 0.0;  // x in [0,1]
  double cum = 0.0;    // F(x) in [0,1]
};

// Ground-truth valuation distributions: one continuous piecewise-linear CDF
// per bidder on [0,1], plus a declared Lipschitz bound on every slope.
// Immutable after construction; all queries are pure.
class BidModel {
 public:
  BidModel(std::vector<std::vector<Breakpoint>> cdfs, double lipschitz);

  int bidder_count() const { return static_cast<int>(cdfs_.size()); }
  double lipschitz() const { return lipschitz_; }

  // Bidders are 1-based throughout (0 is the reserve bidder).
  const std::vector<Breakpoint>& breakpoints(int bidder) const;

  static BidModel uniform(int n);

 private:
  std::vector<std::vector<Breakpoint>> cdfs_;
  double lipschitz_;
};

struct ModelViolation {
  int bidder = 0;  // 0 when not bidder-specific
  std::string what;
};

struct ValidationReport {
  std::vector<ModelViolation> violations;
  bool ok() const { return violations.empty(); }
  const ModelViolation& first() const { return violations.front(); }
};

// Checks every BidModel invariant: endpoints (0,0)/(1,1), monotone and
// continuous cumulative values (duplicate x with differing F encodes a point
// mass and is rejected), and every segment slope <= the declared bound.
ValidationReport validate(const BidModel& model);

// F_i(x) by linear interpolation; exact at breakpoints.
double cdf_eval(const BidModel& model, int bidder, double x);

// Inverse-CDF transform of a uniform draw u in [0,1]. Flat CDF segments map
// to the left edge of their preimage, so the function is deterministic.
double sample_bid(const BidModel& model, int bidder, double u);

// prod_{j in subset} F_j(x), exact. Subset holds 1-based ids, non-empty.
double max_cdf(const BidModel& model, std::span<const int> subset, double x);

// inf { p : prod_j F_j(p) >= gamma }, bisection to 1e-9.
double p_gamma(const BidModel& model, double gamma);

// P[b_i in [a,b] and b_i > max_{j != i} b_j] / P[max_j b_j <= b], by
// composite quadrature over the joint breakpoint grid.
double exact_conditional_win(const BidModel& model, int bidder, double a, double b);

// E[max_j b_j] = int_0^1 (1 - prod_j F_j) dx, same quadrature machinery.
double exact_max_mean(const BidModel& model);

}  // namespace bidrec

#endif  // BIDREC_DISTS_HPP
