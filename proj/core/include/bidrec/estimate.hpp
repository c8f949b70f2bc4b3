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

#ifndef BIDREC_ESTIMATE_HPP
#define BIDREC_ESTIMATE_HPP

#include <cstddef>
#include <vector>

namespace bidrec {

// Adaptive partition 0 = l_1 < ... < l_k = 1 of the price space. The bottom
// interval [l_1, l_2] is the region the observations cannot resolve.
struct Lattice {
  std::vector<double> points;
  // Accepted inside() estimate per interval [points[j], points[j+1]],
  // j >= 1; entry 0 (the bottom interval) is not estimated.
  std::vector<double> inside_mass;

  std::size_t size() const { return points.size(); }
};

// Step-function CDF estimate over a lattice. values are aligned to
// lattice.points; values.front() carries down values[1] (below valid_from the
// estimate is uninformative), values.back() == 1.
struct CdfEstimate {
  int bidder = 0;
  Lattice lattice;
  std::vector<double> values;
  double valid_from = 0.0;

  // max over lattice points <= x, i.e. the running-max step evaluation.
  double eval(double x) const;
};

}  // namespace bidrec

#endif  // BIDREC_ESTIMATE_HPP
