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

#include "bidrec/estimate.hpp"

#include <algorithm>

namespace bidrec {

double CdfEstimate::eval(double x) const {
  const auto& pts = lattice.points;
  auto it = std::upper_bound(pts.begin(), pts.end(), x);
  if (it == pts.begin()) return values.front();
  const std::size_t idx = static_cast<std::size_t>(it - pts.begin()) - 1;
  // values are monotone after clamping, so the floor point is the max
  return values[idx];
}

}  // namespace bidrec
