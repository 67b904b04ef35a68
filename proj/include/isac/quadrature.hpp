// SPDX-License-Identifier: Apache-2.0
//
// isac-perf  Performance analysis toolkit for secure MIMO ISAC downlinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <functional>

namespace isac {

/// Adaptive Simpson on [a, b] with absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 48);

/// Integral over [0, inf): adaptive Simpson on doubling segments
/// [0,1], [1,2], [2,4], ... stopping once two consecutive segments
/// contribute less than tol/8 each. Returns the accumulated value.
double integrate_to_infinity(const std::function<double(double)>& f,
                             double tol);

}  // namespace isac
