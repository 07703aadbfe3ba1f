// Copyright 2026 The Bribelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BRIBE_QUADRATURE_HPP_
#define BRIBE_QUADRATURE_HPP_

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace bribe {

// Adaptive 7/15-point Gauss-Kronrod. Returns 0 for empty or reversed ranges.
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-10) {
  if (!(b > a)) return 0.0;
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, /*max_depth=*/20, tol, &error);
}

}  // namespace bribe

#endif  // BRIBE_QUADRATURE_HPP_
