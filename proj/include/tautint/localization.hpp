/*
   Copyright 2026 The tautint authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#ifndef TAUTINT_LOCALIZATION_HPP
#define TAUTINT_LOCALIZATION_HPP

#include <vector>

#include "tautint/fixture.hpp"
#include "tautint/multipoly.hpp"
#include "tautint/rational_function.hpp"
#include "tautint/series.hpp"

namespace tautint {

/// Torus fixed point of the Hilbert scheme of n points on a curve with l
/// fixed points: a composition (n_1, ..., n_l) of n into l ordered
/// nonnegative parts (n_i points stacked at the i-th fixed point).
using HilbFixedPoint = std::vector<int>;

/// All compositions of n into l nonnegative parts, lexicographically ordered
/// with the first part descending first: (n,0,..), (n-1,1,..), ...
/// Count is binomial(n+l-1, l-1).
std::vector<HilbFixedPoint> enumerate_fixed_points(int n, int l);

/// Additive tangent weights of the Hilbert scheme at a fixed point:
/// { -s*c_i : 1 <= s <= n_i } where c_i is the cotangent weight of the
/// curve at point i. Exactly n entries.
std::vector<int> tangent_weights(const HilbFixedPoint& fp, const CurveFixture& fixture);

/// Additive weights of the fiber of the tautological bundle at a fixed
/// point: { a_{j,i} + s*c_i : 0 <= s <= n_i - 1 } over all summands j and
/// points i. Exactly rank*n entries.
std::vector<int> taut_weights(const HilbFixedPoint& fp, const CurveFixture& fixture);

/// Which multiplicative class of the tautological bundle is integrated.
enum class ClassMode { chern, segre };

/// Equivariant integral over the Hilbert scheme of n points of the total
/// Chern (or Segre) class of the tautological bundle, graded by the
/// bookkeeping variable x: the weight-w Chern root contributes a factor
/// (1 + x*w*t) (Chern) or its reciprocal (Segre) at each fixed point, and
/// each fixed-point term is divided by the product of its tangent weights
/// times t. sign = -1 swaps the Chern and Segre factors (the class of the
/// virtual negative of the bundle).
///
/// Returns a series in x over Q(t) up to x_order (default: n, the geometric
/// grading bound; larger orders expose the full rational function of the
/// Lemma-style identities). The nonequivariant integral of the degree-n part
/// is the x^n coefficient.
TruncatedSeries<RationalFunction> equivariant_class_integral(
    const CurveFixture& fixture, int n, ClassMode mode, int sign, int x_order = -1);

/// Nonequivariant Chern (or Segre) number: the x^n coefficient of the
/// equivariant integral, which for a compact fixture must be a constant in
/// t. Throws EquivarianceLeak when it is a nonconstant Laurent polynomial
/// and NotLaurent when the fixed-point sum fails to clear its denominator.
Rational chern_number(const CurveFixture& fixture, int n, ClassMode mode);

/// General equivariant integrand of the universal-series machinery: each
/// fixed point contributes the product of phi(w*t)/(w*t) over its tangent
/// weights w times the product of psi(w*t) over its tautological weights,
/// with psi and phi evaluated as polynomials (their truncations). Returns
/// the exact fixed-point sum in Q(t).
RationalFunction equivariant_psi_phi_integral(const CurveFixture& fixture, int n,
                                              const QSeries& psi, const QSeries& phi);

/// Holomorphic-Lefschetz equivariant Euler characteristic of the exterior
/// power sum: sum over fixed points of
///   prod_{i, 0<=s<n_i} (1 - y q^{a_i + s c_i}) / prod_{i, 1<=s<=n_i} (1 - q^{s c_i}),
/// a polynomial in y with coefficients in Q(q), truncated at y-degree
/// y_degree. Requires a rank-1 fixture.
MultiPoly<RationalFunction> equivariant_euler_characteristic(const CurveFixture& fixture,
                                                             int n, int y_degree);

/// One affine chart's contribution to the generating series of equivariant
/// Chern integrals: sum_n z^n prod_{s=1..n} [prod_j (1 + (a_j + (s-1)c)t)] /
/// (-s*c*t), a series in z over Q(t). The product of these over the charts
/// of a fixture equals its full generating series (fixed points of the
/// Hilbert scheme factor through the charts).
TruncatedSeries<RationalFunction> affine_chart_chern_series(const std::vector<int>& weights,
                                                            int c, int order);

} // namespace tautint

#endif
