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
#include "tautint/localization.hpp"

#include <string>

#include "tautint/errors.hpp"
#include "tautint/laurent.hpp"

namespace tautint {

namespace {

void compositions(int n, int l, HilbFixedPoint& prefix, std::vector<HilbFixedPoint>& out) {
    if (l == 1) {
        prefix.push_back(n);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int k = n; k >= 0; --k) {
        prefix.push_back(k);
        compositions(n - k, l - 1, prefix, out);
        prefix.pop_back();
    }
}

// f evaluated at w*t, as a polynomial in t (the series is treated as its
// truncation).
RationalFunction eval_series_at_weight(const QSeries& f, int w) {
    std::vector<Rational> coeffs;
    Rational p(1);
    const Rational rw(w);
    for (int k = 0; k <= f.order(); ++k) {
        coeffs.push_back(f.coeff(k) * p);
        p *= rw;
    }
    return RationalFunction(UniPoly(std::move(coeffs)));
}

} // namespace

std::vector<HilbFixedPoint> enumerate_fixed_points(int n, int l) {
    if (n < 0 || l < 1) throw UsageError("enumerate_fixed_points: need n >= 0, l >= 1");
    std::vector<HilbFixedPoint> out;
    HilbFixedPoint prefix;
    compositions(n, l, prefix, out);
    return out;
}

std::vector<int> tangent_weights(const HilbFixedPoint& fp, const CurveFixture& fixture) {
    if (fp.size() != fixture.points.size())
        throw UsageError("fixed point and fixture have different numbers of parts");
    std::vector<int> w;
    for (size_t i = 0; i < fp.size(); ++i) {
        const int c = fixture.points[i].cotangent_weight;
        for (int s = 1; s <= fp[i]; ++s) w.push_back(-s * c);
    }
    return w;
}

std::vector<int> taut_weights(const HilbFixedPoint& fp, const CurveFixture& fixture) {
    if (fp.size() != fixture.points.size())
        throw UsageError("fixed point and fixture have different numbers of parts");
    std::vector<int> w;
    for (size_t i = 0; i < fp.size(); ++i) {
        const int c = fixture.points[i].cotangent_weight;
        for (int a : fixture.points[i].bundle_weights)
            for (int s = 0; s < fp[i]; ++s) w.push_back(a + s * c);
    }
    return w;
}

TruncatedSeries<RationalFunction> equivariant_class_integral(const CurveFixture& fixture, int n,
                                                             ClassMode mode, int sign,
                                                             int x_order) {
    fixture.validate();
    if (n < 0) throw UsageError("number of points must be nonnegative");
    if (sign != 1 && sign != -1) throw UsageError("sign must be +1 or -1");
    if (x_order < 0) x_order = n;
    const bool segre_factor = (mode == ClassMode::segre) != (sign == -1);
    const RationalFunction t = RationalFunction::variable();
    const RationalFunction one(Rational(1));

    TruncatedSeries<RationalFunction> total("x", x_order);
    for (const auto& fp : enumerate_fixed_points(n, fixture.num_points())) {
        // Class factor: product over Chern roots of (1 + x*w*t), or its
        // reciprocal on the Segre side.
        TruncatedSeries<RationalFunction> num =
            TruncatedSeries<RationalFunction>::constant("x", x_order, one);
        for (int w : taut_weights(fp, fixture)) {
            TruncatedSeries<RationalFunction> lin("x", x_order);
            lin.set_coeff(0, one);
            if (x_order >= 1) lin.set_coeff(1, t * RationalFunction(Rational(w)));
            num *= lin;
        }
        if (segre_factor) num = reciprocal(num);
        // Equivariant Euler class of the tangent space: product of w*t.
        Rational weight_prod(1);
        for (int w : tangent_weights(fp, fixture)) {
            if (w == 0) throw DegenerateFixture("zero tangent weight");
            weight_prod *= Rational(w);
        }
        RationalFunction euler_inv =
            RationalFunction::power(-n) * RationalFunction(weight_prod.inverse());
        total += num * euler_inv;
    }
    return total;
}

Rational chern_number(const CurveFixture& fixture, int n, ClassMode mode) {
    if (!fixture.compact)
        throw DegenerateFixture("chern_number requires a compact fixture");
    auto series = equivariant_class_integral(fixture, n, mode, 1);
    const RationalFunction& top = series.coeff(n);
    LaurentPoly l = LaurentPoly::from_rational_function(top);
    if (!l.is_constant())
        throw EquivarianceLeak("x^" + std::to_string(n) +
                               " coefficient is not constant in t: " + l.to_string("t"));
    return l.constant_term();
}

RationalFunction equivariant_psi_phi_integral(const CurveFixture& fixture, int n,
                                              const QSeries& psi, const QSeries& phi) {
    fixture.validate();
    if (n < 0) throw UsageError("number of points must be nonnegative");
    const RationalFunction t = RationalFunction::variable();
    RationalFunction sum;
    for (const auto& fp : enumerate_fixed_points(n, fixture.num_points())) {
        RationalFunction term(Rational(1));
        for (int w : tangent_weights(fp, fixture)) {
            if (w == 0) throw DegenerateFixture("zero tangent weight");
            term *= eval_series_at_weight(phi, w) / (t * RationalFunction(Rational(w)));
        }
        for (int w : taut_weights(fp, fixture)) term *= eval_series_at_weight(psi, w);
        sum += term;
    }
    return sum;
}

MultiPoly<RationalFunction> equivariant_euler_characteristic(const CurveFixture& fixture, int n,
                                                             int y_degree) {
    fixture.validate();
    if (fixture.rank() != 1)
        throw UsageError("equivariant_euler_characteristic requires a rank-1 fixture");
    if (n < 0) throw UsageError("number of points must be nonnegative");
    using P = MultiPoly<RationalFunction>;
    const RationalFunction one(Rational(1));
    const P y = P::variable("y");

    P sum;
    for (const auto& fp : enumerate_fixed_points(n, fixture.num_points())) {
        P num = P::constant(one);
        RationalFunction den(Rational(1));
        for (size_t i = 0; i < fp.size(); ++i) {
            const int c = fixture.points[i].cotangent_weight;
            const int a = fixture.points[i].bundle_weights[0];
            for (int s = 0; s < fp[i]; ++s)
                num *= P::constant(one) - y * P::constant(RationalFunction::power(a + s * c));
            for (int s = 1; s <= fp[i]; ++s) den *= one - RationalFunction::power(s * c);
        }
        sum += num * P::constant(den.inverse());
    }
    return sum.truncate_degree_in("y", y_degree);
}

TruncatedSeries<RationalFunction> affine_chart_chern_series(const std::vector<int>& weights,
                                                            int c, int order) {
    if (c == 0) throw DegenerateFixture("zero cotangent weight");
    if (order < 0) throw UsageError("series order must be nonnegative");
    const RationalFunction t = RationalFunction::variable();
    const RationalFunction one(Rational(1));
    TruncatedSeries<RationalFunction> out("z", order);
    RationalFunction term(Rational(1));
    out.set_coeff(0, term);
    for (int s = 1; s <= order; ++s) {
        RationalFunction step(Rational(1));
        for (int a : weights) step *= one + t * RationalFunction(Rational(a + (s - 1) * c));
        step /= t * RationalFunction(Rational(-s * c));
        term *= step;
        out.set_coeff(s, term);
    }
    return out;
}

} // namespace tautint
