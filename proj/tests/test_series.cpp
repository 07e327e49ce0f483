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
#include <random>

#include "doctest.h"
#include "tautint/binomial.hpp"
#include "tautint/series.hpp"

using tautint::binomial;
using tautint::compose;
using tautint::derivative_series;
using tautint::exp_series;
using tautint::factorial;
using tautint::log_series;
using tautint::make_series;
using tautint::MultiPoly;
using tautint::pow_scalar;
using tautint::QSeries;
using tautint::Rational;
using tautint::RationalFunction;
using tautint::reciprocal;
using tautint::reversion;
using tautint::TruncatedSeries;

namespace {
// Deterministic pseudo-random series for property tests.
QSeries random_series(std::mt19937& rng, int order, bool unit_c0, bool zero_c0) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    QSeries f("z", order);
    for (int i = 0; i <= order; ++i) f.set_coeff(i, Rational(num(rng), den(rng)));
    if (unit_c0) f.set_coeff(0, Rational(1));
    if (zero_c0) f.set_coeff(0, Rational(0));
    return f;
}
}  // namespace

TEST_CASE("series construction and access") {
    QSeries f("z", 3);
    CHECK(f.is_zero());
    f.set_coeff(2, Rational(5));
    CHECK(f.coeff(2) == Rational(5));
    CHECK(f.coeff(3) == Rational(0));
    CHECK_THROWS_AS(f.coeff(4), tautint::UsageError);
    CHECK_THROWS_AS(QSeries("z", -1), tautint::UsageError);
    CHECK(QSeries::identity("z", 4).coeff(1) == Rational(1));
    CHECK(QSeries::constant("z", 4, Rational(7)).coeff(0) == Rational(7));
}

TEST_CASE("series mismatch is an error, not a silent truncation") {
    QSeries a("z", 3), b("w", 3), c("z", 4);
    CHECK_THROWS_AS(a + b, tautint::SeriesMismatch);
    CHECK_THROWS_AS(a * c, tautint::SeriesMismatch);
    CHECK_THROWS_AS((void)(a == c), tautint::SeriesMismatch);
    CHECK_THROWS_AS(a.truncated(9), tautint::SeriesMismatch);
    CHECK(a.truncated(2).order() == 2);
    CHECK(b.with_var("z") == a);
}

TEST_CASE("geometric series reciprocal") {
    // 1/(1-z) = 1 + z + z^2 + ...
    auto one_minus_z = make_series("z", 8, {Rational(1), Rational(-1)});
    auto g = reciprocal(one_minus_z);
    for (int i = 0; i <= 8; ++i) CHECK(g.coeff(i) == Rational(1));
    CHECK((g * one_minus_z) == make_series("z", 8, {Rational(1)}));
    CHECK_THROWS_AS(reciprocal(QSeries("z", 3)), tautint::NonUnitConstant);
}

TEST_CASE("exponential and logarithm series") {
    QSeries z = QSeries::identity("z", 7);
    auto e = exp_series(z);
    for (int n = 0; n <= 7; ++n) CHECK(e.coeff(n) == factorial(n).inverse());
    auto l = log_series(make_series("z", 7, {Rational(1), Rational(1)}));  // log(1+z)
    for (int n = 1; n <= 7; ++n)
        CHECK(l.coeff(n) == Rational((n % 2 == 1) ? 1 : -1, n));
    CHECK_THROWS_AS(exp_series(e), tautint::BadConstantTerm);
    CHECK_THROWS_AS(log_series(z), tautint::BadConstantTerm);
    CHECK(exp_series(l) == make_series("z", 7, {Rational(1), Rational(1)}));
}

TEST_CASE("square root of 1-4z") {
    // (1-4z)^(1/2) = 1 - 2z - 2z^2 - 4z^3 - 10z^4 - 28z^5: coefficients are
    // -2 * Catalan(n-1) for n >= 1.
    auto f = make_series("z", 5, {Rational(1), Rational(-4)});
    auto s = pow_scalar(f, Rational(1, 2));
    CHECK(s == make_series("z", 5, {Rational(1), Rational(-2), Rational(-2), Rational(-4),
                                    Rational(-10), Rational(-28)}));
    CHECK(s * s == f);
}

TEST_CASE("binomial series matches generalized binomial coefficients") {
    auto one_plus_z = make_series("z", 6, {Rational(1), Rational(1)});
    for (long long a : {-3LL, -1LL, 2LL, 5LL}) {
        auto p = pow_scalar(one_plus_z, Rational(a));
        for (int n = 0; n <= 6; ++n) CHECK(p.coeff(n) == binomial(a, n));
    }
    // Rational exponent: (1+z)^(-1/2), coefficient of z^n is binomial(-1/2, n).
    auto h = pow_scalar(one_plus_z, Rational(-1, 2));
    CHECK(h.coeff(2) == Rational(3, 8));
    CHECK(h.coeff(3) == Rational(-5, 16));
}

TEST_CASE("integer pow_scalar agrees with repeated multiplication") {
    auto f = make_series("z", 6, {Rational(1), Rational(2), Rational(-1, 3)});
    auto p3 = pow_scalar(f, Rational(3));
    CHECK(p3 == f * f * f);
    auto pm2 = pow_scalar(f, Rational(-2));
    CHECK(pm2 == reciprocal(f * f));
}

TEST_CASE("composition is substitution") {
    // f = 1/(1-z), g = z + z^2: f(g) = 1 / (1 - z - z^2) = Fibonacci GF.
    auto f = reciprocal(make_series("z", 6, {Rational(1), Rational(-1)}));
    auto g = make_series("z", 6, {Rational(0), Rational(1), Rational(1)});
    auto fg = compose(f, g);
    Rational fib[9] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
    for (int n = 0; n <= 6; ++n) CHECK(fg.coeff(n) == fib[n]);
    CHECK_THROWS_AS(compose(f, f), tautint::BadConstantTerm);
    // Composition keeps the inner variable's name.
    auto gw = g.with_var("w");
    CHECK(compose(f, gw).var() == "w");
}

TEST_CASE("derivative drops one order of information") {
    auto f = make_series("z", 4, {Rational(7), Rational(1), Rational(3), Rational(0), Rational(2)});
    auto d = derivative_series(f);
    CHECK(d.coeff(0) == Rational(1));
    CHECK(d.coeff(1) == Rational(6));
    CHECK(d.coeff(2) == Rational(0));
    CHECK(d.coeff(3) == Rational(8));
    CHECK(d.coeff(4) == Rational(0));  // zero padding, not data
}

TEST_CASE("reversion of z - z^2 is the Catalan generating function") {
    auto f = make_series("z", 5, {Rational(0), Rational(1), Rational(-1)});
    auto g = reversion(f);
    CHECK(g == make_series("z", 5, {Rational(0), Rational(1), Rational(1), Rational(2),
                                    Rational(5), Rational(14)}));
    CHECK(compose(f, g) == QSeries::identity("z", 5));
    CHECK(compose(g, f) == QSeries::identity("z", 5));
}

TEST_CASE("reversion rejects non-invertible input") {
    CHECK_THROWS_AS(reversion(make_series("z", 4, {Rational(1), Rational(1)})),
                    tautint::NotReversible);
    CHECK_THROWS_AS(reversion(make_series("z", 4, {Rational(0), Rational(0), Rational(1)})),
                    tautint::NotReversible);
}

TEST_CASE("series ring properties on pseudo-random inputs") {
    std::mt19937 rng(20260824);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_series(rng, 9, false, false);
        auto b = random_series(rng, 9, false, false);
        auto c = random_series(rng, 9, false, false);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("analytic identities on pseudo-random inputs") {
    std::mt19937 rng(424242);
    QSeries one = QSeries::constant("z", 8, Rational(1));
    for (int trial = 0; trial < 10; ++trial) {
        auto u = random_series(rng, 8, true, false);   // constant term 1
        auto v = random_series(rng, 8, false, true);   // constant term 0
        CHECK(u * reciprocal(u) == one);
        CHECK(exp_series(log_series(u)) == u);
        CHECK(log_series(exp_series(v)) == v);
        // exp turns sums into products.
        auto w = random_series(rng, 8, false, true);
        CHECK(exp_series(v + w) == exp_series(v) * exp_series(w));
        // Reversion round trip whenever the linear coefficient is a unit.
        if (!v.coeff(1).is_zero()) {
            auto r = reversion(v);
            CHECK(compose(v, r) == QSeries::identity("z", 8));
            CHECK(compose(r, v) == QSeries::identity("z", 8));
        }
    }
}

TEST_CASE("series over the rational function field") {
    using RF = RationalFunction;
    RF t = RF::variable();
    RF one(Rational(1));
    TruncatedSeries<RF> f("x", 5);
    f.set_coeff(0, one);
    f.set_coeff(1, -t);
    auto g = reciprocal(f);  // 1/(1 - t x) = sum t^n x^n
    for (int n = 0; n <= 5; ++n) CHECK(g.coeff(n) == RF::power(n));
    auto lg = log_series(g);
    for (int n = 1; n <= 5; ++n)
        CHECK(lg.coeff(n) == RF::power(n) * RF(Rational(1, n)));  // -log(1-tx)
}

TEST_CASE("series over multivariate polynomials") {
    using P = MultiPoly<Rational>;
    P y = P::variable("y");
    TruncatedSeries<P> f("q", 4);
    f.set_coeff(0, P::constant(Rational(1)));
    f.set_coeff(1, -y);
    auto g = reciprocal(f);  // 1/(1 - y q) = sum y^n q^n
    for (int n = 0; n <= 4; ++n) CHECK(g.coeff(n) == y.pow(n));
    CHECK_THROWS_AS(reciprocal(TruncatedSeries<P>::constant("q", 3, y)),
                    tautint::NonUnitConstant);
}

TEST_CASE("series printing") {
    auto f = make_series("z", 3, {Rational(1), Rational(0), Rational(-1, 2)});
    CHECK(f.to_string() == "(1) + (-1/2)*z^2 + O(z^4)");
    CHECK(QSeries("z", 2).to_string() == "0 + O(z^3)");
}
