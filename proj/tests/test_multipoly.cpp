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
#include "doctest.h"
#include "tautint/multipoly.hpp"
#include "tautint/rational_function.hpp"

using tautint::Monomial;
using tautint::MultiPoly;
using tautint::Rational;
using tautint::RationalFunction;

namespace {
MultiPoly<Rational> var(const std::string& n) { return MultiPoly<Rational>::variable(n); }
std::string render(const MultiPoly<Rational>& p) {
    return p.to_string([](const Rational& c) { return c.to_string(); });
}
}  // namespace

TEST_CASE("multipoly arithmetic") {
    auto d = var("d");
    auto e = var("e");
    auto p = d * d - e * d + MultiPoly<Rational>::constant(Rational(3));
    CHECK(p.coeff(Monomial{{"d", 2}}) == Rational(1));
    CHECK(p.coeff(Monomial{{"d", 1}, {"e", 1}}) == Rational(-1));
    CHECK(p.coeff(Monomial{}) == Rational(3));
    CHECK(p.coeff(Monomial{{"e", 2}}) == Rational(0));
    CHECK((p - p).is_zero());
    CHECK((d + e) * (d - e) == d * d - e * e);
    CHECK(d.pow(0) == MultiPoly<Rational>::constant(Rational(1)));
    CHECK((d + e).pow(2) == d * d + Rational(2) * d * e + e * e);
}

TEST_CASE("multipoly cancellation never leaves zero terms") {
    auto d = var("d");
    auto q = d - d;
    CHECK(q.is_zero());
    CHECK(q.terms().empty());
    auto r = (d + MultiPoly<Rational>::constant(Rational(1))) *
             (d - MultiPoly<Rational>::constant(Rational(1)));
    CHECK(r.terms().size() == 2);  // d^2 - 1: no zero d-term stored
}

TEST_CASE("multipoly substitution and truncation") {
    auto y = var("y");
    auto q = var("q");
    auto p = y * q + q.pow(3);
    auto s = p.substitute("q", y + MultiPoly<Rational>::constant(Rational(1)));
    // y(y+1) + (y+1)^3 = y^3 + 4y^2 + 4y + 1
    auto expect = y.pow(3) + Rational(4) * y.pow(2) + Rational(4) * y +
                  MultiPoly<Rational>::constant(Rational(1));
    CHECK(s == expect);

    auto t = p.truncate_degree_in("q", 2);
    CHECK(t == y * q);
    CHECK(p.degree_in("q") == 3);
    CHECK(p.degree_in("y") == 1);
    CHECK(p.degree_in("zz") == 0);
}

TEST_CASE("multipoly printing is deterministic graded lex") {
    auto d = var("d");
    auto e = var("e");
    auto p = e * e + d + MultiPoly<Rational>::constant(Rational(-2)) + d * e;
    CHECK(render(p) == "(-2) + (1)*d + (1)*d*e + (1)*e^2");
    CHECK(render(MultiPoly<Rational>()) == "0");
}

TEST_CASE("multipoly over rational functions") {
    using P = MultiPoly<RationalFunction>;
    RationalFunction t = RationalFunction::variable();
    P y = P::variable("y");
    P p = y * t + P::constant(t * t);
    CHECK(p.coeff(Monomial{{"y", 1}}) == t);
    P zero = p - p;
    CHECK(zero.is_zero());
    P c = P::constant(t) * P::constant(t.inverse());
    CHECK(c.is_constant());
    CHECK(c.constant_value() == RationalFunction(Rational(1)));
}
