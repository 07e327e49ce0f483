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
#include "tautint/laurent.hpp"
#include "tautint/rational_function.hpp"
#include "tautint/unipoly.hpp"

using tautint::LaurentPoly;
using tautint::Rational;
using tautint::RationalFunction;
using tautint::UniPoly;

TEST_CASE("unipoly normalization and degree") {
    UniPoly z;
    CHECK(z.degree() == -1);
    CHECK(z.is_zero());
    UniPoly p{Rational(1), Rational(0), Rational(0)};
    CHECK(p.degree() == 0);
    CHECK(p.is_constant());
    UniPoly q = UniPoly::monomial(Rational(3), 4);
    CHECK(q.degree() == 4);
    CHECK(q.coeff(4) == Rational(3));
    CHECK(q.coeff(2) == Rational(0));
    CHECK(q.coeff(100) == Rational(0));
}

TEST_CASE("unipoly ring arithmetic") {
    UniPoly a{Rational(1), Rational(2)};           // 1 + 2v
    UniPoly b{Rational(-1), Rational(0), Rational(1)};  // v^2 - 1
    CHECK((a + b) == UniPoly{Rational(0), Rational(2), Rational(1)});
    CHECK((a - a).is_zero());
    // (1 + 2v)(v^2 - 1) = -1 - 2v + v^2 + 2v^3
    CHECK((a * b) == UniPoly{Rational(-1), Rational(-2), Rational(1), Rational(2)});
    CHECK((-a) == UniPoly{Rational(-1), Rational(-2)});
    CHECK(a.pow(2) == UniPoly{Rational(1), Rational(4), Rational(4)});
    CHECK(a.pow(0).is_one());
    CHECK(b.eval(Rational(3)) == Rational(8));
    CHECK(b.derivative() == UniPoly{Rational(0), Rational(2)});
}

TEST_CASE("unipoly euclidean division and gcd") {
    UniPoly a{Rational(-1), Rational(0), Rational(0), Rational(1)};  // v^3 - 1
    UniPoly b{Rational(-1), Rational(1)};                            // v - 1
    UniPoly q, r;
    UniPoly::divmod(a, b, q, r);
    CHECK(r.is_zero());
    CHECK(q == UniPoly{Rational(1), Rational(1), Rational(1)});
    CHECK(q * b + r == a);

    UniPoly c{Rational(2), Rational(1)};  // v + 2
    UniPoly::divmod(a, c, q, r);
    CHECK(q * c + r == a);
    CHECK(r.degree() < c.degree());
    CHECK_THROWS_AS(UniPoly::divmod(a, UniPoly(), q, r), tautint::Error);

    // gcd(v^2 - 1, v^2 - 2v + 1) = v - 1 (monic).
    UniPoly g = UniPoly::gcd(UniPoly{Rational(-1), Rational(0), Rational(1)},
                             UniPoly{Rational(1), Rational(-2), Rational(1)});
    CHECK(g == UniPoly{Rational(-1), Rational(1)});
    CHECK(UniPoly::gcd(UniPoly(), b) == b.monic());
}

TEST_CASE("unipoly printing") {
    UniPoly p{Rational(-1, 2), Rational(0), Rational(3)};
    CHECK(p.to_string("t") == "3*t^2 - 1/2");
    CHECK(UniPoly().to_string("t") == "0");
    CHECK(UniPoly{Rational(0), Rational(1)}.to_string("q") == "q");
}

TEST_CASE("rational function canonical form") {
    UniPoly num{Rational(0), Rational(2)};                       // 2v
    UniPoly den{Rational(0), Rational(0), Rational(4)};          // 4v^2
    RationalFunction f(num, den);
    // Reduced and monic-denominator: 2v / 4v^2 = (1/2) / v.
    CHECK(f.num() == UniPoly::constant(Rational(1, 2)));
    CHECK(f.den() == UniPoly{Rational(0), Rational(1)});
    CHECK_THROWS_AS(RationalFunction(num, UniPoly()), tautint::Error);

    RationalFunction t = RationalFunction::variable();
    RationalFunction g = (t * t - RationalFunction(Rational(1))) / (t - RationalFunction(Rational(1)));
    CHECK(g == t + RationalFunction(Rational(1)));  // cancellation is automatic
}

TEST_CASE("rational function field arithmetic") {
    RationalFunction t = RationalFunction::variable();
    RationalFunction one(Rational(1));
    RationalFunction f = one / (one - t);
    RationalFunction g = one / (one + t);
    // 1/(1-t) + 1/(1+t) = 2/(1-t^2)
    CHECK(f + g == RationalFunction(Rational(2)) / (one - t * t));
    CHECK(f * g == one / (one - t * t));
    CHECK(f - f == RationalFunction());
    CHECK(f.inverse() == one - t);
    CHECK_THROWS_AS(RationalFunction().inverse(), tautint::Error);
    CHECK(RationalFunction::power(-2) * RationalFunction::power(2) == one);
    CHECK((t / t).is_one());
    CHECK(f.to_string("q") == "-1/(q - 1)");
}

TEST_CASE("rational function constant detection") {
    RationalFunction t = RationalFunction::variable();
    RationalFunction c = (t + t) / t;
    CHECK(c.is_constant());
    CHECK(c.constant_value() == Rational(2));
    CHECK_THROWS_AS(t.constant_value(), tautint::Error);
}

TEST_CASE("laurent expansion of rational functions") {
    RationalFunction t = RationalFunction::variable();
    RationalFunction one(Rational(1));
    // (t^2 + 3) / t = t + 3*t^{-1}.
    LaurentPoly l = LaurentPoly::from_rational_function((t * t + RationalFunction(Rational(3))) / t);
    CHECK(l.coeff(1) == Rational(1));
    CHECK(l.coeff(-1) == Rational(3));
    CHECK(l.coeff(0) == Rational(0));
    CHECK(l.min_exp() == -1);
    CHECK(l.max_exp() == 1);
    CHECK(l.eval_one() == Rational(4));
    // 1/(1-t) has no Laurent expansion at 0 with finitely many terms.
    CHECK_THROWS_AS(LaurentPoly::from_rational_function(one / (one - t)), tautint::NotLaurent);
    LaurentPoly z = LaurentPoly::from_rational_function(RationalFunction());
    CHECK(z.is_zero());
    CHECK(z.is_constant());
    CHECK_THROWS_AS(z.min_exp(), tautint::Error);
}

TEST_CASE("laurent add_term merges and cancels") {
    LaurentPoly l;
    l.add_term(-2, Rational(1, 2));
    l.add_term(-2, Rational(1, 2));
    l.add_term(3, Rational(5));
    l.add_term(3, Rational(-5));
    CHECK(l.coeff(-2) == Rational(1));
    CHECK(l.coeff(3) == Rational(0));
    CHECK(l.terms().size() == 1);
    CHECK(l.to_string("t") == "t^-2");
}
