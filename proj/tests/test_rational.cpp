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
#include <sstream>

#include "doctest.h"
#include "tautint/binomial.hpp"
#include "tautint/rational.hpp"

using tautint::binomial;
using tautint::factorial;
using tautint::Rational;

TEST_CASE("rational construction and canonical form") {
    CHECK(Rational().is_zero());
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational(-3, 6).to_string() == "-1/2");
    CHECK(Rational(4, -6).to_string() == "-2/3");
    CHECK(Rational(0, 5) == Rational());
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(10, 5).is_integer());
    CHECK_FALSE(Rational(1, 3).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), tautint::Error);
}

TEST_CASE("rational string parsing round trip") {
    CHECK(Rational("22/7") == Rational(22, 7));
    CHECK(Rational("-5") == Rational(-5));
    CHECK(Rational("6/4") == Rational(3, 2));
    CHECK(Rational("0") == Rational());
    CHECK_THROWS_AS(Rational("abc"), tautint::UsageError);
    CHECK_THROWS_AS(Rational("1/0"), tautint::UsageError);
    CHECK_THROWS_AS(Rational(""), tautint::UsageError);
    for (const char* s : {"3/8", "-11", "101/13"}) {
        CHECK(Rational(s).to_string() == s);
    }
}

TEST_CASE("rational field arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(a.inverse() == Rational(2));
    CHECK_THROWS_AS(Rational().inverse(), tautint::Error);
    CHECK_THROWS_AS(a / Rational(), tautint::Error);
    CHECK(a < b * Rational(2));
    CHECK(Rational(-1) < Rational());
    CHECK(Rational(3, 2).sign() == 1);
    CHECK(Rational(-3, 2).sign() == -1);
}

TEST_CASE("rational pow handles negative exponents and big values") {
    CHECK(Rational(2).pow(10) == Rational(1024));
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK(Rational(-1).pow(5) == Rational(-1));
    CHECK(Rational(5, 3).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational().pow(-1), tautint::Error);
    // 2^100: must not overflow any machine word.
    CHECK(Rational(2).pow(100).to_string() == "1267650600228229401496703205376");
    CHECK(Rational(2).pow(100) * Rational(2).pow(-100) == Rational(1));
}

TEST_CASE("rational stream output matches to_string") {
    std::ostringstream os;
    os << Rational(-7, 2);
    CHECK(os.str() == "-7/2");
    CHECK(Rational(-7, 2).numerator_string() == "-7");
    CHECK(Rational(-7, 2).denominator_string() == "2");
}

TEST_CASE("generalized binomial coefficients") {
    // Integer arguments agree with Pascal's triangle.
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(5, 0) == Rational(1));
    CHECK(binomial(5, 5) == Rational(1));
    CHECK(binomial(4, 7) == Rational(0));
    // Negative upper index: binomial(-n, k) = (-1)^k binomial(n+k-1, k).
    CHECK(binomial(-1, 3) == Rational(-1));
    CHECK(binomial(-2, 2) == Rational(3));
    CHECK(binomial(-7, 2) == Rational(28));
    CHECK_THROWS_AS(binomial(3, -1), tautint::UsageError);
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(6) == Rational(720));
}

TEST_CASE("vandermonde convolution spot check") {
    // sum_k C(m,k) C(n,p-k) = C(m+n,p) for m=3, n=4, p=5.
    Rational sum;
    for (long long k = 0; k <= 5; ++k) sum += binomial(3, k) * binomial(4, 5 - k);
    CHECK(sum == binomial(7, 5));
}
