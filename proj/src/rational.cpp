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
#include "tautint/rational.hpp"

#include <cstdlib>
#include <ostream>

namespace tautint {

Rational::Rational(long long n) {
    mpq_init(v_);
    mpz_set_si(mpq_numref(v_), n);
}

Rational::Rational(long long num, long long den) {
    mpq_init(v_);
    if (den == 0) {
        mpq_clear(v_);
        throw Error("rational with zero denominator");
    }
    mpz_set_si(mpq_numref(v_), num);
    mpz_set_si(mpq_denref(v_), den);
    mpq_canonicalize(v_);
}

Rational::Rational(const std::string& text) {
    mpq_init(v_);
    if (text.empty() || mpq_set_str(v_, text.c_str(), 10) != 0) {
        mpq_clear(v_);
        throw UsageError("cannot parse rational: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(v_)) == 0) {
        mpq_clear(v_);
        throw UsageError("rational with zero denominator: '" + text + "'");
    }
    mpq_canonicalize(v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    mpq_div(v_, v_, o.v_);
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("rational inverse of zero");
    Rational r;
    mpq_inv(r.v_, v_);
    return r;
}

Rational Rational::pow(long long e) const {
    Rational base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : e;
    Rational r(1);
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

std::string Rational::to_string() const {
    char* s = mpq_get_str(nullptr, 10, v_);
    std::string out(s);
    std::free(s);
    return out;
}

std::string Rational::numerator_string() const {
    char* s = mpz_get_str(nullptr, 10, mpq_numref(v_));
    std::string out(s);
    std::free(s);
    return out;
}

std::string Rational::denominator_string() const {
    char* s = mpz_get_str(nullptr, 10, mpq_denref(v_));
    std::string out(s);
    std::free(s);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace tautint
