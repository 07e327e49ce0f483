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
#ifndef TAUTINT_RATIONAL_HPP
#define TAUTINT_RATIONAL_HPP

#include <gmp.h>
#include <iosfwd>
#include <string>

#include "tautint/errors.hpp"

namespace tautint {

/// Arbitrary-precision rational number, the exact ground field for every
/// computation in this library.
///
/// Wraps GMP's \c mpq_t. Values are always canonical: gcd(num, den) = 1 and
/// den > 0, so equality is structural and serialization ("p/q", or "p" when
/// the denominator is 1) is unique per value.
class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long long n);                       // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    explicit Rational(const std::string& text);  // parses "p" or "p/q"

    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_, b.v_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(v_), 1) == 0; }
    int sign() const { return mpq_sgn(v_); }

    /// Multiplicative inverse; throws Error on zero.
    Rational inverse() const;
    /// Integer power, negative exponents allowed (throws Error on 0^-k).
    Rational pow(long long e) const;

    /// Canonical form "p/q" with q > 0 and gcd(p, q) = 1; "p" when q = 1.
    std::string to_string() const;
    std::string numerator_string() const;
    std::string denominator_string() const;
    double to_double() const { return mpq_get_d(v_); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_t v_;
};

} // namespace tautint

#endif
