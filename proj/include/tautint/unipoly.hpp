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
#ifndef TAUTINT_UNIPOLY_HPP
#define TAUTINT_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "tautint/rational.hpp"

namespace tautint {

/// Dense univariate polynomial over Rational. No trailing zero coefficients
/// are stored; the zero polynomial has degree -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static UniPoly constant(Rational c);
    static UniPoly monomial(Rational coeff, int exp);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of v^i (zero beyond the degree).
    const Rational& coeff(int i) const;
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    /// Monic gcd; gcd(0, 0) = 0.
    static UniPoly gcd(UniPoly a, UniPoly b);

    UniPoly monic() const;
    UniPoly derivative() const;
    UniPoly pow(int e) const;
    Rational eval(const Rational& x) const;

    std::string to_string(const std::string& var) const;

private:
    void normalize();
    std::vector<Rational> c_;
};

} // namespace tautint

#endif
