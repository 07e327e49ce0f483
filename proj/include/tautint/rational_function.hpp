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
#ifndef TAUTINT_RATIONAL_FUNCTION_HPP
#define TAUTINT_RATIONAL_FUNCTION_HPP

#include <string>

#include "tautint/unipoly.hpp"

namespace tautint {

/// Reduced quotient of univariate polynomials over Rational. The normal form
/// is canonical: gcd(num, den) = 1 and the denominator is monic, so equal
/// values have identical representations and operator== is structural.
///
/// The variable is not part of the value; it only names the indeterminate at
/// print time (the equivariant parameter t and the character variable q share
/// this type).
class RationalFunction {
public:
    RationalFunction() : den_(UniPoly::constant(Rational(1))) {}
    RationalFunction(Rational c)  // NOLINT(google-explicit-constructor)
        : num_(UniPoly::constant(std::move(c))), den_(UniPoly::constant(Rational(1))) {}
    explicit RationalFunction(UniPoly num);
    RationalFunction(UniPoly num, UniPoly den);

    /// The indeterminate v itself.
    static RationalFunction variable();
    /// v^k; negative k gives 1/v^|k|.
    static RationalFunction power(int k);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    /// Value of a constant rational function; throws if not constant.
    Rational constant_value() const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Multiplicative inverse; throws Error on zero.
    RationalFunction inverse() const;

    std::string to_string(const std::string& var) const;

private:
    void reduce();
    UniPoly num_;
    UniPoly den_;
};

} // namespace tautint

#endif
