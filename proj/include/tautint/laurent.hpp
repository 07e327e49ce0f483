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
#ifndef TAUTINT_LAURENT_HPP
#define TAUTINT_LAURENT_HPP

#include <map>
#include <string>

#include "tautint/rational.hpp"
#include "tautint/rational_function.hpp"

namespace tautint {

/// Laurent polynomial in one variable: finitely many terms with integer
/// (possibly negative) exponents. Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    /// Exact Laurent expansion of a reduced rational function. Succeeds iff
    /// the reduced denominator is a power of the variable; otherwise throws
    /// NotLaurent (the telltale of a localization sum that failed to cancel).
    static LaurentPoly from_rational_function(const RationalFunction& f);

    void add_term(int exp, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    Rational coeff(int exp) const;
    Rational constant_term() const { return coeff(0); }

    int min_exp() const;
    int max_exp() const;

    /// Substitute 1 for the variable (sum of all coefficients).
    Rational eval_one() const;

    const std::map<int, Rational>& terms() const { return terms_; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var) const;

private:
    std::map<int, Rational> terms_;
};

} // namespace tautint

#endif
