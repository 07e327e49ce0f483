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
#include "tautint/laurent.hpp"

#include <sstream>

namespace tautint {

LaurentPoly LaurentPoly::from_rational_function(const RationalFunction& f) {
    const UniPoly& den = f.den();
    const int k = den.degree();
    // Reduced and monic, so a monomial denominator is exactly v^k.
    for (int i = 0; i < k; ++i) {
        if (!den.coeff(i).is_zero())
            throw NotLaurent("denominator is not a monomial: " + den.to_string("v"));
    }
    LaurentPoly out;
    const UniPoly& num = f.num();
    for (int i = 0; i <= num.degree(); ++i) out.add_term(i - k, num.coeff(i));
    return out;
}

void LaurentPoly::add_term(int exp, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw Error("min_exp of zero Laurent polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw Error("max_exp of zero Laurent polynomial");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::eval_one() const {
    Rational r(0);
    for (const auto& [e, c] : terms_) r += c;
    return r;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational abs = c.sign() < 0 ? -c : c;
        if (e == 0 || !abs.is_one()) os << abs.to_string();
        if (e != 0) {
            if (!abs.is_one()) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace tautint
