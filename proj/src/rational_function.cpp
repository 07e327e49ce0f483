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
#include "tautint/rational_function.hpp"

namespace tautint {

RationalFunction::RationalFunction(UniPoly num)
    : num_(std::move(num)), den_(UniPoly::constant(Rational(1))) {}

RationalFunction::RationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    reduce();
}

RationalFunction RationalFunction::variable() {
    return RationalFunction(UniPoly::monomial(Rational(1), 1));
}

RationalFunction RationalFunction::power(int k) {
    if (k >= 0) return RationalFunction(UniPoly::monomial(Rational(1), k));
    return RationalFunction(UniPoly::constant(Rational(1)), UniPoly::monomial(Rational(1), -k));
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw Error("rational function is not constant");
    return num_.coeff(0);
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly::constant(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        UniPoly g = UniPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            UniPoly q, r;
            UniPoly::divmod(num_, g, q, r);
            num_ = std::move(q);
            UniPoly::divmod(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    const Rational lead = den_.leading();
    if (!lead.is_one()) {
        const Rational inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
        reduce();
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    if (den_.is_one() && o.den_.is_one()) return *this;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    return *this *= o.inverse();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error("rational function inverse of zero");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    const Rational lead = r.den_.leading();
    if (!lead.is_one()) {
        const Rational inv = lead.inverse();
        r.num_ *= inv;
        r.den_ *= inv;
    }
    return r;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    if (num_.degree() > 0) n = "(" + n + ")";
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace tautint
