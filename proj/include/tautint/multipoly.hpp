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
#ifndef TAUTINT_MULTIPOLY_HPP
#define TAUTINT_MULTIPOLY_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "tautint/rational.hpp"

namespace tautint {

/// Monomial: variable name -> positive exponent. Zero exponents are never
/// stored, so the empty map is the constant monomial 1.
using Monomial = std::map<std::string, int>;

inline int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

/// Graded lexicographic order: total degree first, then lexicographic on the
/// (name, exponent) sequence. Fixes term order for serialization.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = monomial_degree(a);
        const int db = monomial_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse multivariate polynomial with coefficients in a commutative
/// Q-algebra C (Rational for Q[d,e], Q[y]; RationalFunction for the
/// y-polynomials over Q(q) produced by the Lefschetz sums).
template <typename C>
class MultiPoly {
public:
    using TermMap = std::map<Monomial, C, GradedLexLess>;

    MultiPoly() = default;

    static MultiPoly constant(C c) {
        MultiPoly p;
        if (!(c == C())) p.t_.emplace(Monomial{}, std::move(c));
        return p;
    }
    static MultiPoly variable(const std::string& name, int exp = 1) {
        if (exp < 0) throw Error("MultiPoly::variable: negative exponent");
        if (exp == 0) return constant(C(Rational(1)));
        MultiPoly p;
        p.t_.emplace(Monomial{{name, exp}}, C(Rational(1)));
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
    }
    C constant_value() const {
        if (t_.empty()) return C();
        if (!is_constant()) throw Error("MultiPoly is not constant");
        return t_.begin()->second;
    }

    C coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? C() : it->second;
    }

    void add_term(const Monomial& m, const C& c) {
        if (c == C()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second == C()) t_.erase(it);
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        for (const auto& [ma, ca] : a.t_) {
            for (const auto& [mb, cb] : b.t_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb) {
                    int& x = m[v];
                    x += e;
                    if (x == 0) m.erase(v);
                }
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& operator*=(const C& s) {
        if (s == C()) {
            t_.clear();
            return *this;
        }
        TermMap out;
        for (const auto& [m, c] : t_) {
            C v = c * s;
            if (!(v == C())) out.emplace(m, std::move(v));
        }
        t_ = std::move(out);
        return *this;
    }
    friend MultiPoly operator*(MultiPoly a, const C& s) { return a *= s; }
    friend MultiPoly operator*(const C& s, MultiPoly a) { return a *= s; }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    int degree_in(const std::string& var) const {
        int d = 0;
        for (const auto& [m, c] : t_) {
            auto it = m.find(var);
            if (it != m.end() && it->second > d) d = it->second;
        }
        return d;
    }

    /// Drop every term whose exponent in var exceeds max_deg.
    MultiPoly truncate_degree_in(const std::string& var, int max_deg) const {
        MultiPoly out;
        for (const auto& [m, c] : t_) {
            auto it = m.find(var);
            if (it != m.end() && it->second > max_deg) continue;
            out.t_.emplace(m, c);
        }
        return out;
    }

    /// Substitute a polynomial for a variable.
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const {
        MultiPoly out;
        for (const auto& [m, c] : t_) {
            auto it = m.find(var);
            if (it == m.end()) {
                out.add_term(m, c);
                continue;
            }
            Monomial rest = m;
            const int e = it->second;
            rest.erase(var);
            MultiPoly term;
            term.t_.emplace(rest, c);
            MultiPoly p = value.pow(e);
            out += term * p;
        }
        return out;
    }

    MultiPoly pow(int e) const {
        if (e < 0) throw Error("MultiPoly::pow: negative exponent");
        MultiPoly base(*this);
        MultiPoly r = constant(C(Rational(1)));
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    const TermMap& terms() const { return t_; }

    /// Deterministic rendering in graded lexicographic term order; coefficient
    /// rendering is supplied by the caller.
    template <typename Printer>
    std::string to_string(Printer&& print_coeff) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << print_coeff(c) << ")";
            for (const auto& [v, e] : m) {
                os << "*" << v;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    TermMap t_;
};

} // namespace tautint

#endif
