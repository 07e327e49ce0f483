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
#ifndef TAUTINT_SERIES_HPP
#define TAUTINT_SERIES_HPP

#include <initializer_list>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "tautint/multipoly.hpp"
#include "tautint/rational.hpp"
#include "tautint/rational_function.hpp"

namespace tautint {

/// Glue between TruncatedSeries and its coefficient ring. A coefficient ring
/// R is a commutative Q-algebra with decidable equality: default-constructed
/// R is zero, and R supports +, -, *, unary - and ==. The traits add the
/// canonical map from Q and (partial) inversion.
template <typename R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational from_rational(const Rational& x) { return x; }
    static Rational invert(const Rational& x) {
        if (x.is_zero()) throw NonUnitConstant("zero is not a unit");
        return x.inverse();
    }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static std::string to_string(const Rational& x) { return x.to_string(); }
};

template <>
struct RingTraits<RationalFunction> {
    static RationalFunction from_rational(const Rational& x) { return RationalFunction(x); }
    static RationalFunction invert(const RationalFunction& x) {
        if (x.is_zero()) throw NonUnitConstant("zero is not a unit");
        return x.inverse();
    }
    static bool is_zero(const RationalFunction& x) { return x.is_zero(); }
    static std::string to_string(const RationalFunction& x) { return x.to_string("t"); }
};

template <typename C>
struct RingTraits<MultiPoly<C>> {
    static MultiPoly<C> from_rational(const Rational& x) {
        return MultiPoly<C>::constant(C(x));
    }
    static MultiPoly<C> invert(const MultiPoly<C>& x) {
        if (!x.is_constant() || x.is_zero())
            throw NonUnitConstant("polynomial is not a unit");
        return MultiPoly<C>::constant(RingTraits<C>::invert(x.constant_value()));
    }
    static bool is_zero(const MultiPoly<C>& x) { return x.is_zero(); }
    static std::string to_string(const MultiPoly<C>& x) {
        return x.to_string([](const C& c) { return RingTraits<C>::to_string(c); });
    }
};

/// Formal power series in one named variable, truncated at an explicit order
/// N: coefficients are kept for exponents 0..N and no operation ever claims
/// anything beyond N. Binary ring operations require identical variable and
/// order; mismatches throw SeriesMismatch instead of silently truncating.
template <typename R>
class TruncatedSeries {
public:
    TruncatedSeries(std::string var, int order)
        : var_(std::move(var)), order_(order), c_(static_cast<size_t>(order) + 1, R()) {
        if (order < 0) throw UsageError("series order must be nonnegative");
    }

    static TruncatedSeries constant(const std::string& var, int order, R c0) {
        TruncatedSeries s(var, order);
        s.c_[0] = std::move(c0);
        return s;
    }
    /// The series "z" itself.
    static TruncatedSeries identity(const std::string& var, int order) {
        TruncatedSeries s(var, order);
        if (order >= 1) s.c_[1] = RingTraits<R>::from_rational(Rational(1));
        return s;
    }

    const std::string& var() const { return var_; }
    int order() const { return order_; }

    const R& coeff(int n) const {
        check_index(n);
        return c_[static_cast<size_t>(n)];
    }
    void set_coeff(int n, R v) {
        check_index(n);
        c_[static_cast<size_t>(n)] = std::move(v);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_compatible(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_compatible(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_compatible(b);
        TruncatedSeries out(a.var_, a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (RingTraits<R>::is_zero(a.c_[static_cast<size_t>(i)])) continue;
            for (int j = 0; i + j <= a.order_; ++j)
                out.c_[static_cast<size_t>(i + j)] +=
                    a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
        return out;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    /// Coefficient-wise multiplication by a ring element.
    TruncatedSeries& operator*=(const R& s) {
        for (auto& c : c_) c = c * s;
        return *this;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const R& s) { return a *= s; }
    friend TruncatedSeries operator*(const R& s, TruncatedSeries a) { return a *= s; }

    TruncatedSeries& operator*=(const Rational& s)
        requires(!std::is_same_v<R, Rational>)
    {
        return *this *= RingTraits<R>::from_rational(s);
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_compatible(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!RingTraits<R>::is_zero(c)) return false;
        return true;
    }

    /// Explicit truncation to a lower order.
    TruncatedSeries truncated(int new_order) const {
        if (new_order > order_) throw SeriesMismatch("cannot extend a truncated series");
        TruncatedSeries out(var_, new_order);
        for (int i = 0; i <= new_order; ++i) out.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
        return out;
    }

    TruncatedSeries with_var(std::string var) const {
        TruncatedSeries out(*this);
        out.var_ = std::move(var);
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i <= order_; ++i) {
            const R& c = c_[static_cast<size_t>(i)];
            if (RingTraits<R>::is_zero(c)) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << RingTraits<R>::to_string(c) << ")";
            if (i >= 1) {
                os << "*" << var_;
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        os << " + O(" << var_ << "^" << order_ + 1 << ")";
        return os.str();
    }

private:
    void check_index(int n) const {
        if (n < 0 || n > order_)
            throw UsageError("series coefficient index out of range");
    }
    void check_compatible(const TruncatedSeries& o) const {
        if (var_ != o.var_)
            throw SeriesMismatch("series variables differ: " + var_ + " vs " + o.var_);
        if (order_ != o.order_)
            throw SeriesMismatch("series orders differ: " + std::to_string(order_) + " vs " +
                                 std::to_string(o.order_));
    }

    std::string var_;
    int order_;
    std::vector<R> c_;
};

/// 1/f to order N; requires a unit constant term.
template <typename R>
TruncatedSeries<R> reciprocal(const TruncatedSeries<R>& f) {
    const int n = f.order();
    TruncatedSeries<R> out(f.var(), n);
    R inv0 = RingTraits<R>::invert(f.coeff(0));
    out.set_coeff(0, inv0);
    for (int k = 1; k <= n; ++k) {
        R acc;
        for (int i = 1; i <= k; ++i) acc += f.coeff(i) * out.coeff(k - i);
        out.set_coeff(k, -(inv0 * acc));
    }
    return out;
}

/// exp(f) to order N; requires constant term 0.
template <typename R>
TruncatedSeries<R> exp_series(const TruncatedSeries<R>& f) {
    if (!RingTraits<R>::is_zero(f.coeff(0)))
        throw BadConstantTerm("exp requires constant term 0");
    const int n = f.order();
    TruncatedSeries<R> out(f.var(), n);
    out.set_coeff(0, RingTraits<R>::from_rational(Rational(1)));
    for (int k = 1; k <= n; ++k) {
        R acc;
        for (int i = 1; i <= k; ++i)
            acc += (f.coeff(i) * RingTraits<R>::from_rational(Rational(i))) * out.coeff(k - i);
        out.set_coeff(k, acc * RingTraits<R>::from_rational(Rational(1, k)));
    }
    return out;
}

/// log(f) to order N; requires constant term 1.
template <typename R>
TruncatedSeries<R> log_series(const TruncatedSeries<R>& f) {
    if (!(f.coeff(0) == RingTraits<R>::from_rational(Rational(1))))
        throw BadConstantTerm("log requires constant term 1");
    const int n = f.order();
    TruncatedSeries<R> out(f.var(), n);
    for (int k = 1; k <= n; ++k) {
        R acc;
        for (int i = 1; i < k; ++i)
            acc += (out.coeff(i) * RingTraits<R>::from_rational(Rational(i))) * f.coeff(k - i);
        out.set_coeff(k, f.coeff(k) - acc * RingTraits<R>::from_rational(Rational(1, k)));
    }
    return out;
}

/// f^alpha = exp(alpha*log f) for alpha in the coefficient ring; requires
/// constant term 1. Agrees with repeated multiplication for integer alpha.
template <typename R>
TruncatedSeries<R> pow_scalar(const TruncatedSeries<R>& f, const R& alpha) {
    TruncatedSeries<R> l = log_series(f);
    l *= alpha;
    return exp_series(l);
}

template <typename R>
    requires(!std::is_same_v<R, Rational>)
TruncatedSeries<R> pow_scalar(const TruncatedSeries<R>& f, const Rational& alpha) {
    return pow_scalar(f, RingTraits<R>::from_rational(alpha));
}

/// Formal derivative. The result is exact up to order N-1; index N is zero
/// padding so callers must not rely on it (reversion below never does).
template <typename R>
TruncatedSeries<R> derivative_series(const TruncatedSeries<R>& f) {
    TruncatedSeries<R> out(f.var(), f.order());
    for (int k = 1; k <= f.order(); ++k)
        out.set_coeff(k - 1, f.coeff(k) * RingTraits<R>::from_rational(Rational(k)));
    return out;
}

/// f(g(z)) to order N; requires g with constant term 0 and equal orders. The
/// variable of g wins (f's variable is the one being substituted away).
template <typename R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    if (f.order() != g.order())
        throw SeriesMismatch("compose requires equal orders");
    if (!RingTraits<R>::is_zero(g.coeff(0)))
        throw BadConstantTerm("compose requires inner constant term 0");
    const int n = f.order();
    TruncatedSeries<R> gz = g.var() == f.var() ? g : g.with_var(f.var());
    TruncatedSeries<R> out = TruncatedSeries<R>::constant(f.var(), n, f.coeff(n));
    for (int i = n - 1; i >= 0; --i) {
        out = out * gz;
        out.set_coeff(0, out.coeff(0) + f.coeff(i));
    }
    return out.with_var(g.var());
}

/// Compositional inverse: returns g with f(g(z)) = z and g(f(k)) = k to
/// order N. Requires constant term 0 and a unit linear coefficient. Newton
/// iteration, doubling the correct order each pass.
template <typename R>
TruncatedSeries<R> reversion(const TruncatedSeries<R>& f) {
    if (!RingTraits<R>::is_zero(f.coeff(0)))
        throw NotReversible("reversion requires constant term 0");
    const int n = f.order();
    if (n < 1) throw NotReversible("reversion requires order >= 1");
    R lin_inv;
    try {
        lin_inv = RingTraits<R>::invert(f.coeff(1));
    } catch (const NonUnitConstant&) {
        throw NotReversible("reversion requires a unit linear coefficient");
    }
    TruncatedSeries<R> id = TruncatedSeries<R>::identity(f.var(), n);
    TruncatedSeries<R> g(f.var(), n);
    g.set_coeff(1, lin_inv);
    TruncatedSeries<R> fprime = derivative_series(f);
    // Doubles the number of correct coefficients per pass.
    for (int pass = 0; pass <= n + 1; ++pass) {
        TruncatedSeries<R> residual = compose(f, g) - id;
        if (residual.is_zero()) return g;
        g -= residual * reciprocal(compose(fprime, g));
    }
    throw NotReversible("reversion did not converge");
}

using QSeries = TruncatedSeries<Rational>;

/// Series with the given coefficients c0, c1, ... (padded with zeros).
inline QSeries make_series(const std::string& var, int order,
                           std::initializer_list<Rational> coeffs) {
    QSeries s(var, order);
    int i = 0;
    for (const auto& c : coeffs) {
        if (i > order) break;
        s.set_coeff(i++, c);
    }
    return s;
}

} // namespace tautint

#endif
