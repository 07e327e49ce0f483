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
#include "tautint/binomial.hpp"

namespace tautint {

Rational binomial(long long m, long long k) {
    if (k < 0) throw UsageError("binomial: k must be nonnegative");
    Rational r(1);
    for (long long j = 0; j < k; ++j) {
        r *= Rational(m - j);
        r /= Rational(j + 1);
    }
    return r;
}

Rational factorial(long long k) {
    if (k < 0) throw UsageError("factorial: k must be nonnegative");
    Rational r(1);
    for (long long j = 2; j <= k; ++j) r *= Rational(j);
    return r;
}

} // namespace tautint
