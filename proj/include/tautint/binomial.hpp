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
#ifndef TAUTINT_BINOMIAL_HPP
#define TAUTINT_BINOMIAL_HPP

#include "tautint/rational.hpp"

namespace tautint {

/// Generalized binomial coefficient m(m-1)...(m-k+1) / k! for any integer m
/// (negative tops allowed) and k >= 0. The result is an integer by
/// construction, returned as an exact Rational with denominator 1.
Rational binomial(long long m, long long k);

/// k! as an exact integer.
Rational factorial(long long k);

} // namespace tautint

#endif
