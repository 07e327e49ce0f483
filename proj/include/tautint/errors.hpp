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
#ifndef TAUTINT_ERRORS_HPP
#define TAUTINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tautint {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: bad arguments, unreadable fixture files, violated
/// fixture invariants. Maps to exit code 2 in the CLI.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Constant term of a series is not invertible in the coefficient ring.
class NonUnitConstant : public Error {
public:
    using Error::Error;
};

/// exp/log/pow/compose precondition on the constant term is violated.
class BadConstantTerm : public Error {
public:
    using Error::Error;
};

/// Series has no compositional inverse (nonzero constant term or
/// non-unit linear coefficient).
class NotReversible : public Error {
public:
    using Error::Error;
};

/// A rational function whose reduced denominator is not a monomial; a
/// localization sum that should have cancelled did not.
class NotLaurent : public Error {
public:
    using Error::Error;
};

/// Binary series operation on operands with different variable or order.
class SeriesMismatch : public Error {
public:
    using Error::Error;
};

/// Fixture with a zero cotangent weight reached a localization sum.
class DegenerateFixture : public Error {
public:
    using Error::Error;
};

/// A coefficient that must be constant in the equivariant parameter is not.
class EquivarianceLeak : public Error {
public:
    using Error::Error;
};

/// Negative bundle weight where the q-truncation would be unsound.
class NegativeWeightUnsupported : public Error {
public:
    using Error::Error;
};

} // namespace tautint

#endif
