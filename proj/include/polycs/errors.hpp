/*
   Copyright 2026 The polycs authors

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

#ifndef POLYCS_ERRORS_HPP
#define POLYCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polycs {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact arithmetic
struct RationalOverflow : Error {
    explicit RationalOverflow(const std::string& what) : Error(what) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// algebra
struct DegreeLimitExceeded : Error {
    explicit DegreeLimitExceeded(const std::string& what) : Error(what) {}
};

// representation spaces
struct NonUnitaryError : Error {
    NonUnitaryError(const std::string& what, int level) : Error(what), level(level) {}
    int level;
};
struct PoleOnSpectrum : Error {
    PoleOnSpectrum(const std::string& what, int level) : Error(what), level(level) {}
    int level;
};

// coherent states
struct CutoffExceeded : Error {
    explicit CutoffExceeded(const std::string& what) : Error(what) {}
};
struct ModuleMismatch : Error {
    explicit ModuleMismatch(const std::string& what) : Error(what) {}
};
struct NotGammaForm : Error {
    explicit NotGammaForm(const std::string& what) : Error(what) {}
};

// realizations
struct EmptySector : Error {
    explicit EmptySector(const std::string& what) : Error(what) {}
};
struct NotDiagonal : Error {
    explicit NotDiagonal(const std::string& what) : Error(what) {}
};
struct NoPolynomialFit : Error {
    explicit NoPolynomialFit(const std::string& what) : Error(what) {}
};
struct OrbitLeavesCutoff : Error {
    explicit OrbitLeavesCutoff(const std::string& what) : Error(what) {}
};

// special functions and quadrature
struct PoleAtNonpositiveInteger : Error {
    explicit PoleAtNonpositiveInteger(const std::string& what) : Error(what) {}
};
struct BParameterPole : Error {
    explicit BParameterPole(const std::string& what) : Error(what) {}
};
struct QuadratureNotConverged : Error {
    explicit QuadratureNotConverged(const std::string& what) : Error(what) {}
};
struct DomainViolation : Error {
    explicit DomainViolation(const std::string& what) : Error(what) {}
};

}  // namespace polycs

#endif
