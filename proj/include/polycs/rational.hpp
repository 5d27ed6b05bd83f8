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

#ifndef POLYCS_RATIONAL_HPP
#define POLYCS_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "polycs/errors.hpp"

namespace polycs {

using int128 = __int128;

/// Exact rational scalar on 128-bit integers. Always stored reduced with a
/// positive denominator; every arithmetic operation checks for overflow and
/// throws RationalOverflow instead of returning a wrong value.
class Rational {
   public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n, long long d);
    static Rational from_int128(int128 n, int128 d);

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_nonneg_integer() const { return den_ == 1 && num_ >= 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const;

    /// "p/q", or just "p" for integers.
    std::string str() const;
    /// Accepts "p", "-p", "p/q" with optional sign on the numerator.
    static Rational parse(const std::string& text);

    /// Stable 64-bit digest, used for module fingerprints.
    std::uint64_t hash() const;

   private:
    Rational(int128 n, int128 d, bool reduced);
    void normalize();
    int128 num_, den_;
};

std::string int128_str(int128 v);

}  // namespace polycs

#endif
