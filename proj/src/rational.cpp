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

#include "polycs/rational.hpp"

#include <cstdlib>

namespace polycs {

namespace {

int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw RationalOverflow("rational addition overflow");
    return r;
}

int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw RationalOverflow("rational multiplication overflow");
    return r;
}

int128 iabs(int128 v) { return v < 0 ? -v : v; }

int128 gcd128(int128 a, int128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw Error("rational with zero denominator");
    normalize();
}

Rational::Rational(int128 n, int128 d, bool reduced) : num_(n), den_(d) {
    if (!reduced) normalize();
}

Rational Rational::from_int128(int128 n, int128 d) {
    if (d == 0) throw Error("rational with zero denominator");
    return Rational(n, d, false);
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    int128 g = gcd128(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator-() const { return Rational(-num_, den_, true); }

Rational& Rational::operator+=(const Rational& o) {
    // a/b + c/d with b,d > 0; reduce via g = gcd(b, d) first.
    int128 g = gcd128(den_, o.den_);
    int128 bd = den_ / g;
    int128 od = o.den_ / g;
    int128 n = checked_add(checked_mul(num_, od), checked_mul(o.num_, bd));
    int128 d = checked_mul(den_, od);
    num_ = n;
    den_ = d;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    int128 g1 = gcd128(num_, o.den_);
    int128 g2 = gcd128(o.num_, den_);
    num_ = checked_mul(num_ / g1, o.num_ / g2);
    den_ = checked_mul(den_ / g2, o.den_ / g1);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error("rational division by zero");
    Rational inv(o.den_, o.num_, false);
    return *this *= inv;
}

bool operator<(const Rational& a, const Rational& b) {
    // cross multiply; denominators are positive
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

double Rational::to_double() const {
    return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string int128_str(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

std::string Rational::str() const {
    if (den_ == 1) return int128_str(num_);
    return int128_str(num_) + "/" + int128_str(den_);
}

Rational Rational::parse(const std::string& text) {
    auto parse_int = [](const std::string& t) -> int128 {
        if (t.empty()) throw ParseError("empty integer in rational");
        std::size_t i = 0;
        bool neg = false;
        if (t[0] == '+' || t[0] == '-') {
            neg = t[0] == '-';
            i = 1;
        }
        if (i == t.size()) throw ParseError("sign without digits in rational");
        int128 v = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') throw ParseError("bad digit in rational: " + t);
            v = checked_mul(v, 10);
            v = checked_add(v, t[i] - '0');
        }
        return neg ? -v : v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text), 1, false);
    int128 n = parse_int(text.substr(0, slash));
    int128 d = parse_int(text.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in rational: " + text);
    return Rational(n, d, false);
}

std::uint64_t Rational::hash() const {
    auto mix = [](std::uint64_t h, std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    };
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = mix(h, static_cast<std::uint64_t>(num_));
    h = mix(h, static_cast<std::uint64_t>(num_ >> 64));
    h = mix(h, static_cast<std::uint64_t>(den_));
    h = mix(h, static_cast<std::uint64_t>(den_ >> 64));
    return h;
}

}  // namespace polycs
