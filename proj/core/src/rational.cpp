// Copyright 2026 The minwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "minwit/rational.h"

#include <cmath>

#include "minwit/errors.h"

namespace minwit {

std::string rational_to_string(const Rational &r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) {
            throw ParseError("empty rational component in '" + std::string(text) + "'", 0);
        }
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) {
            throw ParseError("bad rational '" + std::string(text) + "'", 0);
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw ParseError("bad rational '" + std::string(text) + "'", 0);
            }
        }
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return boost::multiprecision::cpp_int(digits);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    auto den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

double to_double(const Rational &r) {
    return r.convert_to<double>();
}

Rational rational_approx(double x, long long max_denominator) {
    if (!std::isfinite(x)) {
        throw ArgumentError("rational_approx: non-finite value");
    }
    // Continued-fraction convergents h/k.
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double frac = x;
    for (int iter = 0; iter < 64; ++iter) {
        double a = std::floor(frac);
        if (std::fabs(a) > 9.0e15) {
            break;
        }
        auto ai = static_cast<long long>(a);
        long long h2 = ai * h1 + h0;
        long long k2 = ai * k1 + k0;
        if (k2 > max_denominator) {
            break;
        }
        h0 = h1, h1 = h2, k0 = k1, k1 = k2;
        double rem = frac - a;
        if (std::fabs(static_cast<double>(h1) / static_cast<double>(k1) - x) < 1e-15 * std::max(1.0, std::fabs(x)) ||
            rem < 1e-300) {
            break;
        }
        frac = 1.0 / rem;
    }
    return Rational(h1, k1);
}

}  // namespace minwit
