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

#ifndef MINWIT_RATIONAL_H
#define MINWIT_RATIONAL_H

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace minwit {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q > 0; integers are written "p/1".
std::string rational_to_string(const Rational &r);

/// Accepts "p/q", "p" or a signed integer. Throws ParseError on anything else.
Rational rational_from_string(std::string_view text);

double to_double(const Rational &r);

/// Best rational approximation of `x` with denominator at most `max_denominator`
/// (continued fractions). Exact for values such as 4/9 that come from ideal states.
Rational rational_approx(double x, long long max_denominator = 1000000);

}  // namespace minwit

#endif
