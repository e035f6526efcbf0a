// Copyright 2026 The balcap Authors
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

#ifndef BALCAP_RATIONAL_HPP
#define BALCAP_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace balcap {

// Exact fraction over arbitrary-precision integers. Values are kept in
// lowest terms with a positive denominator by the backend after every
// operation. Expression templates are off so `auto` behaves like a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Accepts "p" or "p/q" with optional leading '-', decimal digits only, q > 0.
// Throws Error(kParse) otherwise.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline Rational make_rational(long long numerator, long long denominator = 1) {
  return Rational(numerator) / Rational(denominator);
}

}  // namespace balcap

#endif  // BALCAP_RATIONAL_HPP
