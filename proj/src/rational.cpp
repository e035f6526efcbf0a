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

#include "balcap/rational.hpp"

#include <algorithm>
#include <cctype>

#include "balcap/error.hpp"

namespace balcap {

namespace {

bool is_integer_literal(std::string_view text, bool allow_sign) {
  if (allow_sign && !text.empty() && text.front() == '-') text.remove_prefix(1);
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

// Leading zeros would otherwise select octal in the backend's string parser.
std::string strip_leading_zeros(std::string_view digits) {
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  const auto first = digits.find_first_not_of('0');
  std::string out = first == std::string_view::npos ? "0" : std::string(digits.substr(first));
  return negative ? "-" + out : out;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kBadGround: return "BadGround";
    case ErrorKind::kMissingEntry: return "MissingEntry";
    case ErrorKind::kEmptyNotZero: return "EmptyNotZero";
    case ErrorKind::kFullNotOne: return "FullNotOne";
    case ErrorKind::kNotMonotone: return "NotMonotone";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kNegativeFunction: return "NegativeFunction";
    case ErrorKind::kGroundMismatch: return "GroundMismatch";
    case ErrorKind::kGroundTooLarge: return "GroundTooLarge";
    case ErrorKind::kBadPoint: return "BadPoint";
    case ErrorKind::kBadGenerator: return "BadGenerator";
    case ErrorKind::kNotProbability: return "NotProbability";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kTooLarge: return "TooLarge";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorKind::kParse, "malformed rational '" + std::string(text) + "'");
  }
  const boost::multiprecision::mpz_int n(strip_leading_zeros(num));
  const boost::multiprecision::mpz_int d(strip_leading_zeros(den));
  if (d == 0) {
    throw Error(ErrorKind::kParse,
                "rational '" + std::string(text) + "' has zero denominator");
  }
  return Rational(n) / Rational(d);
}

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace balcap
