// Copyright 2026 The twistcube authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact arbitrary-precision rationals, backed by GMP.  No floating
// point participates in any order decision anywhere in the library.

#ifndef TWISTCUBE_RATIONAL_HPP_
#define TWISTCUBE_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace twistcube {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

//! Parses "p" or "p/q" with optional sign.
inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) {
    throw Error("cannot parse rational: " + std::string(text));
  }
  if (r.get_den() == 0) throw Error("rational with zero denominator");
  r.canonicalize();
  return r;
}

//! Canonical rendering: "p" for integers, "p/q" otherwise.
inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline Rational pow2(int exponent) {
  if (exponent < 0) throw Error("pow2: negative exponent");
  mpz_class n = 1;
  n <<= exponent;
  return Rational(n);
}

}  // namespace twistcube

#endif  // TWISTCUBE_RATIONAL_HPP_
