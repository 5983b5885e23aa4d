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

// Binary and ternary word arithmetic: reversal counting and parity,
// face-map substitution composition, the Hamiltonian-order sort/unsort
// bijections and their Gray-code relatives.

#ifndef TWISTCUBE_WORDS_HPP_
#define TWISTCUBE_WORDS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace twistcube {

//! Fixed-length sequence over {0,1}; index 0 is the most significant
//! digit.  No implicit zero-extension anywhere.
class BinaryWord {
 public:
  BinaryWord() = default;

  explicit BinaryWord(std::vector<std::uint8_t> digits)
      : digits_(std::move(digits)) {
    for (auto d : digits_) {
      if (d > 1) throw Error("binary digit out of range");
    }
  }

  static BinaryWord parse(std::string_view text) {
    std::vector<std::uint8_t> digits;
    digits.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1') throw Error("binary word expects 0/1 digits");
      digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinaryWord(std::move(digits));
  }

  //! Big-endian word of `length` digits for a value < 2^length.
  static BinaryWord from_index(std::uint64_t value, int length) {
    if (length < 0 || length > 63) throw Error("word length out of range");
    if (length < 64 && value >= (std::uint64_t{1} << length)) {
      throw IndexOutOfRange("value does not fit the word length");
    }
    std::vector<std::uint8_t> digits(length);
    for (int i = 0; i < length; ++i) {
      digits[i] = static_cast<std::uint8_t>((value >> (length - 1 - i)) & 1);
    }
    return BinaryWord(std::move(digits));
  }

  //! All words of a given length in lexicographic (= numeric) order.
  static std::vector<BinaryWord> all(int length,
                                     const Budget& budget = default_budget()) {
    if (length < 0 || length > budget.max_word_length) {
      throw BudgetExceeded("word length beyond budget");
    }
    std::vector<BinaryWord> out;
    out.reserve(std::size_t{1} << length);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << length); ++v) {
      out.push_back(from_index(v, length));
    }
    return out;
  }

  int length() const { return static_cast<int>(digits_.size()); }
  std::uint8_t operator[](int i) const { return digits_.at(i); }
  const std::vector<std::uint8_t>& digits() const { return digits_; }

  std::uint64_t to_index() const {
    std::uint64_t v = 0;
    for (auto d : digits_) v = (v << 1) | d;
    return v;
  }

  int digit_sum() const {
    int s = 0;
    for (auto d : digits_) s += d;
    return s;
  }

  BinaryWord prefix(int len) const {
    return BinaryWord(std::vector<std::uint8_t>(digits_.begin(),
                                                digits_.begin() + len));
  }

  BinaryWord with_digit(int i, std::uint8_t d) const {
    std::vector<std::uint8_t> digits = digits_;
    digits.at(i) = d;
    return BinaryWord(std::move(digits));
  }

  std::string str() const {
    std::string s;
    s.reserve(digits_.size());
    for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
  }

  friend bool operator==(const BinaryWord& a, const BinaryWord& b) {
    return a.digits_ == b.digits_;
  }
  friend bool operator!=(const BinaryWord& a, const BinaryWord& b) {
    return !(a == b);
  }
  friend bool operator<(const BinaryWord& a, const BinaryWord& b) {
    return a.digits_ < b.digits_;
  }

 private:
  std::vector<std::uint8_t> digits_;
};

//! Digit value of the ternary star.  The star is not a number between
//! 0 and 1; it marks a spanned dimension.
inline constexpr std::uint8_t kTernaryStar = 2;

//! Fixed-length sequence over {0, 1, star}, rendered with '*'.
class TernaryWord {
 public:
  TernaryWord() = default;

  explicit TernaryWord(std::vector<std::uint8_t> digits)
      : digits_(std::move(digits)) {
    for (auto d : digits_) {
      if (d > kTernaryStar) throw Error("ternary digit out of range");
    }
  }

  static TernaryWord parse(std::string_view text) {
    std::vector<std::uint8_t> digits;
    digits.reserve(text.size());
    for (char c : text) {
      if (c == '0' || c == '1') {
        digits.push_back(static_cast<std::uint8_t>(c - '0'));
      } else if (c == '*') {
        digits.push_back(kTernaryStar);
      } else {
        throw Error("ternary word expects 0/1/* digits");
      }
    }
    return TernaryWord(std::move(digits));
  }

  static TernaryWord from_binary(const BinaryWord& b) {
    return TernaryWord(b.digits());
  }

  //! The identity face map <**...*> on n.
  static TernaryWord all_stars(int length) {
    return TernaryWord(
        std::vector<std::uint8_t>(static_cast<std::size_t>(length),
                                  kTernaryStar));
  }

  int length() const { return static_cast<int>(digits_.size()); }
  std::uint8_t operator[](int i) const { return digits_.at(i); }
  const std::vector<std::uint8_t>& digits() const { return digits_; }

  int star_count() const {
    int s = 0;
    for (auto d : digits_) s += (d == kTernaryStar);
    return s;
  }

  //! The word is a binary word (no star occurrences).
  bool is_binary() const { return star_count() == 0; }

  BinaryWord to_binary() const {
    if (!is_binary()) throw Error("word contains a star");
    return BinaryWord(digits_);
  }

  std::string str() const {
    std::string s;
    s.reserve(digits_.size());
    for (auto d : digits_) {
      s.push_back(d == kTernaryStar ? '*' : static_cast<char>('0' + d));
    }
    return s;
  }

  friend bool operator==(const TernaryWord& a, const TernaryWord& b) {
    return a.digits_ == b.digits_;
  }
  friend bool operator!=(const TernaryWord& a, const TernaryWord& b) {
    return !(a == b);
  }
  friend bool operator<(const TernaryWord& a, const TernaryWord& b) {
    return a.digits_ < b.digits_;
  }

 private:
  std::vector<std::uint8_t> digits_;
};

//! An arrow is a ternary word with exactly one star; its dimension is
//! the star's index.
class Arrow {
 public:
  explicit Arrow(TernaryWord word) : word_(std::move(word)), dim_(-1) {
    for (int i = 0; i < word_.length(); ++i) {
      if (word_[i] == kTernaryStar) {
        if (dim_ >= 0) throw Error("arrow needs exactly one star");
        dim_ = i;
      }
    }
    if (dim_ < 0) throw Error("arrow needs exactly one star");
  }

  const TernaryWord& word() const { return word_; }
  int dim() const { return dim_; }
  int length() const { return word_.length(); }

 private:
  TernaryWord word_;
  int dim_;
};

struct ReversalStats {
  std::uint64_t num_rev;
  std::uint8_t parity;
};

//! num_rev = i - (b0 + ... + b_{i-1}), the count of 0 digits; parity is
//! num_rev mod 2.
inline ReversalStats reversal_stats(const BinaryWord& prefix) {
  std::uint64_t rev = static_cast<std::uint64_t>(prefix.length()) -
                      static_cast<std::uint64_t>(prefix.digit_sum());
  return {rev, static_cast<std::uint8_t>(rev & 1)};
}

//! Reversal stats of the prefix before the star: an arrow is reversed
//! once for each 0 digit ahead of its dimension.
inline ReversalStats arrow_stats(const Arrow& a) {
  std::vector<std::uint8_t> prefix(a.word().digits().begin(),
                                   a.word().digits().begin() + a.dim());
  return reversal_stats(BinaryWord(std::move(prefix)));
}

//! Counts reversals by replaying the thickening-and-twisting process:
//! digits are consumed from the last to the first, and once the face
//! being built contains the star, every prepended 0 pins it in the
//! reversed copy and flips the arrow once.  Oracle for arrow_stats.
inline std::uint64_t simulate_reversals(const Arrow& a) {
  std::uint64_t count = 0;
  bool carries_star = false;
  for (int j = a.length() - 1; j >= 0; --j) {
    std::uint8_t d = a.word()[j];
    if (d == kTernaryStar) {
      carries_star = true;
    } else if (carries_star && d == 0) {
      ++count;
    }
  }
  return count;
}

//! Substitutes the star by b XOR parity for endpoint role b (source has
//! b = 0, target b = 1); odd parity swaps the endpoints.
inline std::pair<BinaryWord, BinaryWord> arrow_endpoints(const Arrow& a) {
  const std::uint8_t p = arrow_stats(a).parity;
  std::vector<std::uint8_t> src, tgt;
  src.reserve(a.length());
  tgt.reserve(a.length());
  for (int i = 0; i < a.length(); ++i) {
    if (i == a.dim()) {
      src.push_back(static_cast<std::uint8_t>(0 ^ p));
      tgt.push_back(static_cast<std::uint8_t>(1 ^ p));
    } else {
      src.push_back(a.word()[i]);
      tgt.push_back(a.word()[i]);
    }
  }
  return {BinaryWord(std::move(src)), BinaryWord(std::move(tgt))};
}

//! Substitution composition of face maps: each occurrence i of star in
//! g is replaced by f[i].  Requires len(f) = stars(g).
inline TernaryWord ternary_compose(const TernaryWord& f,
                                   const TernaryWord& g) {
  if (f.length() != g.star_count()) {
    throw ArityMismatch("ternary_compose: stars(g) differs from length(f)");
  }
  std::vector<std::uint8_t> out;
  out.reserve(g.length());
  int occurrence = 0;
  for (int i = 0; i < g.length(); ++i) {
    out.push_back(g[i] == kTernaryStar ? f[occurrence++] : g[i]);
  }
  return TernaryWord(std::move(out));
}

//! Binary face-map composition: occurrence i of digit 1 in g is
//! replaced by f[i].  Requires len(f) = ones(g).
inline BinaryWord binary_simplex_compose(const BinaryWord& f,
                                         const BinaryWord& g) {
  if (f.length() != g.digit_sum()) {
    throw ArityMismatch("binary_simplex_compose: ones(g) != length(f)");
  }
  std::vector<std::uint8_t> out;
  out.reserve(g.length());
  int occurrence = 0;
  for (int i = 0; i < g.length(); ++i) {
    out.push_back(g[i] == 1 ? f[occurrence++] : std::uint8_t{0});
  }
  return BinaryWord(std::move(out));
}

// --- Hamiltonian-order sorting ---------------------------------------------
//
// sort_num(b) is the position of node b in the unique Hamiltonian path
// of the twisted cube face graph; the tests pin the recursion against
// the path found by exhaustive search.
//
//     sort(<>)     = 0
//     sort(0 :: b) = 2^n - 1 - sort(b)      (n = length of b)
//     sort(1 :: b) = 2^n     + sort(b)
//
// The 0 branch walks its copy of the lower cube upside down, the 1
// branch walks it forward after all 2^n reversed nodes.

inline std::uint64_t sort_num(const BinaryWord& b) {
  const int n = b.length();
  if (n > 62) throw BudgetExceeded("sort_num: word too long");
  std::uint64_t acc = 0;
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t half = std::uint64_t{1} << (n - 1 - i);
    acc = (b[i] == 0) ? (half - 1 - acc) : (half + acc);
  }
  return acc;
}

inline BinaryWord unsort_num(int n, std::uint64_t index,
                             const Budget& budget = default_budget()) {
  if (n < 0 || n > budget.max_word_length) {
    throw BudgetExceeded("word length beyond budget");
  }
  if (index >= (std::uint64_t{1} << n)) {
    throw IndexOutOfRange("unsort_num: index out of range");
  }
  std::vector<std::uint8_t> digits;
  digits.reserve(n);
  std::uint64_t i = index;
  for (int k = n - 1; k >= 0; --k) {
    const std::uint64_t half = std::uint64_t{1} << k;
    if (i < half) {
      digits.push_back(0);
      i = half - 1 - i;
    } else {
      digits.push_back(1);
      i -= half;
    }
  }
  return BinaryWord(std::move(digits));
}

//! Running parity of <b_0 .. b_{i-1}>, i.e. (i mod 2) XOR b_0 XOR ...
//! XOR b_{i-1}; used digit by digit below.
inline BinaryWord sort_bin(const BinaryWord& b) {
  std::vector<std::uint8_t> out;
  out.reserve(b.length());
  std::uint8_t parity = 0;
  for (int i = 0; i < b.length(); ++i) {
    out.push_back(static_cast<std::uint8_t>(b[i] ^ parity));
    parity ^= static_cast<std::uint8_t>(1 ^ b[i]);
  }
  return BinaryWord(std::move(out));
}

//! Inverse of sort_bin.  Feeding the recovered digits back through the
//! running parity collapses to: b_0 = s_0, b_i = NOT(s_i XOR s_{i-1}).
inline BinaryWord unsort_bin(const BinaryWord& s) {
  std::vector<std::uint8_t> out;
  out.reserve(s.length());
  for (int i = 0; i < s.length(); ++i) {
    out.push_back(i == 0 ? s[0]
                         : static_cast<std::uint8_t>(1 ^ s[i] ^ s[i - 1]));
  }
  return BinaryWord(std::move(out));
}

enum class GrayDirection { encode, decode };

//! Standard reflected-binary-code transform.  The twist-at-1 variant of
//! the sorting functions coincides with decode / encode.
inline BinaryWord gray_code(const BinaryWord& b, GrayDirection direction) {
  std::vector<std::uint8_t> out;
  out.reserve(b.length());
  if (direction == GrayDirection::encode) {
    for (int i = 0; i < b.length(); ++i) {
      out.push_back(i == 0 ? b[0] : static_cast<std::uint8_t>(b[i] ^ b[i - 1]));
    }
  } else {
    std::uint8_t acc = 0;
    for (int i = 0; i < b.length(); ++i) {
      acc ^= b[i];
      out.push_back(acc);
    }
  }
  return BinaryWord(std::move(out));
}

inline BinaryWord gray_encode(const BinaryWord& b) {
  return gray_code(b, GrayDirection::encode);
}
inline BinaryWord gray_decode(const BinaryWord& b) {
  return gray_code(b, GrayDirection::decode);
}

}  // namespace twistcube

#endif  // TWISTCUBE_WORDS_HPP_
