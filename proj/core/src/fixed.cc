// Copyright 2026 The Procarcade Authors
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
#include "procarcade/fixed.h"

#include <array>
#include <cstdlib>
#include <limits>

#include "procarcade/error.h"

namespace procarcade {
namespace {

constexpr int64_t kRawMin = std::numeric_limits<int32_t>::min();
constexpr int64_t kRawMax = std::numeric_limits<int32_t>::max();

int32_t Checked(int64_t v, const char* op) {
  if (v < kRawMin || v > kRawMax) {
    Fail(ErrorKind::kArithmetic, std::string("fixed-point overflow in ") + op);
  }
  return static_cast<int32_t>(v);
}

// round(256 * sin(2*pi*i/256)) for the first quarter wave, i = 0..64.
constexpr std::array<int16_t, 65> kQuarterSine = {
    0,   6,   13,  19,  25,  31,  38,  44,  50,  56,  62,  68,  74,
    80,  86,  92,  98,  104, 109, 115, 121, 126, 132, 137, 142, 147,
    152, 157, 162, 167, 172, 177, 181, 185, 190, 194, 198, 202, 206,
    209, 213, 216, 220, 223, 226, 229, 231, 234, 237, 239, 241, 243,
    245, 247, 248, 250, 251, 252, 253, 254, 255, 255, 256, 256, 256};

}  // namespace

Fixed Fixed::FromInt(int32_t value) {
  return Fixed(Checked(static_cast<int64_t>(value) * kOne, "FromInt"));
}

Fixed Fixed::Parse(std::string_view text) {
  if (text.empty()) Fail(ErrorKind::kConfig, "empty fixed-point literal");
  bool negative = false;
  size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    ++i;
  }
  int64_t whole = 0;
  bool any_digit = false;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (text[i] < '0' || text[i] > '9') {
      Fail(ErrorKind::kConfig, "bad fixed-point literal '" +
                                   std::string(text) + "'");
    }
    whole = whole * 10 + (text[i] - '0');
    any_digit = true;
    if (whole > kRawMax) Fail(ErrorKind::kConfig, "fixed-point literal too large");
  }
  // Fraction as numerator / 10^digits, capped at 9 digits.
  int64_t num = 0;
  int64_t den = 1;
  if (i < text.size()) {
    for (++i; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') {
        Fail(ErrorKind::kConfig, "bad fixed-point literal '" +
                                     std::string(text) + "'");
      }
      any_digit = true;
      if (den < 1000000000) {
        num = num * 10 + (text[i] - '0');
        den *= 10;
      }
    }
  }
  if (!any_digit) {
    Fail(ErrorKind::kConfig, "bad fixed-point literal '" + std::string(text) + "'");
  }
  int64_t raw = whole * kOne;
  int64_t frac_num = num * kOne;
  if (negative) {
    // floor(-(whole + num/den) * 256)
    raw = -raw - (frac_num + den - 1) / den;
  } else {
    raw += frac_num / den;
  }
  return Fixed(Checked(raw, "Parse"));
}

std::string Fixed::ToString() const {
  std::string out = raw_ < 0 ? "-" : "";
  const int64_t mag = std::llabs(static_cast<int64_t>(raw_));
  out += std::to_string(mag >> kFracBits);
  int64_t frac = mag & (kOne - 1);
  if (frac != 0) {
    out += '.';
    // 1/256 has an exact 8-digit decimal expansion.
    while (frac != 0) {
      frac *= 10;
      out += static_cast<char>('0' + (frac >> kFracBits));
      frac &= kOne - 1;
    }
  }
  return out;
}

Fixed operator+(Fixed a, Fixed b) {
  return Fixed(Checked(static_cast<int64_t>(a.raw_) + b.raw_, "add"));
}

Fixed operator-(Fixed a, Fixed b) {
  return Fixed(Checked(static_cast<int64_t>(a.raw_) - b.raw_, "subtract"));
}

Fixed operator-(Fixed a) {
  return Fixed(Checked(-static_cast<int64_t>(a.raw_), "negate"));
}

Fixed operator*(Fixed a, Fixed b) { return FixedMul(a, b); }

Fixed operator*(Fixed a, int32_t k) {
  return Fixed(Checked(static_cast<int64_t>(a.raw_) * k, "scale"));
}

Fixed FixedMul(Fixed a, Fixed b) {
  const int64_t product = static_cast<int64_t>(a.raw()) * b.raw();
  // Arithmetic right shift floors for negative products.
  return Fixed::FromRaw(Checked(product >> Fixed::kFracBits, "multiply"));
}

Fixed Sin256(uint8_t angle) {
  const int quadrant = angle >> 6;
  const int offset = angle & 63;
  switch (quadrant) {
    case 0: return Fixed::FromRaw(kQuarterSine[offset]);
    case 1: return Fixed::FromRaw(kQuarterSine[64 - offset]);
    case 2: return Fixed::FromRaw(-kQuarterSine[offset]);
    default: return Fixed::FromRaw(-kQuarterSine[64 - offset]);
  }
}

Fixed Cos256(uint8_t angle) { return Sin256(static_cast<uint8_t>(angle + 64)); }

}  // namespace procarcade
