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

#ifndef PROCARCADE_FIXED_H_
#define PROCARCADE_FIXED_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace procarcade {

// Signed 24.8 fixed-point. All arithmetic is exact integer arithmetic and
// overflow raises ErrorKind::kArithmetic.
class Fixed {
 public:
  static constexpr int kFracBits = 8;
  static constexpr int32_t kOne = 1 << kFracBits;

  constexpr Fixed() = default;

  static constexpr Fixed FromRaw(int32_t raw) { return Fixed(raw); }
  static Fixed FromInt(int32_t value);
  // Parses a decimal literal such as "-1.25" without touching floating
  // point; fractional digits beyond the representable precision floor.
  static Fixed Parse(std::string_view text);

  constexpr int32_t raw() const { return raw_; }
  // Floor toward negative infinity.
  constexpr int32_t Floor() const { return raw_ >> kFracBits; }
  double ToDouble() const { return raw_ / static_cast<double>(kOne); }
  std::string ToString() const;

  friend Fixed operator+(Fixed a, Fixed b);
  friend Fixed operator-(Fixed a, Fixed b);
  friend Fixed operator-(Fixed a);
  friend Fixed operator*(Fixed a, Fixed b);
  friend Fixed operator*(Fixed a, int32_t k);
  Fixed& operator+=(Fixed b) { return *this = *this + b; }
  Fixed& operator-=(Fixed b) { return *this = *this - b; }

  friend constexpr auto operator<=>(Fixed, Fixed) = default;

 private:
  constexpr explicit Fixed(int32_t raw) : raw_(raw) {}
  int32_t raw_ = 0;
};

// floor(a * b * 256) / 256 through a 64-bit intermediate.
Fixed FixedMul(Fixed a, Fixed b);

struct FixedVec {
  Fixed x;
  Fixed y;
  friend bool operator==(const FixedVec&, const FixedVec&) = default;
};

// Angles are 8-bit: 256 steps per revolution.
Fixed Sin256(uint8_t angle);
Fixed Cos256(uint8_t angle);

}  // namespace procarcade

#endif  // PROCARCADE_FIXED_H_
