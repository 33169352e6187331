// Copyright 2026 The mubc Authors
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

// Exact scalars: Gaussian integers, rationals, and amplitudes g * 2^(-e/2).

#ifndef MUBC_EXACT_HPP_
#define MUBC_EXACT_HPP_

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mubc {

struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  static constexpr GaussInt unit(int quarter_turns) {
    switch (((quarter_turns % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  constexpr bool is_zero() const { return re == 0 && im == 0; }
  constexpr GaussInt conj() const { return {re, -im}; }
  constexpr std::int64_t norm() const { return re * re + im * im; }

  friend constexpr GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend constexpr GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend constexpr GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
  friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt& operator+=(GaussInt b) { return *this = *this + b; }
  constexpr bool operator==(const GaussInt&) const = default;
};

/// Reduced fraction with positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

  bool operator==(const Rational&) const = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Value g * 2^(-e/2).
struct Amplitude {
  GaussInt g;
  int e = 0;

  bool operator==(const Amplitude&) const = default;
};

}  // namespace mubc

#endif  // MUBC_EXACT_HPP_
