/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <array>
#include <cstdint>

namespace qcsym {

/// Field element, always stored reduced into [0, p).
using Elem = std::uint8_t;

/// The prime field F_p for p in {2, 3, 5, 7}.
class PrimeField {
public:
  /// Throws Error when p is not prime or not one of the supported primes.
  explicit PrimeField(int p);

  int p() const noexcept { return p_; }
  bool binary() const noexcept { return p_ == 2; }

  Elem add(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + b) % p_); }
  Elem sub(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + p_ - b) % p_); }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((a * b) % p_); }
  Elem neg(Elem a) const noexcept { return static_cast<Elem>((p_ - a) % p_); }
  /// Multiplicative inverse; a must be nonzero.
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  Elem reduce(long long v) const noexcept {
    long long r = v % p_;
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const PrimeField &a, const PrimeField &b) noexcept {
    return a.p_ == b.p_;
  }

private:
  int p_;
  std::array<Elem, 8> inverse_{};
};

} // namespace qcsym
