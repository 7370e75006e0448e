/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcsym/distance.hpp"
#include "qcsym/matrix.hpp"
#include "qcsym/poly.hpp"

#include <cstdint>

namespace qcsym {

/// The cyclic code [g] of length n, where g is the monic generator dividing
/// x^n - 1. g = x^n - 1 gives the zero code.
class CyclicCode {
public:
  explicit CyclicCode(const DivisorPoly &g) : g_(g) {}

  const PrimeField &field() const noexcept { return g_.field(); }
  int n() const noexcept { return g_.n(); }
  const PlainPoly &generator() const noexcept { return g_.poly(); }
  int dim() const noexcept { return n() - g_.degree(); }
  bool is_zero() const noexcept { return dim() == 0; }

  /// dim x n matrix whose rows are x^i g(x).
  FpMatrix generator_matrix() const;

private:
  DivisorPoly g_;
};

/// The ideal generated by f in R_{p,n}: generator gcd(f, x^n - 1); f = 0 gives the zero code.
CyclicCode cyclic_from_element(const RingElement &f);
CyclicCode cyclic_from_element(const PlainPoly &f, int n);

/// t x n matrix whose row i is the coefficient vector of x^i f. Requires 1 <= t <= n.
FpMatrix circulant_rows(const RingElement &f, int t);

/// Exact minimum Hamming distance by full message enumeration.
/// Throws BudgetError when p^dim exceeds `message_budget`.
DistanceResult min_hamming_exhaustive(const CyclicCode &code,
                                      std::uint64_t message_budget = kDefaultBudget);

/// Information-set minimum distance; `weight_cap < 0` means dim. Never throws
/// on size: returns a bounded result when the cap or budget is hit.
DistanceResult min_hamming_iset(const CyclicCode &code, int weight_cap = -1,
                                std::uint64_t budget = kDefaultBudget);

} // namespace qcsym
