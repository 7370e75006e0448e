/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcsym/field.hpp"
#include "qcsym/matrix.hpp"

#include <cstdint>
#include <limits>

namespace qcsym {

/// Distance of the zero code. Drops out of every min{...}.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Default ceiling on the number of messages an exhaustive search may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

/// Reads QCS_BUDGET from the environment, falling back to kDefaultBudget.
std::uint64_t default_budget();

/// Outcome of a minimum-weight computation. `lower <= true minimum <= upper`;
/// when `exact` both equal `value`.
struct DistanceResult {
  int value = kInfinity;
  bool exact = true;
  int lower = kInfinity;
  int upper = kInfinity;
  std::uint64_t enumerated = 0;

  static DistanceResult infinite() { return {}; }
  static DistanceResult exactly(int v, std::uint64_t enumerated) {
    return {v, true, v, v, enumerated};
  }
  /// Unresolved interval; `value` carries the best weight found.
  static DistanceResult bounded(int lower, int upper, std::uint64_t enumerated) {
    return {upper, false, lower, upper, enumerated};
  }

  bool is_infinite() const noexcept { return exact && value == kInfinity; }
  friend bool operator==(const DistanceResult &, const DistanceResult &) = default;
};

enum class Weight {
  hamming,   ///< nonzero coordinates
  symplectic ///< indices i < N with (c_i, c_{N+i}) != (0, 0)
};

struct ScanOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads for the binary engine; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// p^k as a long double, for budget comparisons and messages.
long double message_space_size(int p, int k);

/// Minimum weight over all nonzero vectors in the row space of `rows`
/// (rows need not be independent). Throws BudgetError when p^rank exceeds
/// the budget. An empty row space yields the infinite result.
DistanceResult min_weight_exhaustive(const FpMatrix &rows, const PrimeField &field,
                                     Weight weight, const ScanOptions &opts = {});

struct SplitScan {
  DistanceResult all;     ///< over every nonzero word of the space
  DistanceResult outside; ///< over words not in the excluded subspace
};

/// Like min_weight_exhaustive, additionally tracking the minimum over words
/// outside the row space of `excluded` (which should lie inside the scanned
/// space). Membership is decided against the reduced echelon form of `excluded`.
SplitScan min_weight_outside(const FpMatrix &rows, const FpMatrix &excluded,
                             const PrimeField &field, Weight weight,
                             const ScanOptions &opts = {});

/// Minimum Hamming weight by single-information-set enumeration: the row
/// space is put in systematic form and messages of Hamming weight 1, 2, ...
/// are visited. After finishing level w every unseen codeword has weight at
/// least w + 1. Stops when that certifies the best word found, at
/// `weight_cap` (negative means the dimension), or before a level that
/// would push the total past `budget`.
DistanceResult min_weight_iset(const FpMatrix &rows, const PrimeField &field, int weight_cap = -1,
                               std::uint64_t budget = kDefaultBudget);

} // namespace qcsym
