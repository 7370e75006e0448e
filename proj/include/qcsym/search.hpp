/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcsym/bounds.hpp"
#include "qcsym/qc.hpp"
#include "qcsym/qecc.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qcsym {

struct SearchConfig {
  int q = 2;
  int n = 0;
  PlainPoly g{PrimeField(2)};
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  bool require_sso = true;
  /// Keep hits whose primal lower bound reaches this value.
  int min_lower = 0;
  /// Exact symplectic distance of each hit when 2^dim fits; 0 disables.
  std::uint64_t exact_budget = 0;
  /// Dual bounds and quantum parameters for binary hits.
  bool dual = true;
  unsigned threads = 0;
  /// Attempts at drawing f_0 with gcd(f_0, f_1, h) = 1 before the trial is dropped.
  int max_rejections = 64;
};

struct SearchHit {
  std::uint64_t trial = 0;
  RingElement f0;
  RingElement f1;
  bool sso = false;
  int lower = 0;
  int upper = 0;
  std::optional<int> dual_lower;
  std::optional<int> dual_upper;
  std::optional<DistanceResult> exact;
  std::optional<QeccParams> qecc;
};

struct SearchStats {
  std::uint64_t trials = 0;
  /// f_0 draws rejected by the gcd condition.
  std::uint64_t rejections = 0;
  /// Trials abandoned after max_rejections.
  std::uint64_t dropped = 0;
  std::uint64_t sso = 0;
  std::uint64_t hits = 0;
};

struct SearchResult {
  std::vector<SearchHit> hits; ///< ordered by trial index
  SearchStats stats;
};

/// Random index-2 search over (f_0, f_1) for a fixed g. Deterministic in the
/// seed regardless of thread count. Every hit is re-checked by the divisibility
/// test and by the Gram matrix of its generator rows; a disagreement throws
/// ConsistencyError. Throws PreconditionError if g does not divide x^n - 1 or
/// trials is zero.
SearchResult search(const SearchConfig &cfg);

} // namespace qcsym
