/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcsym/cyclic.hpp"
#include "qcsym/distance.hpp"
#include "qcsym/qc.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace qcsym {

/// Thread-safe memo of cyclic-code distances keyed by (p, n, generator).
class DistanceCache {
public:
  bool lookup(const CyclicCode &code, DistanceResult &out) const;
  void store(const CyclicCode &code, const DistanceResult &d);
  std::size_t size() const;

private:
  static std::string key(const CyclicCode &code);
  mutable std::mutex mutex_;
  std::map<std::string, DistanceResult> entries_;
};

struct BoundOptions {
  /// Exhaustive enumeration when p^dim is at most this, otherwise information sets.
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
  std::uint64_t iset_budget = kDefaultBudget;
  DistanceCache *cache = nullptr;
};

/// Hamming distance of a cyclic code using the engine picked by `opts`.
DistanceResult cyclic_distance(const CyclicCode &code, const BoundOptions &opts = {});

struct ComponentCode {
  std::string name; ///< "C0" ... "C7"
  PlainPoly generator;
  int dim = 0;
  DistanceResult distance;
};

struct GcdTerm {
  Elem alpha = 0;
  PlainPoly gcd;
  /// [g I] for the primal bound, [I] for the dual bound.
  ComponentCode code;
};

struct BoundReport {
  enum class Kind { primal, dual };
  Kind kind = Kind::primal;
  int p = 2;
  int n = 0;
  std::vector<ComponentCode> components;
  std::vector<GcdTerm> S;
  /// D(C) or D_perp(C); kInfinity when the averaged class is empty.
  int D_value = kInfinity;
  int lower = kInfinity;
  int upper = kInfinity;
  /// "S-empty", "q2-S-nonempty", "q-odd-S-nonempty" or "zero-code"; the dual
  /// appends "/gperp-f1bar-disjoint" (C7 omitted) or "/gperp-f1bar-intersect".
  std::string case_tag;
  /// False when some component distance is only bounded; lower and upper
  /// are then evaluated on the component lower and upper bounds respectively.
  bool exact = true;
  std::vector<std::string> notes;

  const ComponentCode &component(const std::string &name) const;
};

/// Primal sandwich for an index-2 1-generator code. Throws PreconditionError
/// for ell != 2 or a code created with the gcd condition waived.
BoundReport theorem4_bounds(const QcOneGen &code, const BoundOptions &opts = {});

/// Sandwich for the symplectic dual. Throws PreconditionError unless ell = 2,
/// the gcd condition holds and gcd(f_0, g) = 1.
BoundReport theorem6_dual_bounds(const QcOneGen &code, const BoundOptions &opts = {});

} // namespace qcsym
