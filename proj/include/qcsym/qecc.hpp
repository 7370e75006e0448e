/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcsym/bounds.hpp"
#include "qcsym/distance.hpp"
#include "qcsym/qc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcsym {

struct Provenance {
  enum class Kind { constructed, propagated };
  Kind kind = Kind::constructed;
  /// Propagation rule 1, 2 or 3; 0 for constructed codes.
  int rule = 0;
  /// Parameters of the parent, e.g. "[[40,5,10]]".
  std::string parent;
};

/// [[n, k, d]] of a binary stabilizer code. When `exact` is false the distance
/// is only known to lie in [d_lower, d_upper] (d_upper may be kInfinity).
struct QeccParams {
  int n = 0;
  int k = 0;
  int d_lower = 1;
  int d_upper = 1;
  bool exact = true;
  /// Unset when the distance was not enumerated.
  std::optional<bool> pure;
  /// Interval for the minimum symplectic weight of the whole dual.
  int dual_lower = 1;
  int dual_upper = 1;
  Provenance provenance;
  std::vector<std::string> notes;

  static QeccParams exactly(int n, int k, int d);
  int d() const noexcept { return d_lower; }
  /// "[[n,k,d]]", or "[[n,k,lo..hi]]" / "[[n,k,>=lo]]" when bounded.
  std::string str() const;
};

struct CrssOptions {
  /// Largest dual message space that is enumerated.
  std::uint64_t budget = default_budget();
  BoundOptions bounds;
  unsigned threads = 0;
};

/// Quantum code of a binary symplectic self-orthogonal 1-generator code: the
/// dual is built (closed form for index 2 when gcd(f_0, g) = 1, generic
/// complement otherwise) and the distance is the minimum symplectic weight of
/// dual words outside the code. Over budget the Theorem-6 interval of the dual
/// is reported when available. Throws PreconditionError for non-binary or
/// non-self-orthogonal input.
QeccParams crss_map(const QcOneGen &code, const CrssOptions &opts = {});
QeccParams crss_map(const QcMultiGen &code, const CrssOptions &opts = {});

/// The same map from explicit generator matrices of a code and its symplectic dual.
QeccParams crss_from_matrices(const FpMatrix &primal, const FpMatrix &dual,
                              const PrimeField &field, const CrssOptions &opts = {});

/// Rules (1) [[n,k-1,d]] for k >= 1, (2) [[n+1,k,d]] for k > 0 and
/// (3) [[n-1,k+1,d-1]] for n >= 2 (and d >= 2).
std::vector<QeccParams> propagate(const QeccParams &params);

/// All parameters reachable from `roots` in at most `depth` rule applications,
/// roots included, each listed once with the provenance of its first discovery.
std::vector<QeccParams> propagation_closure(const std::vector<QeccParams> &roots, int depth);

enum class ClaimVerdict { matches, exceeds, below, untestable_at_budget };

const char *to_string(ClaimVerdict v);

/// Compares computed parameters with a claimed [[n, k, d]].
ClaimVerdict claim_check(const QeccParams &computed, int n, int k, int d);

} // namespace qcsym
