/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcsym/bounds.hpp"
#include "qcsym/catalog.hpp"
#include "qcsym/qecc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcsym {

struct VerifyOptions {
  std::uint64_t budget = default_budget();
  /// Evaluate the distance sandwiches (needs cyclic distances up to n = 105).
  bool bounds = true;
  /// Enumerate exact distances that fit in the budget.
  bool distances = true;
  /// Depth of the propagation closure used for derived claims.
  int closure_depth = 10;
  /// Restrict to these entry ids; empty means all.
  std::vector<std::string> only;
};

struct ClaimResult {
  std::array<int, 3> claimed{};
  ClaimVerdict verdict = ClaimVerdict::untestable_at_budget;
};

struct EntryReport {
  std::string id;
  std::string source;
  bool sso_required = true;
  bool sso = false;
  std::optional<std::string> sso_witness;
  bool normalized = false;
  int dim = 0;
  std::optional<int> claimed_dim;
  /// Dual rank plus code rank equals 2n and their Gram product vanishes.
  bool dual_ok = false;
  int dual_dim = 0;
  /// "closed-form" or "complement".
  std::string dual_method;
  std::optional<BoundReport> primal_bounds;
  std::optional<BoundReport> dual_bounds;
  std::optional<DistanceResult> primal_distance;
  std::optional<QeccParams> qecc;
  std::vector<ClaimResult> claims;
  std::optional<int> claimed_primal_distance;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct DerivedCheck {
  int derived_rows = 0;
  int reproduced = 0;
  std::vector<int> missing_rows;
  /// Rows marked as constructions with no matching catalog entry.
  std::vector<int> unanchored_rows;
};

struct VerifyReport {
  std::vector<EntryReport> entries;
  DerivedCheck derived;
  bool passed() const noexcept;
};

/// Structural checks only: self-orthogonality and dimension.
EntryReport check_entry_structure(const CatalogEntry &entry);

EntryReport verify_entry(const CatalogEntry &entry, const VerifyOptions &opts,
                         DistanceCache *cache = nullptr);

/// Every Table-I row marked as derived must lie in the propagation closure of
/// the rows marked as constructions.
DerivedCheck check_derived_claims(const Catalog &catalog, int depth);

VerifyReport verify_catalog(const Catalog &catalog, const VerifyOptions &opts = {});

} // namespace qcsym
