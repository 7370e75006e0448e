/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcsym/qc.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcsym {

/// One construction of the catalog, with its polynomials as printed and the
/// code they generate.
struct CatalogEntry {
  enum class Kind { one_gen, two_gen };

  std::string id;
  std::string source;
  Kind kind = Kind::one_gen;
  int q = 2;
  int n = 0;
  int ell = 2;
  /// Printed polynomials: g, f0, f1 for one_gen; g1, g2, f for two_gen.
  std::vector<std::pair<std::string, std::string>> printed;

  std::optional<std::array<int, 2>> code;    ///< claimed [2n, k]
  std::optional<std::array<int, 3>> dual;    ///< claimed dual [2n, k, d]
  std::optional<int> primal_distance;        ///< claimed symplectic distance of the code
  std::vector<std::array<int, 3>> qecc;      ///< claimed [[n, k, d]]

  /// The generating tuple with the gcd condition restored (one_gen), or the
  /// two generators ([g1 f], [g1]) and ([g2], [g2 f]) (two_gen).
  std::vector<QcOneGen> generators;
  /// True when the printed tuple shares a factor with h and was normalized.
  bool normalized = false;

  const QcOneGen &one() const { return generators.front(); }
  QcMultiGen multi() const { return QcMultiGen(generators); }
};

/// A claimed quantum code; `marker` is "table-II", "table-III" or "derived".
struct Claim {
  int row = 0;
  std::array<int, 3> qecc{};
  std::string marker;
  std::optional<std::array<int, 3>> previous;
};

struct Catalog {
  int version = 0;
  std::vector<CatalogEntry> entries;
  std::vector<Claim> claims;

  const CatalogEntry &entry(const std::string &id) const;
};

/// The catalog compiled into the library.
std::string_view embedded_catalog_text();

/// Parses and validates a catalog document. Throws Error naming the offending
/// entry on malformed data, unparsable polynomials or g not dividing x^n - 1.
Catalog parse_catalog(std::string_view text);
Catalog load_catalog();
Catalog load_catalog_file(const std::string &path);

} // namespace qcsym
