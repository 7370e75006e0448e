/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/verify.hpp"

#include "qcsym/errors.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace qcsym {

bool VerifyReport::passed() const noexcept {
  for (const auto &e : entries)
    if (!e.passed())
      return false;
  return derived.missing_rows.empty() && derived.unanchored_rows.empty();
}

namespace {

FpMatrix primal_matrix(const CatalogEntry &e) {
  return e.kind == CatalogEntry::Kind::one_gen ? generator_matrix(e.one(), true)
                                               : generator_matrix(e.multi(), true);
}

} // namespace

EntryReport check_entry_structure(const CatalogEntry &entry) {
  EntryReport r;
  r.id = entry.id;
  r.source = entry.source;
  r.normalized = entry.normalized;
  r.sso_required = !entry.qecc.empty() || entry.dual.has_value();
  const SsoVerdict v = entry.kind == CatalogEntry::Kind::one_gen
                           ? check_sso_one_gen(entry.one())
                           : check_sso_multi_gen(entry.multi());
  r.sso = v.self_orthogonal;
  if (!v.self_orthogonal && v.witness)
    r.sso_witness = v.witness->str();
  if (r.sso_required && !r.sso)
    r.failures.push_back("not symplectic self-orthogonal");
  r.dim = rank(primal_matrix(entry), entry.generators.front().field());
  if (entry.code) {
    r.claimed_dim = (*entry.code)[1];
    if ((*entry.code)[0] != 2 * entry.n)
      r.failures.push_back("claimed length differs from 2n");
    if (r.dim != *r.claimed_dim)
      r.failures.push_back("dimension " + std::to_string(r.dim) + " differs from claimed " +
                           std::to_string(*r.claimed_dim));
  }
  return r;
}

EntryReport verify_entry(const CatalogEntry &entry, const VerifyOptions &opts,
                         DistanceCache *cache) {
  EntryReport r = check_entry_structure(entry);
  const PrimeField &field = entry.generators.front().field();
  const FpMatrix primal = primal_matrix(entry);
  const bool one = entry.kind == CatalogEntry::Kind::one_gen;
  const bool closed = one && dual_hypothesis_holds(entry.one());

  FpMatrix dual;
  if (closed) {
    r.dual_method = "closed-form";
    try {
      dual = symplectic_dual(entry.one()).generator_matrix(true);
    } catch (const ConsistencyError &ex) {
      r.failures.push_back(std::string("dual construction: ") + ex.what());
      dual = symplectic_complement(primal, field);
    }
  } else {
    r.dual_method = "complement";
    dual = symplectic_complement(primal, field);
  }
  r.dual_dim = rank(dual, field);
  r.dual_ok = r.dual_dim + r.dim == 2 * entry.n &&
              (!r.sso || symplectic_orthogonal(primal, dual, field));
  if (!r.dual_ok)
    r.failures.push_back("dual rank or Gram product check failed");
  if (entry.dual && (*entry.dual)[1] != r.dual_dim)
    r.failures.push_back("dual dimension " + std::to_string(r.dual_dim) + " differs from claimed " +
                         std::to_string((*entry.dual)[1]));

  BoundOptions bo;
  bo.iset_budget = opts.budget;
  bo.cache = cache;
  if (opts.bounds && one) {
    r.primal_bounds = theorem4_bounds(entry.one(), bo);
    if (closed)
      r.dual_bounds = theorem6_dual_bounds(entry.one(), bo);
  }

  r.claimed_primal_distance = entry.primal_distance;
  if (opts.distances &&
      message_space_size(field.p(), r.dim) <= static_cast<long double>(opts.budget)) {
    r.primal_distance = min_weight_exhaustive(primal, field, Weight::symplectic, {opts.budget, 0});
    if (entry.primal_distance && r.primal_distance->value != *entry.primal_distance)
      r.failures.push_back("symplectic distance " + std::to_string(r.primal_distance->value) +
                           " differs from claimed " + std::to_string(*entry.primal_distance));
  }
  if (r.primal_distance && r.primal_bounds && r.primal_bounds->lower != kInfinity) {
    const int d = r.primal_distance->value;
    if (d < r.primal_bounds->lower || d > r.primal_bounds->upper)
      r.failures.push_back("exact distance outside the primal bounds");
  }

  if (r.sso && field.binary() && !entry.qecc.empty()) {
    CrssOptions co;
    co.budget = opts.distances ? opts.budget : 0;
    co.bounds = bo;
    r.qecc = crss_from_matrices(primal, dual, field, co);
    if (closed && opts.bounds && !r.qecc->exact && r.dual_bounds) {
      r.qecc->dual_lower = r.dual_bounds->lower;
      r.qecc->dual_upper = r.dual_bounds->upper;
      r.qecc->d_lower = std::max(r.qecc->d_lower, r.dual_bounds->lower);
    }
    if (r.qecc->exact && r.dual_bounds && r.dual_bounds->lower != kInfinity) {
      if (r.qecc->dual_lower < r.dual_bounds->lower || r.qecc->dual_lower > r.dual_bounds->upper)
        r.failures.push_back("exact dual distance outside the dual bounds");
    }
    for (const auto &c : entry.qecc) {
      ClaimResult cr{c, claim_check(*r.qecc, c[0], c[1], c[2])};
      if (cr.verdict == ClaimVerdict::below)
        r.failures.push_back("claim [[" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                             std::to_string(c[2]) + "]] not reached");
      r.claims.push_back(cr);
    }
  }
  return r;
}

DerivedCheck check_derived_claims(const Catalog &catalog, int depth) {
  DerivedCheck out;
  std::set<std::tuple<int, int, int>> constructed;
  for (const auto &e : catalog.entries)
    for (const auto &q : e.qecc)
      constructed.emplace(q[0], q[1], q[2]);
  std::vector<QeccParams> roots;
  for (const auto &c : catalog.claims) {
    if (c.marker == "derived")
      continue;
    if (!constructed.count({c.qecc[0], c.qecc[1], c.qecc[2]}))
      out.unanchored_rows.push_back(c.row);
    QeccParams p = QeccParams::exactly(c.qecc[0], c.qecc[1], c.qecc[2]);
    roots.push_back(p);
  }
  std::set<std::tuple<int, int, int>> reach;
  for (const auto &p : propagation_closure(roots, depth))
    reach.emplace(p.n, p.k, p.d_lower);
  for (const auto &c : catalog.claims) {
    if (c.marker != "derived")
      continue;
    ++out.derived_rows;
    if (reach.count({c.qecc[0], c.qecc[1], c.qecc[2]}))
      ++out.reproduced;
    else
      out.missing_rows.push_back(c.row);
  }
  return out;
}

VerifyReport verify_catalog(const Catalog &catalog, const VerifyOptions &opts) {
  VerifyReport out;
  DistanceCache cache;
  for (const auto &e : catalog.entries) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), e.id) == opts.only.end())
      continue;
    out.entries.push_back(verify_entry(e, opts, &cache));
  }
  out.derived = check_derived_claims(catalog, opts.closure_depth);
  return out;
}

} // namespace qcsym
