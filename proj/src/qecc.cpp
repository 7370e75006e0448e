/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/qecc.hpp"

#include "qcsym/errors.hpp"

#include <deque>
#include <map>
#include <tuple>

namespace qcsym {

QeccParams QeccParams::exactly(int n, int k, int d) {
  QeccParams p;
  p.n = n;
  p.k = k;
  p.d_lower = p.d_upper = d;
  p.dual_lower = p.dual_upper = d;
  return p;
}

std::string QeccParams::str() const {
  std::string d;
  if (exact)
    d = std::to_string(d_lower);
  else if (d_upper == kInfinity)
    d = ">=" + std::to_string(d_lower);
  else
    d = std::to_string(d_lower) + ".." + std::to_string(d_upper);
  return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + d + "]]";
}

QeccParams crss_from_matrices(const FpMatrix &primal, const FpMatrix &dual,
                              const PrimeField &field, const CrssOptions &opts) {
  if (!field.binary())
    throw PreconditionError("the quantum construction is implemented for p = 2 only");
  const int n = static_cast<int>(primal.cols() / 2);
  const int kp = rank(primal, field);
  const int kd = rank(dual, field);
  if (kp + kd != 2 * n)
    throw ConsistencyError("dual dimension " + std::to_string(kd) + " does not complement " +
                           std::to_string(kp));
  QeccParams out;
  out.n = n;
  out.k = n - kp;
  if (message_space_size(field.p(), kd) > static_cast<long double>(opts.budget)) {
    out.exact = false;
    out.d_lower = 1;
    out.d_upper = kInfinity;
    out.dual_lower = 1;
    out.dual_upper = kInfinity;
    out.notes.push_back("dual has 2^" + std::to_string(kd) + " words, beyond the budget");
    return out;
  }
  const SplitScan scan =
      min_weight_outside(dual, primal, field, Weight::symplectic, {opts.budget, opts.threads});
  out.dual_lower = out.dual_upper = scan.all.value;
  if (scan.outside.is_infinite()) {
    // k = 0: the dual equals the code; report its own minimum weight.
    out.d_lower = out.d_upper = scan.all.value;
    out.pure = true;
    out.notes.push_back("the code equals its dual");
  } else {
    out.d_lower = out.d_upper = scan.outside.value;
    out.pure = scan.outside.value == scan.all.value;
  }
  return out;
}

namespace {

void require_binary_sso(const PrimeField &field, const SsoVerdict &v) {
  if (!field.binary())
    throw PreconditionError("the quantum construction is implemented for p = 2 only");
  if (!v.self_orthogonal)
    throw PreconditionError("code is not symplectic self-orthogonal; remainder " +
                            (v.witness ? v.witness->str() : std::string("?")));
}

} // namespace

QeccParams crss_map(const QcOneGen &code, const CrssOptions &opts) {
  require_binary_sso(code.field(), check_sso_one_gen(code));
  const FpMatrix primal = generator_matrix(code, true);
  const bool closed_form = code.ell() == 2 && dual_hypothesis_holds(code);
  const FpMatrix dual = closed_form ? symplectic_dual(code).generator_matrix(true)
                                    : symplectic_complement(primal, code.field());
  QeccParams out = crss_from_matrices(primal, dual, code.field(), opts);
  if (!out.exact && closed_form && code.gcd_condition_holds()) {
    const BoundReport b = theorem6_dual_bounds(code, opts.bounds);
    out.dual_lower = b.lower;
    out.dual_upper = b.upper;
    // Every dual word outside the code has at least the dual's minimum weight;
    // the upper end only bounds the quantum distance for pure codes.
    out.d_lower = b.lower;
    out.notes.push_back("dual distance in [" + std::to_string(b.lower) + ", " +
                        std::to_string(b.upper) + "] by the dual bound");
  }
  return out;
}

QeccParams crss_map(const QcMultiGen &code, const CrssOptions &opts) {
  require_binary_sso(code.field(), check_sso_multi_gen(code));
  const FpMatrix primal = generator_matrix(code, true);
  return crss_from_matrices(primal, symplectic_complement(primal, code.field()), code.field(),
                            opts);
}

std::vector<QeccParams> propagate(const QeccParams &params) {
  std::vector<QeccParams> out;
  const auto child = [&](int rule, int n, int k, int shift) {
    QeccParams c = params;
    c.n = n;
    c.k = k;
    if (shift != 0) {
      c.d_lower += shift;
      if (c.d_upper != kInfinity)
        c.d_upper += shift;
      c.dual_lower = std::max(1, c.dual_lower + shift);
      if (c.dual_upper != kInfinity)
        c.dual_upper += shift;
    }
    c.pure.reset();
    c.notes.clear();
    c.provenance = {Provenance::Kind::propagated, rule, params.str()};
    out.push_back(std::move(c));
  };
  if (params.k >= 1)
    child(1, params.n, params.k - 1, 0);
  if (params.k > 0)
    child(2, params.n + 1, params.k, 0);
  if (params.n >= 2 && params.d_lower >= 2)
    child(3, params.n - 1, params.k + 1, -1);
  return out;
}

std::vector<QeccParams> propagation_closure(const std::vector<QeccParams> &roots, int depth) {
  using Key = std::tuple<int, int, int, int>;
  std::map<Key, bool> seen;
  std::vector<QeccParams> out;
  std::deque<std::pair<QeccParams, int>> queue;
  const auto key = [](const QeccParams &p) { return Key{p.n, p.k, p.d_lower, p.d_upper}; };
  for (const auto &r : roots)
    if (seen.emplace(key(r), true).second) {
      out.push_back(r);
      queue.emplace_back(r, 0);
    }
  while (!queue.empty()) {
    auto [p, level] = queue.front();
    queue.pop_front();
    if (level >= depth)
      continue;
    for (auto &c : propagate(p))
      if (seen.emplace(key(c), true).second) {
        out.push_back(c);
        queue.emplace_back(std::move(c), level + 1);
      }
  }
  return out;
}

const char *to_string(ClaimVerdict v) {
  switch (v) {
  case ClaimVerdict::matches:
    return "matches";
  case ClaimVerdict::exceeds:
    return "exceeds";
  case ClaimVerdict::below:
    return "below";
  case ClaimVerdict::untestable_at_budget:
    return "untestable-at-budget";
  }
  return "?";
}

ClaimVerdict claim_check(const QeccParams &computed, int n, int k, int d) {
  if (computed.n != n || computed.k != k)
    return ClaimVerdict::below;
  if (computed.exact)
    return computed.d_lower == d ? ClaimVerdict::matches
           : computed.d_lower > d ? ClaimVerdict::exceeds
                                  : ClaimVerdict::below;
  if (computed.d_lower > d)
    return ClaimVerdict::exceeds;
  if (computed.d_upper < d)
    return ClaimVerdict::below;
  return ClaimVerdict::untestable_at_budget;
}

} // namespace qcsym
