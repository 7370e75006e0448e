/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/bounds.hpp"

#include "qcsym/errors.hpp"

#include <algorithm>
#include <string>

namespace qcsym {

std::string DistanceCache::key(const CyclicCode &code) {
  return std::to_string(code.field().p()) + ":" + std::to_string(code.n()) + ":" +
         code.generator().str();
}

bool DistanceCache::lookup(const CyclicCode &code, DistanceResult &out) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(key(code));
  if (it == entries_.end())
    return false;
  out = it->second;
  return true;
}

void DistanceCache::store(const CyclicCode &code, const DistanceResult &d) {
  std::lock_guard<std::mutex> lock(mutex_);
  entries_[key(code)] = d;
}

std::size_t DistanceCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

DistanceResult cyclic_distance(const CyclicCode &code, const BoundOptions &opts) {
  if (code.is_zero())
    return DistanceResult::infinite();
  DistanceResult d;
  if (opts.cache && opts.cache->lookup(code, d))
    return d;
  if (message_space_size(code.field().p(), code.dim()) <=
      static_cast<long double>(opts.exhaustive_limit))
    d = min_hamming_exhaustive(code, opts.exhaustive_limit);
  else
    d = min_hamming_iset(code, -1, opts.iset_budget);
  if (opts.cache)
    opts.cache->store(code, d);
  return d;
}

const ComponentCode &BoundReport::component(const std::string &name) const {
  for (const auto &c : components)
    if (c.name == name)
      return c;
  throw Error("no component named " + name);
}

namespace {

constexpr long long kInf = kInfinity;

long long side(const DistanceResult &d, bool low) { return low ? d.lower : d.upper; }

int clamp_int(long long v) { return v >= kInf ? kInfinity : static_cast<int>(v); }

long long min_of(std::initializer_list<long long> xs) { return std::min(xs); }

ComponentCode make_component(const std::string &name, const CyclicCode &code,
                             const BoundOptions &opts) {
  return {name, code.generator(), code.dim(), cyclic_distance(code, opts)};
}

// D = max{ ceil((d1 + d2 + extra + sum of finite terms) / q), d1, d2 }.
// An infinite d1 or d2 means one half is always zero, so no codeword has both
// halves nonzero and the averaged class is empty.
long long averaged_bound(long long d1, long long d2, long long extra,
                         const std::vector<long long> &terms, int q) {
  if (d1 >= kInf || d2 >= kInf || extra >= kInf)
    return kInf;
  long long sum = d1 + d2 + extra;
  for (long long t : terms)
    if (t < kInf)
      sum += t;
  return std::max({(sum + q - 1) / q, d1, d2});
}

void note_inexact(BoundReport &r) {
  for (const auto &c : r.components)
    if (!c.distance.exact) {
      r.exact = false;
      r.notes.push_back(c.name + " distance only bounded in [" + std::to_string(c.distance.lower) +
                        ", " + std::to_string(c.distance.upper) + "]");
    }
  for (const auto &s : r.S)
    if (!s.code.distance.exact) {
      r.exact = false;
      r.notes.push_back("gcd term for alpha=" + std::to_string(s.alpha) +
                        " distance only bounded");
    }
}

void note_zero_terms(BoundReport &r) {
  for (const auto &s : r.S)
    if (s.code.distance.is_infinite())
      r.notes.push_back("gcd term for alpha=" + std::to_string(s.alpha) +
                        " is the zero code; its class is empty and the term is omitted");
}

void require_bound_input(const QcOneGen &code) {
  if (code.ell() != 2)
    throw PreconditionError("distance bounds are defined for index 2 only, got index " +
                            std::to_string(code.ell()));
  if (!code.gcd_condition_holds())
    throw PreconditionError("distance bounds need gcd(f_0, f_1, h) = 1");
}

} // namespace

BoundReport theorem4_bounds(const QcOneGen &code, const BoundOptions &opts) {
  require_bound_input(code);
  const PrimeField &F = code.field();
  const int n = code.n();
  const int q = F.p();
  const PlainPoly X = PlainPoly::cyclotomic_modulus(F, n);
  const PlainPoly &g = code.g().poly();
  const PlainPoly h = code.parity_check();
  const PlainPoly f0 = code.f(0).to_plain();
  const PlainPoly f1 = code.f(1).to_plain();

  BoundReport r;
  r.kind = BoundReport::Kind::primal;
  r.p = q;
  r.n = n;
  r.components.push_back(make_component("C0", CyclicCode(code.g()), opts));
  r.components.push_back(make_component("C1", cyclic_from_element(code.block(0)), opts));
  r.components.push_back(make_component("C2", cyclic_from_element(code.block(1)), opts));
  r.components.push_back(
      make_component("C3", CyclicCode(DivisorPoly(exact_div(X, plain_gcd(h, f0)), n)), opts));
  r.components.push_back(
      make_component("C4", CyclicCode(DivisorPoly(exact_div(X, plain_gcd(h, f1)), n)), opts));
  const PlainPoly l = (f0.is_zero() || f1.is_zero()) ? PlainPoly(F) : plain_lcm(f0, f1);
  r.components.push_back(make_component("C5", cyclic_from_element(g * l, n), opts));

  for (int a = 1; a < q; ++a) {
    const Elem alpha = static_cast<Elem>(a);
    const PlainPoly I = plain_gcd(f0 + f1.scaled(alpha), h);
    if (I.is_one())
      continue;
    const CyclicCode gi(DivisorPoly(g * I, n));
    r.S.push_back({alpha, I, make_component("gI", gi, opts)});
  }

  if (code.dim() == 0) {
    r.case_tag = "zero-code";
    r.notes.push_back("the code is zero; every bound is infinite");
    return r;
  }
  note_inexact(r);
  note_zero_terms(r);

  const auto d = [&](int i, bool low) { return side(r.components[i].distance, low); };
  const int s = static_cast<int>(r.S.size());
  std::vector<long long> terms;
  for (const auto &t : r.S)
    terms.push_back(side(t.code.distance, true));
  const long long D = averaged_bound(d(1, true), d(2, true),
                                     d(0, true) >= kInf ? kInf : (q - s - 1) * d(0, true), terms, q);
  r.D_value = clamp_int(D);

  long long lower;
  if (s == 0) {
    r.case_tag = "S-empty";
    lower = min_of({d(3, true), d(4, true), D});
  } else if (q == 2) {
    r.case_tag = "q2-S-nonempty";
    lower = min_of({d(3, true), d(4, true), d(5, true), D});
  } else {
    r.case_tag = "q-odd-S-nonempty";
    lower = min_of({d(3, true), d(4, true), std::max(d(1, true), d(2, true))});
  }
  r.lower = clamp_int(lower);
  r.upper = clamp_int(std::min(d(3, false), d(4, false)));
  if (r.upper == kInfinity)
    r.notes.push_back("upper bound vacuous: both gcd(h, f_0) and gcd(h, f_1) are trivial");
  return r;
}

BoundReport theorem6_dual_bounds(const QcOneGen &code, const BoundOptions &opts) {
  require_bound_input(code);
  if (!dual_hypothesis_holds(code))
    throw PreconditionError("dual bounds need gcd(f_0, g) = 1");
  const PrimeField &F = code.field();
  const int n = code.n();
  const int q = F.p();
  const PlainPoly X = PlainPoly::cyclotomic_modulus(F, n);
  const PlainPoly &g = code.g().poly();
  const PlainPoly gd = euclidean_dual_generator(g, n);
  const PlainPoly b0 = bar(code.f(0)).to_plain();
  const PlainPoly b1 = bar(code.f(1)).to_plain();
  const PlainPoly g1 = plain_gcd(b1, gd);
  const PlainPoly x0 = plain_gcd(X, b0);
  const PlainPoly x1 = plain_gcd(X, b1);

  BoundReport r;
  r.kind = BoundReport::Kind::dual;
  r.p = q;
  r.n = n;
  r.components.push_back(make_component("C0", CyclicCode(DivisorPoly(gd, n)), opts));
  r.components.push_back(make_component("C1", cyclic_from_element(b0, n), opts));
  r.components.push_back(make_component("C2", CyclicCode(DivisorPoly(g1, n)), opts));
  r.components.push_back(make_component("C3", CyclicCode(DivisorPoly(exact_div(X, x1), n)), opts));
  const PlainPoly c4 = exact_div(X, x0);
  r.components.push_back(make_component("C4", CyclicCode(DivisorPoly(c4, n)), opts));
  r.components.push_back(make_component("C5", CyclicCode(DivisorPoly(plain_gcd(c4, gd), n)), opts));
  // lcm(bar f_0, d) and lcm(gcd(x^n-1, bar f_0), d) generate the same ideal for d | x^n-1.
  r.components.push_back(make_component("C6", CyclicCode(DivisorPoly(plain_lcm(x0, g1), n)), opts));
  r.components.push_back(make_component("C7", cyclic_from_element(b0 * exact_div(gd, g1), n), opts));

  for (int a = 1; a < q; ++a) {
    const Elem alpha = static_cast<Elem>(a);
    const PlainPoly I = plain_gcd(b1 + b0.scaled(alpha), gd);
    if (I.is_one())
      continue;
    r.S.push_back({alpha, I, make_component("I", CyclicCode(DivisorPoly(I, n)), opts)});
  }
  note_inexact(r);
  note_zero_terms(r);

  const auto d = [&](int i, bool low) { return side(r.components[i].distance, low); };
  const int s = static_cast<int>(r.S.size());
  std::vector<long long> terms;
  for (const auto &t : r.S)
    terms.push_back(side(t.code.distance, true));
  // The gcd-free classes contribute the full space [1], of distance 1 each.
  const long long D = averaged_bound(d(1, true), d(2, true), q - s - 1, terms, q);
  r.D_value = clamp_int(D);

  // Words (c', 0) outside C3 exist exactly when [g^perp] and [bar f_1] meet
  // nontrivially; only then is C7 needed. g | bar f_1 alone does not rule
  // them out unless x^n - 1 = g g^perp.
  const bool disjoint = plain_lcm(gd, x1) == X;
  if (disjoint != divides(g, b1))
    r.notes.push_back(disjoint ? "C7 omitted although g does not divide bar f_1"
                               : "C7 kept although g divides bar f_1: [g^perp] and [bar f_1] intersect");
  const long long d7 = disjoint ? kInf : d(7, true);
  long long lower;
  if (s == 0) {
    lower = min_of({d(3, true), d(5, true), d7, D});
    r.case_tag = "S-empty";
  } else if (q == 2) {
    lower = min_of({d(3, true), d(5, true), d(6, true), d7, D});
    r.case_tag = "q2-S-nonempty";
  } else {
    lower = min_of({d(3, true), d(5, true), d7, std::max(d(1, true), d(2, true))});
    r.case_tag = "q-odd-S-nonempty";
  }
  r.case_tag += disjoint ? "/gperp-f1bar-disjoint" : "/gperp-f1bar-intersect";
  r.lower = clamp_int(lower);
  r.upper = clamp_int(min_of({d(0, false), d(3, false), d(4, false)}));
  return r;
}

} // namespace qcsym
