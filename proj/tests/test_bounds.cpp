/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "oracle.hpp"
#include "sweeps.hpp"

#include "qcsym/bounds.hpp"
#include "qcsym/catalog.hpp"
#include "qcsym/errors.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qcsym;
using oracle::Vec;
using sweeps::dual_distance;
using sweeps::SweepOutcome;
using sweeps::sweep;

namespace {

const Catalog &catalog() {
  static const Catalog c = load_catalog();
  return c;
}

int dist(const BoundReport &r, const std::string &name) { return r.component(name).distance.value; }
int dim(const BoundReport &r, const std::string &name) { return r.component(name).dim; }

void report(const SweepOutcome &o) {
  for (std::size_t i = 0; i < std::min<std::size_t>(o.violations.size(), 10); ++i)
    ADD_FAILURE() << o.violations[i];
  EXPECT_TRUE(o.violations.empty()) << o.violations.size() << " sandwich violations";
}

} // namespace

TEST(PrimalBounds, Length21Example) {
  const BoundReport r = theorem4_bounds(catalog().entry("example-2").one());
  const std::vector<std::pair<int, int>> expect{{15, 3}, {14, 4}, {6, 7}, {1, 21}, {9, 8}, {5, 10}};
  for (int i = 0; i < 6; ++i) {
    const std::string name = "C" + std::to_string(i);
    EXPECT_EQ(dim(r, name), expect[i].first) << name;
    EXPECT_EQ(dist(r, name), expect[i].second) << name;
  }
  const PrimeField F(2);
  EXPECT_EQ(r.component("C4").generator, PlainPoly::from_ints(F, {1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1}));
  EXPECT_EQ(r.component("C5").generator,
            PlainPoly::from_ints(F, {1, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1}));
  ASSERT_EQ(r.S.size(), 1u);
  EXPECT_EQ(r.S[0].gcd, PlainPoly::from_ints(F, {1, 0, 0, 0, 1, 1}));
  EXPECT_EQ(r.S[0].code.generator, PlainPoly::from_ints(F, {1, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1}));
  EXPECT_EQ(r.S[0].code.dim, 10);
  EXPECT_EQ(r.S[0].code.distance.value, 5);
  EXPECT_EQ(r.case_tag, "q2-S-nonempty");
  EXPECT_EQ(r.lower, 8);
  EXPECT_EQ(r.upper, 8);
  EXPECT_TRUE(r.exact);
}

TEST(PrimalBounds, Length31Example) {
  const BoundReport r = theorem4_bounds(catalog().entry("example-3").one());
  const std::vector<std::pair<int, int>> expect{{26, 3}, {16, 7}, {25, 4}, {10, 12}, {1, 31}};
  for (int i = 0; i < 5; ++i) {
    const std::string name = "C" + std::to_string(i);
    EXPECT_EQ(dim(r, name), expect[i].first) << name;
    EXPECT_EQ(dist(r, name), expect[i].second) << name;
  }
  EXPECT_TRUE(r.S.empty());
  EXPECT_EQ(r.case_tag, "S-empty");
  EXPECT_EQ(r.D_value, 7);
  EXPECT_EQ(r.lower, 7);
  EXPECT_EQ(r.upper, 12);
}

TEST(DualBounds, Length15Example) {
  const BoundReport r = theorem6_dual_bounds(catalog().entry("example-4").one());
  const std::vector<std::pair<int, int>> expect{{4, 8},  {9, 4},  {11, 3}, {8, 4},
                                                {6, 6}, {10, 4}, {5, 7}};
  for (int i = 0; i < 7; ++i) {
    const std::string name = "C" + std::to_string(i);
    EXPECT_EQ(dim(r, name), expect[i].first) << name;
    EXPECT_EQ(dist(r, name), expect[i].second) << name;
  }
  const PrimeField F(2);
  EXPECT_EQ(r.component("C6").generator, PlainPoly::from_ints(F, {1, 1, 1, 0, 1, 1, 0, 0, 1, 0, 1}));
  ASSERT_EQ(r.S.size(), 1u);
  EXPECT_EQ(r.S[0].gcd, PlainPoly::from_ints(F, {1, 1}));
  EXPECT_EQ(r.S[0].code.dim, 14);
  EXPECT_EQ(r.S[0].code.distance.value, 2);
  EXPECT_EQ(r.lower, 4);
  EXPECT_EQ(r.upper, 4);
  EXPECT_EQ(r.case_tag, "q2-S-nonempty/gperp-f1bar-disjoint");
  EXPECT_EQ(r.components.size(), 8u);
}

TEST(DualBounds, DivisibilityByGDoesNotRemoveC7) {
  // g = x - 1 over F_3, n = 3: g | bar f_1, yet (1 | 0) lies in the dual.
  const PrimeField F(3);
  const QcOneGen code = QcOneGen::create(DivisorPoly(PlainPoly::from_ints(F, {2, 1}), 3),
                                         {RingElement::one(F, 3), oracle::ring(F, {2, 2, 2})});
  ASSERT_TRUE(divides(code.g().poly(), bar(code.f(1)).to_plain()));
  const int exact = dual_distance(code);
  EXPECT_EQ(exact, 1);
  const BoundReport r = theorem6_dual_bounds(code);
  EXPECT_EQ(r.case_tag, "S-empty/gperp-f1bar-intersect");
  EXPECT_LE(r.lower, exact);
  EXPECT_GE(r.upper, exact);
  // Dropping C7 on g | bar f_1 alone would claim 2.
  const int without_c7 = std::min({dist(r, "C3"), dist(r, "C5"), r.D_value});
  EXPECT_EQ(without_c7, 2);
  EXPECT_EQ(dist(r, "C7"), 1);
}

TEST(Bounds, TrivialUnitGenerators) {
  // g = 1, f0 = f1 = 1: the diagonal code {(a, a)} of distance 1.
  const PrimeField F(2);
  const int n = 5;
  const QcOneGen code = QcOneGen::create(DivisorPoly(PlainPoly::one(F), n),
                                         {RingElement::one(F, n), RingElement::one(F, n)});
  const BoundReport r = theorem4_bounds(code);
  EXPECT_LE(r.lower, 1);
  EXPECT_GE(r.upper, 1);
  EXPECT_EQ(dist(r, "C0"), 1);
}

TEST(Bounds, Preconditions) {
  const PrimeField F(2);
  const DivisorPoly g(PlainPoly::one(F), 3);
  const RingElement one = RingElement::one(F, 3);
  const QcOneGen four = QcOneGen::create(g, {one, one, one, one});
  EXPECT_THROW(theorem4_bounds(four), PreconditionError);
  EXPECT_THROW(theorem6_dual_bounds(four), PreconditionError);
  const RingElement s(PlainPoly::from_ints(F, {1, 1}), 3);
  const QcOneGen waived = QcOneGen::create(g, {s, s}, true);
  EXPECT_THROW(theorem4_bounds(waived), PreconditionError);
  const QcOneGen nohyp = QcOneGen::create(DivisorPoly(PlainPoly::from_ints(F, {1, 1}), 3), {s, one});
  EXPECT_NO_THROW(theorem4_bounds(nohyp));
  EXPECT_THROW(theorem6_dual_bounds(nohyp), PreconditionError);
}

TEST(Bounds, Deterministic) {
  const QcOneGen code = catalog().entry("example-2").one();
  DistanceCache cache;
  BoundOptions with_cache;
  with_cache.cache = &cache;
  const BoundReport a = theorem4_bounds(code), b = theorem4_bounds(code, with_cache),
                    c = theorem4_bounds(code, with_cache);
  for (const BoundReport *x : {&b, &c}) {
    EXPECT_EQ(a.lower, x->lower);
    EXPECT_EQ(a.upper, x->upper);
    EXPECT_EQ(a.D_value, x->D_value);
    EXPECT_EQ(a.case_tag, x->case_tag);
    EXPECT_EQ(a.notes, x->notes);
  }
  EXPECT_GT(cache.size(), 0u);
}

TEST(Bounds, ZeroCode) {
  const PrimeField F(3);
  const QcOneGen code =
      QcOneGen::create(DivisorPoly(PlainPoly::cyclotomic_modulus(F, 4), 4),
                       {RingElement::one(F, 4), RingElement::monomial(F, 4, 1, 1)});
  const BoundReport r = theorem4_bounds(code);
  EXPECT_EQ(r.case_tag, "zero-code");
  EXPECT_EQ(r.lower, kInfinity);
}

TEST(Bounds, InexactComponentsWidenTheInterval) {
  const QcOneGen code = catalog().entry("example-3").one();
  BoundOptions tight;
  tight.exhaustive_limit = 1;
  tight.iset_budget = 40;
  const BoundReport r = theorem4_bounds(code, tight);
  EXPECT_FALSE(r.exact);
  EXPECT_FALSE(r.notes.empty());
  EXPECT_LE(r.lower, 11);
  EXPECT_GE(r.upper, 11);
}

TEST(Sandwich, BinaryUpToLength11) {
  const SweepOutcome o = sweep(2, 11, 100, 1);
  std::cout << "binary: " << o.primal_cases << " primal, " << o.dual_cases << " dual cases, "
            << o.c7_rule_misses << " where g | bar f_1 alone would overshoot\n";
  report(o);
  EXPECT_EQ(o.primal_tags.count("S-empty") + o.primal_tags.count("q2-S-nonempty"), 2u);
}

TEST(Sandwich, TernaryUpToLength7) {
  const SweepOutcome o = sweep(3, 7, 100, 2);
  std::cout << "ternary: " << o.primal_cases << " primal, " << o.dual_cases << " dual cases, "
            << o.c7_rule_misses << " where g | bar f_1 alone would overshoot\n";
  report(o);
  EXPECT_EQ(o.primal_tags.count("q-odd-S-nonempty"), 1u);
}

TEST(Sandwich, BranchCoverage) {
  std::set<std::string> primal, dual;
  for (auto [p, n, seed] : {std::tuple{2, 9, 5}, std::tuple{3, 6, 6}, std::tuple{5, 4, 7}}) {
    const SweepOutcome o = sweep(p, n, 30, static_cast<std::uint64_t>(seed));
    report(o);
    primal.insert(o.primal_tags.begin(), o.primal_tags.end());
    dual.insert(o.dual_tags.begin(), o.dual_tags.end());
  }
  for (const char *t : {"S-empty", "q2-S-nonempty", "q-odd-S-nonempty"})
    EXPECT_EQ(primal.count(t), 1u) << t;
  int covered = 0;
  for (const char *base : {"S-empty", "q2-S-nonempty", "q-odd-S-nonempty"})
    for (const char *tail : {"/gperp-f1bar-disjoint", "/gperp-f1bar-intersect"})
      covered += static_cast<int>(dual.count(std::string(base) + tail));
  EXPECT_GE(covered, 4);
  std::cout << "dual branches covered: " << covered << " of 6\n";
}
