/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "oracle.hpp"

#include "qcsym/catalog.hpp"
#include "qcsym/errors.hpp"
#include "qcsym/qecc.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qcsym;
using oracle::Vec;

namespace {

const Catalog &catalog() {
  static const Catalog c = load_catalog();
  return c;
}

std::set<std::array<int, 3>> triples(const std::vector<QeccParams> &ps) {
  std::set<std::array<int, 3>> out;
  for (const auto &p : ps)
    out.insert({p.n, p.k, p.d()});
  return out;
}

struct BruteQecc {
  int k = 0;
  int d = kInfinity;      ///< over dual \ primal
  int d_dual = kInfinity; ///< over all nonzero dual words
};

/// Scans all 2^{2n} vectors: the dual is every vector orthogonal to the
/// primal rows, primal membership is a lookup in the enumerated primal span.
BruteQecc brute_qecc(const std::vector<Vec> &rows, int n) {
  std::set<Vec> primal;
  oracle::for_each_word(rows, 2, [&](const Vec &w) { primal.insert(w); });
  BruteQecc out;
  int dual_size_log = 0;
  for (long long m = 0; m < (1LL << (2 * n)); ++m) {
    Vec v(2 * n);
    for (int i = 0; i < 2 * n; ++i)
      v[i] = static_cast<int>((m >> i) & 1);
    bool orth = true;
    for (const auto &r : rows)
      orth = orth && oracle::symp(v, r, 2) == 0;
    if (!orth)
      continue;
    ++dual_size_log;
    if (m == 0)
      continue;
    const int w = oracle::symp_weight(v);
    out.d_dual = std::min(out.d_dual, w);
    if (!primal.count(v))
      out.d = std::min(out.d, w);
  }
  int dual_dim = 0;
  while ((1 << dual_dim) < dual_size_log)
    ++dual_dim;
  out.k = dual_dim - n;
  return out;
}

} // namespace

TEST(Propagate, Rules) {
  const auto children = propagate(QeccParams::exactly(40, 5, 10));
  EXPECT_EQ(triples(children), (std::set<std::array<int, 3>>{{40, 4, 10}, {41, 5, 10}, {39, 6, 9}}));
  for (const auto &c : children) {
    EXPECT_EQ(c.provenance.kind, Provenance::Kind::propagated);
    EXPECT_EQ(c.provenance.parent, "[[40,5,10]]");
    EXPECT_GE(c.provenance.rule, 1);
    EXPECT_LE(c.provenance.rule, 3);
  }
}

TEST(Propagate, Guards) {
  EXPECT_EQ(triples(propagate(QeccParams::exactly(5, 0, 3))), (std::set<std::array<int, 3>>{{4, 1, 2}}));
  EXPECT_EQ(triples(propagate(QeccParams::exactly(1, 1, 1))), (std::set<std::array<int, 3>>{{1, 0, 1}, {2, 1, 1}}));
  // d = 1 would reach d = 0.
  EXPECT_EQ(triples(propagate(QeccParams::exactly(6, 2, 1))), (std::set<std::array<int, 3>>{{6, 1, 1}, {7, 2, 1}}));
}

TEST(Propagate, BoundedDistanceShiftsBothEnds) {
  QeccParams p = QeccParams::exactly(20, 3, 6);
  p.exact = false;
  p.d_lower = 4;
  p.d_upper = kInfinity;
  for (const auto &c : propagate(p))
    if (c.provenance.rule == 3) {
      EXPECT_EQ(c.d_lower, 3);
      EXPECT_EQ(c.d_upper, kInfinity);
      EXPECT_FALSE(c.exact);
    }
}

TEST(Closure, FromFortyFiveTen) {
  const auto reach = triples(propagation_closure({QeccParams::exactly(40, 5, 10)}, 6));
  for (const auto &c : catalog().claims)
    if (c.row >= 13 && c.row <= 17)
      EXPECT_TRUE(reach.count(c.qecc)) << "row " << c.row;
  // Rows 19-21 hang off [[42,6,10]] (row 18), which [[40,5,10]] cannot reach.
  EXPECT_FALSE(reach.count({43, 6, 10}));
  const auto both =
      triples(propagation_closure({QeccParams::exactly(40, 5, 10), QeccParams::exactly(42, 6, 10)}, 6));
  for (const auto &c : catalog().claims)
    if (c.row >= 13 && c.row <= 21)
      EXPECT_TRUE(both.count(c.qecc)) << "row " << c.row;
}

TEST(Closure, DepthZeroAndDedupe) {
  const auto roots = propagation_closure({QeccParams::exactly(10, 2, 3)}, 0);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].provenance.kind, Provenance::Kind::constructed);
  const auto deep = propagation_closure({QeccParams::exactly(10, 2, 3)}, 4);
  EXPECT_EQ(triples(deep).size(), deep.size());
  // A depth-d closure equals the union of children of the depth-(d-1) closure.
  const auto shallow = propagation_closure({QeccParams::exactly(10, 2, 3)}, 3);
  auto expect = triples(shallow);
  for (const auto &p : shallow)
    for (const auto &c : propagate(p))
      expect.insert({c.n, c.k, c.d()});
  EXPECT_EQ(triples(deep), expect);
}

TEST(ClaimCheck, Verdicts) {
  const QeccParams q = QeccParams::exactly(15, 4, 4);
  EXPECT_EQ(claim_check(q, 15, 4, 4), ClaimVerdict::matches);
  EXPECT_EQ(claim_check(q, 15, 4, 3), ClaimVerdict::exceeds);
  EXPECT_EQ(claim_check(q, 15, 4, 99), ClaimVerdict::below);
  EXPECT_EQ(claim_check(q, 15, 5, 4), ClaimVerdict::below);
  QeccParams b = QeccParams::exactly(40, 5, 8);
  b.exact = false;
  b.d_upper = 10;
  EXPECT_EQ(claim_check(b, 40, 5, 10), ClaimVerdict::untestable_at_budget);
  EXPECT_EQ(claim_check(b, 40, 5, 7), ClaimVerdict::exceeds);
  EXPECT_EQ(claim_check(b, 40, 5, 11), ClaimVerdict::below);
  EXPECT_STREQ(to_string(ClaimVerdict::untestable_at_budget), "untestable-at-budget");
}

TEST(Params, Rendering) {
  EXPECT_EQ(QeccParams::exactly(15, 4, 4).str(), "[[15,4,4]]");
  QeccParams b = QeccParams::exactly(40, 5, 2);
  b.exact = false;
  b.d_upper = kInfinity;
  EXPECT_EQ(b.str(), "[[40,5,>=2]]");
  b.d_upper = 10;
  EXPECT_EQ(b.str(), "[[40,5,2..10]]");
}

TEST(Crss, Length15Example) {
  const QcOneGen code = catalog().entry("example-4").one();
  const QeccParams q = crss_map(code);
  EXPECT_EQ(q.str(), "[[15,4,4]]");
  EXPECT_TRUE(q.exact);
  ASSERT_TRUE(q.pure.has_value());
  EXPECT_EQ(claim_check(q, 15, 4, 4), ClaimVerdict::matches);
  EXPECT_EQ(q.provenance.kind, Provenance::Kind::constructed);
}

TEST(Crss, OverBudgetReportsDualInterval) {
  CrssOptions opts;
  opts.budget = 1 << 10;
  const QeccParams q = crss_map(catalog().entry("example-4").one(), opts);
  EXPECT_FALSE(q.exact);
  EXPECT_EQ(q.d_lower, 4);
  EXPECT_EQ(q.d_upper, kInfinity);
  EXPECT_EQ(q.dual_lower, 4);
  EXPECT_EQ(q.dual_upper, 4);
  EXPECT_FALSE(q.pure.has_value());
  EXPECT_EQ(claim_check(q, 15, 4, 4), ClaimVerdict::untestable_at_budget);
}

TEST(Crss, RejectsNonSelfOrthogonalAndNonBinary) {
  EXPECT_THROW(crss_map(catalog().entry("example-2").one()), PreconditionError);
  const PrimeField F(3);
  const QcOneGen ternary = QcOneGen::create(DivisorPoly(PlainPoly::one(F), 3),
                                            {RingElement::one(F, 3), RingElement::one(F, 3)});
  EXPECT_THROW(crss_map(ternary), PreconditionError);
}

TEST(Crss, MultiGeneratorZeroLogicalQubits) {
  // ([1],[1]) and ([x],[x]) over n = 2 span the diagonal, which is its own dual.
  const PrimeField F(2);
  const QcOneGen a = QcOneGen::create(DivisorPoly(PlainPoly::one(F), 2), {RingElement::one(F, 2), RingElement::one(F, 2)});
  const QeccParams q = crss_map(QcMultiGen({a, a}));
  EXPECT_EQ(q.n, 2);
  EXPECT_EQ(q.k, 0);
}

TEST(Crss, AgreesWithBruteForceOnSmallCodes) {
  std::mt19937_64 rng(101);
  const PrimeField F(2);
  int checked = 0, impure = 0;
  for (int n = 2; n <= 6; ++n)
    for (const PlainPoly &g : oracle::divisors(F, n))
      for (int trial = 0; trial < 60; ++trial) {
        const Vec f0 = oracle::random_vec(n, 2, rng), f1 = oracle::random_vec(n, 2, rng);
        const QcOneGen code =
            QcOneGen::normalized(DivisorPoly(g, n), {oracle::ring(F, f0), oracle::ring(F, f1)});
        if (!check_sso_one_gen(code).self_orthogonal)
          continue;
        auto rows = oracle::qc_rows(oracle::coeffs(RingElement(g, n)), {f0, f1}, 2);
        const BruteQecc b = brute_qecc(rows, n);
        const QeccParams q = crss_map(code);
        ASSERT_EQ(q.k, n - code.dim());
        ASSERT_EQ(q.k, b.k);
        ASSERT_TRUE(q.exact);
        if (q.k > 0) {
          ASSERT_EQ(q.d(), b.d) << n << " g=" << g.str();
          ASSERT_TRUE(q.pure.has_value());
          ASSERT_EQ(*q.pure, b.d == b.d_dual);
          if (*q.pure)
            ASSERT_EQ(q.d(), q.dual_lower);
          else
            ASSERT_GT(q.d(), q.dual_lower);
          impure += !*q.pure;
        }
        ++checked;
      }
  EXPECT_GT(checked, 50);
  std::cout << checked << " codes, " << impure << " impure\n";
}

TEST(Crss, FromMatricesChecksDimensions) {
  const QcOneGen code = catalog().entry("example-4").one();
  const FpMatrix G = generator_matrix(code);
  EXPECT_THROW(crss_from_matrices(G, G, PrimeField(2)), ConsistencyError);
  const QeccParams q = crss_from_matrices(G, symplectic_complement(G, PrimeField(2)), PrimeField(2));
  EXPECT_EQ(q.str(), "[[15,4,4]]");
}

TEST(Crss, DegenerateNineQubitCode) {
  // Shor's code: weight-2 Z stabilizers, distance 3 outside the stabilizer.
  FpMatrix S = FpMatrix::Zero(8, 18);
  for (int b = 0; b < 3; ++b) {
    S(2 * b, 9 + 3 * b) = S(2 * b, 9 + 3 * b + 1) = 1;
    S(2 * b + 1, 9 + 3 * b + 1) = S(2 * b + 1, 9 + 3 * b + 2) = 1;
  }
  for (int i = 0; i < 6; ++i) {
    S(6, i) = 1;
    S(7, 3 + i) = 1;
  }
  const PrimeField F(2);
  ASSERT_TRUE(symplectic_orthogonal(S, S, F));
  const QeccParams q = crss_from_matrices(S, symplectic_complement(S, F), F);
  EXPECT_EQ(q.str(), "[[9,1,3]]");
  ASSERT_TRUE(q.pure.has_value());
  EXPECT_FALSE(*q.pure);
  EXPECT_EQ(q.dual_lower, 2);
  std::vector<Vec> rows = oracle::rows_of(S);
  const BruteQecc b = brute_qecc(rows, 9);
  EXPECT_EQ(b.d, 3);
  EXPECT_EQ(b.d_dual, 2);
}
