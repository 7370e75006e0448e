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
#include "qcsym/matrix.hpp"
#include "qcsym/poly.hpp"

#include <optional>
#include <vector>

namespace qcsym {

/// A vector of length 2N viewed as (u', u'') for the symplectic form.
class SympVector {
public:
  /// Throws StructuralError when the length is odd.
  SympVector(PrimeField field, FpRowVector entries);

  const PrimeField &field() const noexcept { return field_; }
  int half() const noexcept { return static_cast<int>(entries_.cols() / 2); }
  const FpRowVector &entries() const noexcept { return entries_; }

private:
  PrimeField field_;
  FpRowVector entries_;
};

/// sum_{i<N} (u_i v_{N+i} - u_{N+i} v_i). Throws StructuralError on shape mismatch.
Elem symplectic_inner(const SympVector &u, const SympVector &v);
/// Number of i < N with (c_i, c_{N+i}) != (0, 0).
int symplectic_weight(const SympVector &c);
int hamming_weight(const FpRowVector &c);

/// Euclidean inner product of coefficient vectors.
Elem euclidean_inner(const RingElement &a, const RingElement &b);

/// 1-generator QC code of even index ell generated by (g f_0, ..., g f_{ell-1}).
class QcOneGen {
public:
  /// Validates shapes, even index and gcd(f_0, ..., f_{ell-1}, (x^n-1)/g) = 1.
  /// With `allow_gcd_violation` the gcd condition is recorded but not enforced;
  /// the distance bounds then refuse the code.
  static QcOneGen create(const DivisorPoly &g, std::vector<RingElement> f,
                         bool allow_gcd_violation = false);
  /// Same generator tuple rewritten as (g d) (f_j / d) until the gcd condition
  /// holds, where d = gcd(f_0, ..., f_{ell-1}, h). The code is unchanged.
  static QcOneGen normalized(const DivisorPoly &g, std::vector<RingElement> f);

  const PrimeField &field() const noexcept { return g_.field(); }
  int n() const noexcept { return g_.n(); }
  int ell() const noexcept { return static_cast<int>(f_.size()); }
  const DivisorPoly &g() const noexcept { return g_; }
  const std::vector<RingElement> &f() const noexcept { return f_; }
  const RingElement &f(int j) const { return f_.at(j); }
  /// (x^n - 1) / g.
  PlainPoly parity_check() const { return g_.cofactor(); }
  int dim() const noexcept { return n() - g_.degree(); }
  bool gcd_condition_holds() const noexcept { return gcd_ok_; }
  /// g f_j in R_{p,n}.
  RingElement block(int j) const;

private:
  QcOneGen(DivisorPoly g, std::vector<RingElement> f, bool gcd_ok)
      : g_(std::move(g)), f_(std::move(f)), gcd_ok_(gcd_ok) {}

  DivisorPoly g_;
  std::vector<RingElement> f_;
  bool gcd_ok_;
};

/// h-generator QC code: the sum of h 1-generator codes sharing n and ell.
class QcMultiGen {
public:
  /// Throws StructuralError when the rows disagree on field, n or ell.
  explicit QcMultiGen(std::vector<QcOneGen> rows);

  const std::vector<QcOneGen> &rows() const noexcept { return rows_; }
  const PrimeField &field() const noexcept { return rows_.front().field(); }
  int n() const noexcept { return rows_.front().n(); }
  int ell() const noexcept { return rows_.front().ell(); }

private:
  std::vector<QcOneGen> rows_;
};

struct SsoVerdict {
  bool self_orthogonal = false;
  /// Remainder of g_s Lambda_{r,s} modulo g_r^{perp}; zero when orthogonal.
  std::optional<PlainPoly> witness;
  /// First failing ordered generator pair (0-based), multi-generator only.
  int r = -1;
  int s = -1;
};

/// Lambda_{r,s} = sum_i (f_{s,i} bar(f_{r,m+i}) - f_{s,m+i} bar(f_{r,i})), m = ell/2.
RingElement pairing_polynomial(const QcOneGen &r, const QcOneGen &s);

/// Symplectic self-orthogonality by g^{perp_e} | g Lambda_1 on residues.
SsoVerdict check_sso_one_gen(const QcOneGen &code);
/// g_r^{perp_e} | g_s Lambda_{r,s} for every ordered pair (r, s).
SsoVerdict check_sso_multi_gen(const QcMultiGen &code);

/// Stacked circulant blocks; with `reduced` the reduced echelon basis instead.
FpMatrix generator_matrix(const QcOneGen &code, bool reduced = true);
FpMatrix generator_matrix(const QcMultiGen &code, bool reduced = true);

/// Generic symplectic dual basis of a row space of length 2N.
FpMatrix symplectic_complement(const FpMatrix &rows, const PrimeField &field);

/// Index-2 decomposition: a t-row circulant block in both halves, then
/// (0 | [ (x^n-1)/gcd(h, f_0) ]) with t_b rows and ([ (x^n-1)/gcd(h, f_1) ] | 0)
/// with t_a rows.
struct Index2Decomposition {
  CyclicCode first_half;  ///< codewords (c', 0): [(x^n-1)/gcd(h, f_1)], dim t_a
  CyclicCode second_half; ///< codewords (0, c''): [(x^n-1)/gcd(h, f_0)], dim t_b
  int t = 0;
  int t_a = 0;
  int t_b = 0;
  FpMatrix matrix;
};

/// Throws ConsistencyError if the block matrix does not span the code.
Index2Decomposition decompose_index2(const QcOneGen &code);

/// Symplectic dual of an index-2 1-generator code when gcd(f_0, g) = 1:
/// the 2-generator code of (bar f_0, bar f_1) and (0, g^{perp_e}).
class DualTwoGen {
public:
  DualTwoGen(RingElement f0_bar, RingElement f1_bar, PlainPoly g_dual, int expected_dim)
      : f0_bar_(std::move(f0_bar)), f1_bar_(std::move(f1_bar)), g_dual_(std::move(g_dual)),
        expected_dim_(expected_dim) {}

  const PrimeField &field() const noexcept { return f0_bar_.field(); }
  int n() const noexcept { return f0_bar_.n(); }
  const RingElement &f0_bar() const noexcept { return f0_bar_; }
  const RingElement &f1_bar() const noexcept { return f1_bar_; }
  const PlainPoly &g_dual() const noexcept { return g_dual_; }
  /// n + deg g.
  int expected_dim() const noexcept { return expected_dim_; }

  FpMatrix generator_matrix(bool reduced = true) const;

private:
  RingElement f0_bar_;
  RingElement f1_bar_;
  PlainPoly g_dual_;
  int expected_dim_;
};

/// True when gcd(f_0, g) = 1, i.e. gcd(bar f_0, bar g) = 1. This is what makes
/// (bar f_0, bar f_1) and (0, g^{perp_e}) span n + deg g dimensions; the weaker
/// gcd(bar f_0, g) = 1 is not enough when g is not self-reciprocal
/// (g = 1 + x + x^3, f_0 = 1 + x^2 + x^6, f_1 = 1 + x, n = 7 gives rank 7).
bool dual_hypothesis_holds(const QcOneGen &code);

/// Throws PreconditionError unless ell = 2 and gcd(f_0, g) = 1; throws
/// ConsistencyError if the rank or the zero Gram product check fails.
DualTwoGen symplectic_dual(const QcOneGen &code);

/// Exact minimum symplectic weight over the row space; BudgetError past budget.
DistanceResult symplectic_distance_exhaustive(const FpMatrix &rows, const PrimeField &field,
                                              std::uint64_t budget = kDefaultBudget);

/// <[fa fb], [fc]>_e == <[fa], [bar(fb) fc]>_e.
bool lemma4_check(const RingElement &fa, const RingElement &fb, const RingElement &fc);

} // namespace qcsym
