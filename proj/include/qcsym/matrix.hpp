/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcsym/field.hpp"

#include <Eigen/Core>

#include <vector>

namespace qcsym {

/// Dense matrix over F_p, entries reduced into [0, p).
using FpMatrix = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using FpRowVector = Eigen::Matrix<Elem, 1, Eigen::Dynamic>;

/// Reduced row echelon form with leftmost pivots; zero rows dropped.
struct Echelon {
  FpMatrix rows;
  std::vector<int> pivots; ///< pivot column of each row, increasing

  int rank() const noexcept { return static_cast<int>(pivots.size()); }
};

Echelon row_reduce(const FpMatrix &m, const PrimeField &field);

inline int rank(const FpMatrix &m, const PrimeField &field) {
  return row_reduce(m, field).rank();
}

/// True when v lies in the row space that produced `basis`.
bool in_row_space(const Echelon &basis, const FpRowVector &v, const PrimeField &field);

/// Basis of {v : m v^T = 0}, one vector per row.
FpMatrix null_space(const FpMatrix &m, const PrimeField &field);

FpMatrix vstack(const FpMatrix &top, const FpMatrix &bottom);

/// Reduce an integer matrix expression entrywise mod p.
template <typename Derived>
FpMatrix reduce_mod(const Eigen::MatrixBase<Derived> &m, const PrimeField &field) {
  const int p = field.p();
  return m.derived()
      .unaryExpr([p](int v) { return static_cast<Elem>(((v % p) + p) % p); })
      .eval();
}

/// a * b over F_p.
template <typename DA, typename DB>
FpMatrix mod_product(const Eigen::MatrixBase<DA> &a, const Eigen::MatrixBase<DB> &b,
                     const PrimeField &field) {
  return reduce_mod(a.template cast<int>() * b.template cast<int>(), field);
}

/// Symplectic Gram matrix a Omega b^T, where rows of length 2N split as (u', u'')
/// and <u, v>_s = u'.v'' - u''.v'.
template <typename DA, typename DB>
FpMatrix symplectic_gram(const Eigen::MatrixBase<DA> &a, const Eigen::MatrixBase<DB> &b,
                         const PrimeField &field) {
  const Eigen::Index half = a.cols() / 2;
  const auto ai = a.template cast<int>();
  const auto bi = b.template cast<int>();
  return reduce_mod(ai.leftCols(half) * bi.rightCols(half).transpose() -
                        ai.rightCols(half) * bi.leftCols(half).transpose(),
                    field);
}

/// Every pair of rows of a and b pairs to zero symplectically.
template <typename DA, typename DB>
bool symplectic_orthogonal(const Eigen::MatrixBase<DA> &a, const Eigen::MatrixBase<DB> &b,
                           const PrimeField &field) {
  if (a.rows() == 0 || b.rows() == 0)
    return true;
  return (symplectic_gram(a, b, field).array() == 0).all();
}

} // namespace qcsym
