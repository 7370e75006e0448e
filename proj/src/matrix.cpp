/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/matrix.hpp"

#include "qcsym/errors.hpp"

namespace qcsym {

Echelon row_reduce(const FpMatrix &m, const PrimeField &field) {
  FpMatrix a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index sel = r;
    while (sel < rows && a(sel, c) == 0)
      ++sel;
    if (sel == rows)
      continue;
    a.row(r).swap(a.row(sel));
    const Elem inv = field.inv(a(r, c));
    if (inv != 1)
      for (Eigen::Index j = c; j < cols; ++j)
        a(r, j) = field.mul(a(r, j), inv);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0)
        continue;
      const Elem factor = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (a(r, j) != 0)
          a(i, j) = field.sub(a(i, j), field.mul(factor, a(r, j)));
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return {a.topRows(r), std::move(pivots)};
}

bool in_row_space(const Echelon &basis, const FpRowVector &v, const PrimeField &field) {
  if (v.cols() != basis.rows.cols() && basis.rank() > 0)
    throw StructuralError("vector length does not match the row space");
  FpRowVector w = v;
  for (int i = 0; i < basis.rank(); ++i) {
    const Elem c = w(basis.pivots[i]);
    if (c == 0)
      continue;
    for (Eigen::Index j = 0; j < w.cols(); ++j)
      if (basis.rows(i, j) != 0)
        w(j) = field.sub(w(j), field.mul(c, basis.rows(i, j)));
  }
  return (w.array() == 0).all();
}

FpMatrix null_space(const FpMatrix &m, const PrimeField &field) {
  const Echelon e = row_reduce(m, field);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots)
    is_pivot[p] = true;
  FpMatrix out(cols - e.rank(), cols);
  out.setZero();
  Eigen::Index row = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    out(row, free) = 1;
    for (int i = 0; i < e.rank(); ++i)
      out(row, e.pivots[i]) = field.neg(e.rows(i, free));
    ++row;
  }
  return out;
}

FpMatrix vstack(const FpMatrix &top, const FpMatrix &bottom) {
  if (top.rows() == 0)
    return bottom;
  if (bottom.rows() == 0)
    return top;
  if (top.cols() != bottom.cols())
    throw StructuralError("cannot stack matrices with different widths");
  FpMatrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

} // namespace qcsym
