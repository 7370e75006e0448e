/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/qc.hpp"

#include "qcsym/errors.hpp"

#include <string>

namespace qcsym {

// ---------------------------------------------------------------------------
// Symplectic vectors

SympVector::SympVector(PrimeField field, FpRowVector entries)
    : field_(field), entries_(std::move(entries)) {
  if (entries_.cols() % 2 != 0)
    throw StructuralError("symplectic vector needs even length, got " +
                          std::to_string(entries_.cols()));
}

Elem symplectic_inner(const SympVector &u, const SympVector &v) {
  if (!(u.field() == v.field()) || u.half() != v.half())
    throw StructuralError("symplectic vectors of different shapes");
  const PrimeField &f = u.field();
  const int N = u.half();
  const auto &a = u.entries();
  const auto &b = v.entries();
  long long acc = 0;
  for (int i = 0; i < N; ++i)
    acc += static_cast<long long>(a(i)) * b(N + i) - static_cast<long long>(a(N + i)) * b(i);
  return f.reduce(acc);
}

int symplectic_weight(const SympVector &c) {
  const int N = c.half();
  int w = 0;
  for (int i = 0; i < N; ++i)
    w += (c.entries()(i) != 0 || c.entries()(N + i) != 0);
  return w;
}

int hamming_weight(const FpRowVector &c) { return static_cast<int>((c.array() != 0).count()); }

Elem euclidean_inner(const RingElement &a, const RingElement &b) {
  if (!(a.field() == b.field()) || a.n() != b.n())
    throw StructuralError("inner product of elements from different rings");
  long long acc = 0;
  for (int i = 0; i < a.n(); ++i)
    acc += static_cast<long long>(a[i]) * b[i];
  return a.field().reduce(acc);
}

// ---------------------------------------------------------------------------
// QC codes

QcOneGen QcOneGen::create(const DivisorPoly &g, std::vector<RingElement> f,
                          bool allow_gcd_violation) {
  if (f.empty() || f.size() % 2 != 0)
    throw StructuralError("QC index must be even and positive, got " + std::to_string(f.size()));
  for (const auto &fj : f)
    if (!(fj.field() == g.field()) || fj.n() != g.n())
      throw StructuralError("generator polynomial f_j not in the ring of g");
  PlainPoly acc = g.cofactor();
  for (const auto &fj : f)
    acc = plain_gcd(acc, fj.to_plain());
  const bool ok = acc.is_one();
  if (!ok && !allow_gcd_violation)
    throw PreconditionError("gcd(f_0, ..., f_{l-1}, (x^n-1)/g) = " + acc.str() + ", expected 1");
  return QcOneGen(g, std::move(f), ok);
}

QcOneGen QcOneGen::normalized(const DivisorPoly &g, std::vector<RingElement> f) {
  if (f.empty())
    throw StructuralError("QC index must be even and positive, got 0");
  PlainPoly gen = g.poly();
  const int n = g.n();
  for (;;) {
    PlainPoly d = exact_div(PlainPoly::cyclotomic_modulus(g.field(), n), gen);
    for (const auto &fj : f)
      d = plain_gcd(d, fj.to_plain());
    if (d.is_one())
      break;
    gen = gen * d;
    for (auto &fj : f)
      fj = RingElement(exact_div(fj.to_plain(), d), n);
  }
  return create(DivisorPoly(gen, n), std::move(f));
}

RingElement QcOneGen::block(int j) const { return RingElement(g_.poly(), n()) * f_.at(j); }

QcMultiGen::QcMultiGen(std::vector<QcOneGen> rows) : rows_(std::move(rows)) {
  if (rows_.empty())
    throw StructuralError("a multi-generator code needs at least one generator");
  for (const auto &r : rows_)
    if (!(r.field() == rows_.front().field()) || r.n() != rows_.front().n() ||
        r.ell() != rows_.front().ell())
      throw StructuralError("generators disagree on field, length or index");
}

RingElement pairing_polynomial(const QcOneGen &r, const QcOneGen &s) {
  const int m = r.ell() / 2;
  RingElement lambda(r.field(), r.n());
  for (int i = 0; i < m; ++i)
    lambda = lambda + s.f(i) * bar(r.f(m + i)) - s.f(m + i) * bar(r.f(i));
  return lambda;
}

namespace {

// Decide g_r^perp | g_s * lambda on the residue; valid because g_r^perp | x^n - 1.
SsoVerdict pair_verdict(const QcOneGen &r, const QcOneGen &s) {
  const PlainPoly dual = euclidean_dual_generator(r.g().poly(), r.n());
  const RingElement product = RingElement(s.g().poly(), s.n()) * pairing_polynomial(r, s);
  PlainPoly rem = divmod(product.to_plain(), dual).remainder;
  SsoVerdict v;
  v.self_orthogonal = rem.is_zero();
  if (!v.self_orthogonal)
    v.witness = std::move(rem);
  return v;
}

} // namespace

SsoVerdict check_sso_one_gen(const QcOneGen &code) { return pair_verdict(code, code); }

SsoVerdict check_sso_multi_gen(const QcMultiGen &code) {
  const auto &rows = code.rows();
  SsoVerdict last;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t s = 0; s < rows.size(); ++s) {
      SsoVerdict v = pair_verdict(rows[r], rows[s]);
      if (!v.self_orthogonal) {
        v.r = static_cast<int>(r);
        v.s = static_cast<int>(s);
        return v;
      }
      last = std::move(v);
    }
  return last;
}

FpMatrix generator_matrix(const QcOneGen &code, bool reduced) {
  const int n = code.n();
  FpMatrix g(n, static_cast<Eigen::Index>(code.ell()) * n);
  for (int j = 0; j < code.ell(); ++j)
    g.middleCols(static_cast<Eigen::Index>(j) * n, n) = circulant_rows(code.block(j), n);
  if (!reduced)
    return g;
  return row_reduce(g, code.field()).rows;
}

FpMatrix generator_matrix(const QcMultiGen &code, bool reduced) {
  FpMatrix g(0, static_cast<Eigen::Index>(code.ell()) * code.n());
  for (const auto &row : code.rows())
    g = vstack(g, generator_matrix(row, false));
  if (!reduced)
    return g;
  return row_reduce(g, code.field()).rows;
}

FpMatrix symplectic_complement(const FpMatrix &rows, const PrimeField &field) {
  if (rows.cols() % 2 != 0)
    throw StructuralError("symplectic complement needs an even length");
  const Eigen::Index half = rows.cols() / 2;
  // v is orthogonal to u iff (-u'', u') . (v', v'') = 0.
  FpMatrix functional(rows.rows(), rows.cols());
  functional.leftCols(half) =
      rows.rightCols(half).unaryExpr([&](Elem v) { return field.neg(v); });
  functional.rightCols(half) = rows.leftCols(half);
  return null_space(functional, field);
}

// ---------------------------------------------------------------------------
// Index-2 structure

namespace {

void require_index2(const QcOneGen &code) {
  if (code.ell() != 2)
    throw PreconditionError("operation defined for index 2 only, got index " +
                            std::to_string(code.ell()));
}

FpMatrix half_block(const CyclicCode &c, bool left) {
  const int n = c.n();
  FpMatrix out(c.dim(), 2 * n);
  out.setZero();
  if (c.dim() > 0)
    out.middleCols(left ? 0 : n, n) = c.generator_matrix();
  return out;
}

} // namespace

Index2Decomposition decompose_index2(const QcOneGen &code) {
  require_index2(code);
  const PrimeField &f = code.field();
  const int n = code.n();
  const PlainPoly modulus = PlainPoly::cyclotomic_modulus(f, n);
  const PlainPoly h = code.parity_check();
  const PlainPoly gcd0 = plain_gcd(h, code.f(0).to_plain());
  const PlainPoly gcd1 = plain_gcd(h, code.f(1).to_plain());

  Index2Decomposition d{CyclicCode(DivisorPoly(exact_div(modulus, gcd1), n)),
                        CyclicCode(DivisorPoly(exact_div(modulus, gcd0), n)),
                        0,
                        gcd1.degree(),
                        gcd0.degree(),
                        FpMatrix(0, 2 * n)};
  d.t = code.dim() - d.t_a - d.t_b;
  if (d.t < 0)
    throw ConsistencyError("negative circulant block size; gcd condition violated");

  FpMatrix circ(d.t, 2 * n);
  if (d.t > 0) {
    circ.leftCols(n) = circulant_rows(code.block(0), d.t);
    circ.rightCols(n) = circulant_rows(code.block(1), d.t);
  }
  d.matrix = vstack(vstack(circ, half_block(d.second_half, false)), half_block(d.first_half, true));

  const int r = rank(d.matrix, f);
  if (r != code.dim())
    throw ConsistencyError("decomposition has rank " + std::to_string(r) + ", expected " +
                           std::to_string(code.dim()));
  const FpMatrix g = generator_matrix(code, true);
  if (rank(vstack(g, d.matrix), f) != code.dim())
    throw ConsistencyError("decomposition spans a different row space");
  return d;
}

FpMatrix DualTwoGen::generator_matrix(bool reduced) const {
  const int n = this->n();
  FpMatrix top(n, 2 * n);
  top.leftCols(n) = circulant_rows(f0_bar_, n);
  top.rightCols(n) = circulant_rows(f1_bar_, n);
  const CyclicCode dual_code(DivisorPoly(g_dual_, n));
  const FpMatrix g = vstack(top, half_block(dual_code, false));
  if (!reduced)
    return g;
  return row_reduce(g, field()).rows;
}

bool dual_hypothesis_holds(const QcOneGen &code) {
  return plain_gcd(code.f(0).to_plain(), code.g().poly()).is_one();
}

DualTwoGen symplectic_dual(const QcOneGen &code) {
  require_index2(code);
  if (!dual_hypothesis_holds(code))
    throw PreconditionError("dual construction needs gcd(f_0, g) = 1");
  const int n = code.n();
  DualTwoGen dual(bar(code.f(0)), bar(code.f(1)), euclidean_dual_generator(code.g().poly(), n),
                  n + code.g().degree());
  const FpMatrix gd = dual.generator_matrix(true);
  if (gd.rows() != dual.expected_dim())
    throw ConsistencyError("dual generator matrix has rank " + std::to_string(gd.rows()) +
                           ", expected " + std::to_string(dual.expected_dim()));
  if (!symplectic_orthogonal(generator_matrix(code, true), gd, code.field()))
    throw ConsistencyError("dual generator matrix is not symplectic-orthogonal to the code");
  return dual;
}

DistanceResult symplectic_distance_exhaustive(const FpMatrix &rows, const PrimeField &field,
                                              std::uint64_t budget) {
  return min_weight_exhaustive(rows, field, Weight::symplectic, {budget, 0});
}

bool lemma4_check(const RingElement &fa, const RingElement &fb, const RingElement &fc) {
  return euclidean_inner(fa * fb, fc) == euclidean_inner(fa, bar(fb) * fc);
}

} // namespace qcsym
