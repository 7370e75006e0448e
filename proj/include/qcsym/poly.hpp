/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcsym/field.hpp"

#include <string>
#include <vector>

namespace qcsym {

/// A polynomial over F_p with ascending coefficients and no trailing zeros.
/// The zero polynomial has an empty coefficient list and degree -1.
class PlainPoly {
public:
  explicit PlainPoly(PrimeField field) : field_(field) {}
  /// Reduces every coefficient mod p and trims trailing zeros.
  PlainPoly(PrimeField field, std::vector<Elem> coeffs);
  /// From signed integers, e.g. {-1, 0, 1} for x^2 - 1.
  static PlainPoly from_ints(PrimeField field, const std::vector<int> &coeffs);

  static PlainPoly one(PrimeField field) { return PlainPoly(field, std::vector<Elem>{1}); }
  static PlainPoly monomial(PrimeField field, int degree, Elem coeff = 1);
  /// x^n - 1.
  static PlainPoly cyclotomic_modulus(PrimeField field, int n);

  const PrimeField &field() const noexcept { return field_; }
  const std::vector<Elem> &coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Elem coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Elem{0};
  }
  Elem lead() const noexcept { return coeffs_.empty() ? Elem{0} : coeffs_.back(); }

  PlainPoly monic() const;
  PlainPoly scaled(Elem c) const;

  /// "1+x^2+2x^5" style rendering, "0" for the zero polynomial.
  std::string str() const;

  friend PlainPoly operator+(const PlainPoly &a, const PlainPoly &b);
  friend PlainPoly operator-(const PlainPoly &a, const PlainPoly &b);
  friend PlainPoly operator*(const PlainPoly &a, const PlainPoly &b);
  friend bool operator==(const PlainPoly &a, const PlainPoly &b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

private:
  void trim();

  PrimeField field_;
  std::vector<Elem> coeffs_;
};

struct DivMod {
  PlainPoly quotient;
  PlainPoly remainder;
};

/// Long division; throws StructuralError on a zero divisor or field mismatch.
DivMod divmod(const PlainPoly &a, const PlainPoly &b);
/// Quotient a / b; throws DivisibilityError carrying the remainder if b does not divide a.
PlainPoly exact_div(const PlainPoly &a, const PlainPoly &b);
/// True when divisor | a. A zero divisor divides only zero.
bool divides(const PlainPoly &divisor, const PlainPoly &a);

/// Monic gcd; gcd(a, 0) = monic(a). Throws Error when both are zero.
PlainPoly plain_gcd(const PlainPoly &a, const PlainPoly &b);
/// Monic lcm; lcm(a, 0) = 0.
PlainPoly plain_lcm(const PlainPoly &a, const PlainPoly &b);

/// Monic generator of the Euclidean dual of the cyclic code [g] of length n:
/// h_0^{-1} x^{deg h} h(1/x) with h = (x^n - 1) / g.
PlainPoly euclidean_dual_generator(const PlainPoly &g, int n);

/// A residue class of F_p[x]/(x^n - 1), stored as exactly n coefficients.
class RingElement {
public:
  RingElement(PrimeField field, int n);
  RingElement(PrimeField field, int n, std::vector<Elem> coeffs);
  /// Reduces a plain polynomial mod x^n - 1.
  RingElement(const PlainPoly &poly, int n);

  static RingElement one(PrimeField field, int n);
  static RingElement monomial(PrimeField field, int n, int degree, Elem coeff = 1);

  const PrimeField &field() const noexcept { return field_; }
  int n() const noexcept { return static_cast<int>(coeffs_.size()); }
  const std::vector<Elem> &coeffs() const noexcept { return coeffs_; }
  Elem operator[](int i) const noexcept { return coeffs_[i]; }
  bool is_zero() const noexcept;

  /// The canonical representative of degree < n.
  PlainPoly to_plain() const { return PlainPoly(field_, coeffs_); }
  /// x^k * this, i.e. a cyclic shift by k positions.
  RingElement shifted(int k) const;
  RingElement scaled(Elem c) const;

  std::string str() const { return to_plain().str(); }

  friend RingElement operator+(const RingElement &a, const RingElement &b);
  friend RingElement operator-(const RingElement &a, const RingElement &b);
  friend RingElement operator*(const RingElement &a, const RingElement &b);
  friend bool operator==(const RingElement &a, const RingElement &b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

private:
  PrimeField field_;
  std::vector<Elem> coeffs_;
};

/// Cyclic convolution in R_{p,n}. Throws StructuralError on mismatched rings.
RingElement ring_mul(const RingElement &a, const RingElement &b);

/// Ring reciprocal: coefficient 0 stays, coefficient j moves to n - j.
RingElement bar(const RingElement &f);

/// A monic divisor of x^n - 1, checked on construction.
class DivisorPoly {
public:
  /// Normalizes to monic; throws DivisibilityError if poly does not divide x^n - 1.
  DivisorPoly(const PlainPoly &poly, int n);

  const PlainPoly &poly() const noexcept { return poly_; }
  int n() const noexcept { return n_; }
  int degree() const noexcept { return poly_.degree(); }
  const PrimeField &field() const noexcept { return poly_.field(); }
  /// (x^n - 1) / g.
  PlainPoly cofactor() const;

private:
  PlainPoly poly_;
  int n_;
};

} // namespace qcsym
