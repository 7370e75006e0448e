/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/poly.hpp"

#include "qcsym/errors.hpp"

#include <algorithm>
#include <utility>

namespace qcsym {

namespace {

void require_same_field(const PrimeField &a, const PrimeField &b) {
  if (!(a == b))
    throw StructuralError("polynomials over different fields");
}

void require_same_ring(const RingElement &a, const RingElement &b) {
  if (!(a.field() == b.field()) || a.n() != b.n())
    throw StructuralError("ring elements from different rings: F_" +
                          std::to_string(a.field().p()) + "[x]/(x^" +
                          std::to_string(a.n()) + "-1) vs F_" +
                          std::to_string(b.field().p()) + "[x]/(x^" +
                          std::to_string(b.n()) + "-1)");
}

} // namespace

// ---------------------------------------------------------------------------
// PlainPoly

PlainPoly::PlainPoly(PrimeField field, std::vector<Elem> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto &c : coeffs_)
    c = static_cast<Elem>(c % field_.p());
  trim();
}

PlainPoly PlainPoly::from_ints(PrimeField field, const std::vector<int> &coeffs) {
  std::vector<Elem> reduced(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), reduced.begin(),
                 [&](int c) { return field.reduce(c); });
  return PlainPoly(field, std::move(reduced));
}

PlainPoly PlainPoly::monomial(PrimeField field, int degree, Elem coeff) {
  std::vector<Elem> c(static_cast<std::size_t>(degree) + 1, 0);
  c[degree] = coeff;
  return PlainPoly(field, std::move(c));
}

PlainPoly PlainPoly::cyclotomic_modulus(PrimeField field, int n) {
  std::vector<Elem> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = field.neg(1);
  c[n] = 1;
  return PlainPoly(field, std::move(c));
}

void PlainPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

PlainPoly PlainPoly::monic() const {
  if (is_zero())
    return *this;
  return scaled(field_.inv(lead()));
}

PlainPoly PlainPoly::scaled(Elem c) const {
  std::vector<Elem> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i] = field_.mul(coeffs_[i], c);
  return PlainPoly(field_, std::move(out));
}

std::string PlainPoly::str() const {
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Elem c = coeffs_[i];
    if (c == 0)
      continue;
    if (!out.empty())
      out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1)
      out += std::to_string(c);
    out += 'x';
    if (i > 1)
      out += '^' + std::to_string(i);
  }
  return out;
}

PlainPoly operator+(const PlainPoly &a, const PlainPoly &b) {
  require_same_field(a.field_, b.field_);
  std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.field_.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return PlainPoly(a.field_, std::move(out));
}

PlainPoly operator-(const PlainPoly &a, const PlainPoly &b) {
  require_same_field(a.field_, b.field_);
  std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.field_.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return PlainPoly(a.field_, std::move(out));
}

PlainPoly operator*(const PlainPoly &a, const PlainPoly &b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero())
    return PlainPoly(a.field_);
  const int p = a.field_.p();
  std::vector<int> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      acc[i + j] = (acc[i + j] + a.coeffs_[i] * b.coeffs_[j]) % p;
  }
  return PlainPoly::from_ints(a.field_, acc);
}

// ---------------------------------------------------------------------------
// Division, gcd, lcm

DivMod divmod(const PlainPoly &a, const PlainPoly &b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero())
    throw StructuralError("division by the zero polynomial");
  const PrimeField f = a.field();
  std::vector<Elem> rem = a.coeffs();
  const int db = b.degree();
  const Elem lead_inv = f.inv(b.lead());
  if (a.degree() < db)
    return {PlainPoly(f), a};
  std::vector<Elem> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    const Elem c = rem[i];
    if (c == 0)
      continue;
    const Elem factor = f.mul(c, lead_inv);
    quot[i - db] = factor;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(factor, b.coeffs()[j]));
  }
  return {PlainPoly(f, std::move(quot)), PlainPoly(f, std::move(rem))};
}

PlainPoly exact_div(const PlainPoly &a, const PlainPoly &b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero())
    throw DivisibilityError("(" + b.str() + ") does not divide (" + a.str() +
                                "); remainder " + qr.remainder.str(),
                            qr.remainder.str());
  return std::move(qr.quotient);
}

bool divides(const PlainPoly &divisor, const PlainPoly &a) {
  if (divisor.is_zero())
    return a.is_zero();
  return divmod(a, divisor).remainder.is_zero();
}

PlainPoly plain_gcd(const PlainPoly &a, const PlainPoly &b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero())
    throw Error("gcd(0, 0) is undefined");
  PlainPoly x = a, y = b;
  while (!y.is_zero()) {
    PlainPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PlainPoly plain_lcm(const PlainPoly &a, const PlainPoly &b) {
  if (a.is_zero() || b.is_zero())
    return PlainPoly(a.field());
  return exact_div(a * b, plain_gcd(a, b)).monic();
}

PlainPoly euclidean_dual_generator(const PlainPoly &g, int n) {
  const PrimeField f = g.field();
  const PlainPoly h = exact_div(PlainPoly::cyclotomic_modulus(f, n), g);
  // h_0 != 0 because x does not divide x^n - 1.
  std::vector<Elem> reversed(h.coeffs().rbegin(), h.coeffs().rend());
  return PlainPoly(f, std::move(reversed)).scaled(f.inv(h.coeffs()[0])).monic();
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(PrimeField field, int n)
    : field_(field), coeffs_(static_cast<std::size_t>(n), 0) {
  if (n <= 0)
    throw StructuralError("ring length must be positive");
}

RingElement::RingElement(PrimeField field, int n, std::vector<Elem> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (n <= 0 || static_cast<int>(coeffs_.size()) != n)
    throw StructuralError("ring element needs exactly " + std::to_string(n) +
                          " coefficients, got " + std::to_string(coeffs_.size()));
  for (auto &c : coeffs_)
    c = static_cast<Elem>(c % field_.p());
}

RingElement::RingElement(const PlainPoly &poly, int n) : RingElement(poly.field(), n) {
  for (std::size_t i = 0; i < poly.coeffs().size(); ++i)
    coeffs_[i % n] = field_.add(coeffs_[i % n], poly.coeffs()[i]);
}

RingElement RingElement::one(PrimeField field, int n) {
  RingElement e(field, n);
  e.coeffs_[0] = 1;
  return e;
}

RingElement RingElement::monomial(PrimeField field, int n, int degree, Elem coeff) {
  RingElement e(field, n);
  e.coeffs_[((degree % n) + n) % n] = static_cast<Elem>(coeff % field.p());
  return e;
}

bool RingElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c == 0; });
}

RingElement RingElement::shifted(int k) const {
  const int len = n();
  const int s = ((k % len) + len) % len;
  RingElement out(field_, len);
  for (int i = 0; i < len; ++i)
    out.coeffs_[(i + s) % len] = coeffs_[i];
  return out;
}

RingElement RingElement::scaled(Elem c) const {
  RingElement out(field_, n());
  for (int i = 0; i < n(); ++i)
    out.coeffs_[i] = field_.mul(coeffs_[i], c);
  return out;
}

RingElement operator+(const RingElement &a, const RingElement &b) {
  require_same_ring(a, b);
  RingElement out(a.field_, a.n());
  for (int i = 0; i < a.n(); ++i)
    out.coeffs_[i] = a.field_.add(a.coeffs_[i], b.coeffs_[i]);
  return out;
}

RingElement operator-(const RingElement &a, const RingElement &b) {
  require_same_ring(a, b);
  RingElement out(a.field_, a.n());
  for (int i = 0; i < a.n(); ++i)
    out.coeffs_[i] = a.field_.sub(a.coeffs_[i], b.coeffs_[i]);
  return out;
}

RingElement operator*(const RingElement &a, const RingElement &b) { return ring_mul(a, b); }

RingElement ring_mul(const RingElement &a, const RingElement &b) {
  require_same_ring(a, b);
  const int n = a.n();
  const int p = a.field().p();
  std::vector<int> acc(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const int ai = a[i];
    if (ai == 0)
      continue;
    for (int j = 0; j < n; ++j) {
      int k = i + j;
      if (k >= n)
        k -= n;
      acc[k] = (acc[k] + ai * b[j]) % p;
    }
  }
  std::vector<Elem> out(acc.begin(), acc.end());
  return RingElement(a.field(), n, std::move(out));
}

RingElement bar(const RingElement &f) {
  const int n = f.n();
  std::vector<Elem> out(static_cast<std::size_t>(n), 0);
  out[0] = f[0];
  for (int j = 1; j < n; ++j)
    out[j] = f[n - j];
  return RingElement(f.field(), n, std::move(out));
}

// ---------------------------------------------------------------------------
// DivisorPoly

DivisorPoly::DivisorPoly(const PlainPoly &poly, int n) : poly_(poly.monic()), n_(n) {
  if (n <= 0)
    throw StructuralError("ring length must be positive");
  if (poly_.is_zero())
    throw DivisibilityError("the zero polynomial does not divide x^" + std::to_string(n) + "-1",
                            "0");
  // Throws with the remainder attached.
  (void)exact_div(PlainPoly::cyclotomic_modulus(poly.field(), n), poly_);
}

PlainPoly DivisorPoly::cofactor() const {
  return exact_div(PlainPoly::cyclotomic_modulus(poly_.field(), n_), poly_);
}

} // namespace qcsym
