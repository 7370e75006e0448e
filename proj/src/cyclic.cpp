/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/cyclic.hpp"

#include "qcsym/errors.hpp"

#include <string>

namespace qcsym {

FpMatrix CyclicCode::generator_matrix() const {
  if (is_zero())
    return FpMatrix(0, n());
  return circulant_rows(RingElement(generator(), n()), dim());
}

CyclicCode cyclic_from_element(const RingElement &f) {
  const PlainPoly modulus = PlainPoly::cyclotomic_modulus(f.field(), f.n());
  return CyclicCode(DivisorPoly(plain_gcd(f.to_plain(), modulus), f.n()));
}

CyclicCode cyclic_from_element(const PlainPoly &f, int n) {
  return cyclic_from_element(RingElement(f, n));
}

FpMatrix circulant_rows(const RingElement &f, int t) {
  const int n = f.n();
  if (t < 1 || t > n)
    throw StructuralError("circulant row count " + std::to_string(t) + " outside [1, " +
                          std::to_string(n) + "]");
  FpMatrix m(t, n);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < n; ++j)
      m(i, (i + j) % n) = f[j];
  return m;
}

DistanceResult min_hamming_exhaustive(const CyclicCode &code, std::uint64_t message_budget) {
  if (code.is_zero())
    return DistanceResult::infinite();
  return min_weight_exhaustive(code.generator_matrix(), code.field(), Weight::hamming,
                               {message_budget, 0});
}

DistanceResult min_hamming_iset(const CyclicCode &code, int weight_cap, std::uint64_t budget) {
  if (code.is_zero())
    return DistanceResult::infinite();
  return min_weight_iset(code.generator_matrix(), code.field(), weight_cap, budget);
}

} // namespace qcsym
