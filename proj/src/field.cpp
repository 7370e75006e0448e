/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/field.hpp"

#include "qcsym/errors.hpp"

#include <string>

namespace qcsym {

namespace {

bool is_prime(int p) {
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

} // namespace

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_prime(p))
    throw Error("field order " + std::to_string(p) + " is not prime");
  if (p > 7)
    throw Error("prime " + std::to_string(p) +
                " is not supported (supported: 2, 3, 5, 7)");
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if ((a * b) % p == 1)
        inverse_[a] = static_cast<Elem>(b);
}

} // namespace qcsym
