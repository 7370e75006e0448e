/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcsym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on field, ring length or shape.
class StructuralError : public Error {
public:
  using Error::Error;
};

/// A required exact division left a remainder. The remainder is kept in its
/// ascending-coefficient text form so the error is self-contained.
class DivisibilityError : public Error {
public:
  DivisibilityError(const std::string &what, std::string remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const std::string &remainder() const noexcept { return remainder_; }

private:
  std::string remainder_;
};

/// An enumeration would exceed the caller's message budget.
class BudgetError : public Error {
public:
  BudgetError(const std::string &what, long double required)
      : Error(what), required_(required) {}
  /// Number of messages the enumeration would have to visit.
  long double required() const noexcept { return required_; }

private:
  long double required_;
};

/// A theorem hypothesis or operation precondition does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Internal cross-check failed; indicates invalid input that slipped past
/// validation or a library bug.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// Malformed abbreviated polynomial or coefficient list.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace qcsym
