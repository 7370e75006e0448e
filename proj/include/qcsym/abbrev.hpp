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
#include <string_view>
#include <vector>

namespace qcsym {

/// Expands run-length notation such as "101^3" or "1^{2}0^{2}1^2" into the
/// ascending coefficient list (trailing zeros kept). Whitespace is ignored.
/// Throws ParseError on empty input, malformed tokens, zero run lengths or
/// digits >= p.
std::vector<Elem> parse_abbrev(std::string_view text, int p);

/// Canonical run-length form: runs of two or more as d^{r}, single digits bare.
std::string emit_abbrev(const std::vector<Elem> &coeffs);

/// Accepts either run-length notation or comma-separated coefficients
/// ("1,0,1,1"); a comma selects the latter.
std::vector<Elem> parse_coefficients(std::string_view text, int p);

} // namespace qcsym
