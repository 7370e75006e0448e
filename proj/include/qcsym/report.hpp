/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcsym/bounds.hpp"
#include "qcsym/qc.hpp"
#include "qcsym/qecc.hpp"
#include "qcsym/search.hpp"
#include "qcsym/verify.hpp"

#include <string>

namespace qcsym {

// One-line JSON objects with a fixed key order, and multi-line text forms.
// Infinite distances are written as null in JSON and "inf" in text.

std::string json_line(const DistanceResult &d);
std::string json_line(const SsoVerdict &v);
std::string json_line(const BoundReport &r);
std::string json_line(const QeccParams &p);
std::string json_line(const EntryReport &r);
std::string json_line(const DerivedCheck &d);
std::string json_line(const SearchHit &h);
std::string json_line(const SearchStats &s);

std::string text(const DistanceResult &d);
std::string text(const BoundReport &r);
std::string text(const QeccParams &p);
std::string text(const EntryReport &r);
std::string text(const DerivedCheck &d);
std::string text(const SearchHit &h);
std::string text(const SearchStats &s);

} // namespace qcsym
