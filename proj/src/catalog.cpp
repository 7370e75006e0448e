/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/catalog.hpp"

#include "qcsym/abbrev.hpp"
#include "qcsym/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace qcsym {

using nlohmann::json;

const CatalogEntry &Catalog::entry(const std::string &id) const {
  for (const auto &e : entries)
    if (e.id == id)
      return e;
  throw Error("no catalog entry " + id);
}

namespace {

template <std::size_t N> std::array<int, N> int_array(const json &j) {
  if (!j.is_array() || j.size() != N)
    throw Error("expected an array of " + std::to_string(N) + " integers");
  std::array<int, N> out{};
  for (std::size_t i = 0; i < N; ++i)
    out[i] = j.at(i).get<int>();
  return out;
}

RingElement ring_poly(const PrimeField &field, int n, const std::string &name,
                      const std::string &text) {
  std::vector<Elem> c = parse_abbrev(text, field.p());
  if (static_cast<int>(c.size()) > n)
    throw Error(name + " has " + std::to_string(c.size()) + " coefficients, more than n = " +
                std::to_string(n));
  c.resize(n, 0);
  return RingElement(field, n, std::move(c));
}

CatalogEntry parse_entry(const json &j) {
  CatalogEntry e;
  e.id = j.at("id").get<std::string>();
  try {
    e.source = j.value("source", e.id);
    e.q = j.at("q").get<int>();
    e.n = j.at("n").get<int>();
    e.ell = j.value("ell", 2);
    if (e.n <= 0 || e.ell != 2)
      throw Error("unsupported shape");
    const PrimeField field(e.q);
    const std::string kind = j.at("kind").get<std::string>();
    const auto poly = [&](const char *name) {
      const std::string text = j.at(name).get<std::string>();
      e.printed.emplace_back(name, text);
      return ring_poly(field, e.n, name, text);
    };
    if (kind == "one-gen") {
      e.kind = CatalogEntry::Kind::one_gen;
      const RingElement g = poly("g"), f0 = poly("f0"), f1 = poly("f1");
      const DivisorPoly gd(g.to_plain(), e.n);
      const QcOneGen printed = QcOneGen::create(gd, {f0, f1}, true);
      e.normalized = !printed.gcd_condition_holds();
      e.generators.push_back(QcOneGen::normalized(gd, {f0, f1}));
    } else if (kind == "two-gen") {
      e.kind = CatalogEntry::Kind::two_gen;
      const RingElement g1 = poly("g1"), g2 = poly("g2"), f = poly("f");
      const RingElement one = RingElement::one(field, e.n);
      e.generators.push_back(QcOneGen::create(DivisorPoly(g1.to_plain(), e.n), {f, one}));
      e.generators.push_back(QcOneGen::create(DivisorPoly(g2.to_plain(), e.n), {one, f}));
    } else {
      throw Error("unknown kind '" + kind + "'");
    }
    if (j.contains("code"))
      e.code = int_array<2>(j.at("code"));
    if (j.contains("dual"))
      e.dual = int_array<3>(j.at("dual"));
    if (j.contains("primal_distance"))
      e.primal_distance = j.at("primal_distance").get<int>();
    if (j.contains("qecc"))
      for (const auto &q : j.at("qecc"))
        e.qecc.push_back(int_array<3>(q));
  } catch (const std::exception &ex) {
    throw Error("catalog entry " + e.id + ": " + ex.what());
  }
  return e;
}

} // namespace

Catalog parse_catalog(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &ex) {
    throw Error(std::string("catalog is not valid JSON: ") + ex.what());
  }
  Catalog c;
  c.version = doc.value("version", 0);
  for (const auto &j : doc.at("entries"))
    c.entries.push_back(parse_entry(j));
  for (const auto &j : doc.value("claims", json::array())) {
    Claim cl;
    cl.row = j.at("row").get<int>();
    try {
      cl.qecc = int_array<3>(j.at("qecc"));
      cl.marker = j.at("marker").get<std::string>();
      if (cl.marker != "table-II" && cl.marker != "table-III" && cl.marker != "derived")
        throw Error("unknown marker '" + cl.marker + "'");
      if (j.contains("previous") && !j.at("previous").is_null())
        cl.previous = int_array<3>(j.at("previous"));
    } catch (const std::exception &ex) {
      throw Error("claim row " + std::to_string(cl.row) + ": " + ex.what());
    }
    c.claims.push_back(cl);
  }
  return c;
}

Catalog load_catalog() { return parse_catalog(embedded_catalog_text()); }

Catalog load_catalog_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open catalog " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

} // namespace qcsym
