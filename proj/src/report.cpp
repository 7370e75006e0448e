/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/report.hpp"

#include "json.hpp"

#include <sstream>

namespace qcsym {

using nlohmann::ordered_json;

namespace {

ordered_json dist_value(int d) { return d == kInfinity ? ordered_json(nullptr) : ordered_json(d); }

std::string dist_text(int d) { return d == kInfinity ? "inf" : std::to_string(d); }

ordered_json to_json(const DistanceResult &d) {
  ordered_json j;
  j["value"] = dist_value(d.value);
  j["exact"] = d.exact;
  j["lower"] = dist_value(d.lower);
  j["upper"] = dist_value(d.upper);
  j["enumerated"] = d.enumerated;
  return j;
}

ordered_json to_json(const ComponentCode &c, int n) {
  ordered_json j;
  j["name"] = c.name;
  j["generator"] = c.generator.str();
  j["n"] = n;
  j["k"] = c.dim;
  j["distance"] = to_json(c.distance);
  return j;
}

ordered_json to_json(const BoundReport &r) {
  ordered_json j;
  j["kind"] = r.kind == BoundReport::Kind::primal ? "primal" : "dual";
  j["q"] = r.p;
  j["n"] = r.n;
  j["components"] = ordered_json::array();
  for (const auto &c : r.components)
    j["components"].push_back(to_json(c, r.n));
  j["S"] = ordered_json::array();
  for (const auto &s : r.S) {
    ordered_json t;
    t["alpha"] = s.alpha;
    t["gcd"] = s.gcd.str();
    t["code"] = to_json(s.code, r.n);
    j["S"].push_back(t);
  }
  j["D"] = dist_value(r.D_value);
  j["lower"] = dist_value(r.lower);
  j["upper"] = dist_value(r.upper);
  j["case"] = r.case_tag;
  j["exact"] = r.exact;
  j["notes"] = r.notes;
  return j;
}

ordered_json to_json(const QeccParams &p) {
  ordered_json j;
  j["params"] = p.str();
  j["n"] = p.n;
  j["k"] = p.k;
  j["d"] = p.exact ? ordered_json(p.d_lower) : ordered_json(nullptr);
  j["d_lower"] = dist_value(p.d_lower);
  j["d_upper"] = dist_value(p.d_upper);
  j["exact"] = p.exact;
  j["pure"] = p.pure ? ordered_json(*p.pure) : ordered_json(nullptr);
  j["dual_lower"] = dist_value(p.dual_lower);
  j["dual_upper"] = dist_value(p.dual_upper);
  j["provenance"] = p.provenance.kind == Provenance::Kind::constructed ? "constructed" : "propagated";
  if (p.provenance.kind == Provenance::Kind::propagated) {
    j["rule"] = p.provenance.rule;
    j["parent"] = p.provenance.parent;
  }
  j["notes"] = p.notes;
  return j;
}

std::string triple(const std::array<int, 3> &t) {
  return "[[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
         "]]";
}

} // namespace

std::string json_line(const DistanceResult &d) { return to_json(d).dump(); }

std::string json_line(const SsoVerdict &v) {
  ordered_json j;
  j["self_orthogonal"] = v.self_orthogonal;
  j["remainder"] = v.witness ? ordered_json(v.witness->str()) : ordered_json(nullptr);
  if (v.r >= 0) {
    j["r"] = v.r;
    j["s"] = v.s;
  }
  return j.dump();
}

std::string json_line(const BoundReport &r) { return to_json(r).dump(); }

std::string json_line(const QeccParams &p) { return to_json(p).dump(); }

std::string json_line(const EntryReport &r) {
  ordered_json j;
  j["id"] = r.id;
  j["source"] = r.source;
  j["passed"] = r.passed();
  j["sso"] = r.sso;
  j["sso_required"] = r.sso_required;
  j["normalized"] = r.normalized;
  j["dim"] = r.dim;
  j["claimed_dim"] = r.claimed_dim ? ordered_json(*r.claimed_dim) : ordered_json(nullptr);
  j["dual_dim"] = r.dual_dim;
  j["dual_method"] = r.dual_method;
  j["dual_ok"] = r.dual_ok;
  j["primal_bounds"] = r.primal_bounds ? to_json(*r.primal_bounds) : ordered_json(nullptr);
  j["dual_bounds"] = r.dual_bounds ? to_json(*r.dual_bounds) : ordered_json(nullptr);
  j["primal_distance"] = r.primal_distance ? to_json(*r.primal_distance) : ordered_json(nullptr);
  j["qecc"] = r.qecc ? to_json(*r.qecc) : ordered_json(nullptr);
  j["claims"] = ordered_json::array();
  for (const auto &c : r.claims) {
    ordered_json t;
    t["claimed"] = triple(c.claimed);
    t["verdict"] = to_string(c.verdict);
    j["claims"].push_back(t);
  }
  j["failures"] = r.failures;
  return j.dump();
}

std::string json_line(const DerivedCheck &d) {
  ordered_json j;
  j["derived_rows"] = d.derived_rows;
  j["reproduced"] = d.reproduced;
  j["missing_rows"] = d.missing_rows;
  j["unanchored_rows"] = d.unanchored_rows;
  return j.dump();
}

std::string json_line(const SearchHit &h) {
  ordered_json j;
  j["trial"] = h.trial;
  j["f0"] = h.f0.str();
  j["f1"] = h.f1.str();
  j["sso"] = h.sso;
  j["lower"] = dist_value(h.lower);
  j["upper"] = dist_value(h.upper);
  j["dual_lower"] = h.dual_lower ? dist_value(*h.dual_lower) : ordered_json(nullptr);
  j["dual_upper"] = h.dual_upper ? dist_value(*h.dual_upper) : ordered_json(nullptr);
  j["exact"] = h.exact ? to_json(*h.exact) : ordered_json(nullptr);
  j["qecc"] = h.qecc ? to_json(*h.qecc) : ordered_json(nullptr);
  return j.dump();
}

std::string json_line(const SearchStats &s) {
  ordered_json j;
  j["trials"] = s.trials;
  j["rejections"] = s.rejections;
  j["dropped"] = s.dropped;
  j["sso"] = s.sso;
  j["hits"] = s.hits;
  return j.dump();
}

std::string text(const DistanceResult &d) {
  if (d.exact)
    return dist_text(d.value);
  return "[" + dist_text(d.lower) + ", " + dist_text(d.upper) + "]";
}

std::string text(const BoundReport &r) {
  std::ostringstream o;
  o << (r.kind == BoundReport::Kind::primal ? "primal" : "dual") << " bounds, q=" << r.p
    << " n=" << r.n << "\n";
  for (const auto &c : r.components)
    o << "  " << c.name << " = [" << c.generator.str() << "]  [" << r.n << "," << c.dim << ","
      << text(c.distance) << "]\n";
  if (r.S.empty())
    o << "  S empty\n";
  for (const auto &s : r.S)
    o << "  S: alpha=" << int(s.alpha) << " gcd=" << s.gcd.str() << "  [" << r.n << ","
      << s.code.dim << "," << text(s.code.distance) << "]\n";
  o << "  D=" << dist_text(r.D_value) << " case=" << r.case_tag << "\n";
  o << "  lower=" << dist_text(r.lower) << " upper=" << dist_text(r.upper)
    << (r.exact ? "" : " (inexact components)") << "\n";
  for (const auto &n : r.notes)
    o << "  note: " << n << "\n";
  return o.str();
}

std::string text(const QeccParams &p) {
  std::ostringstream o;
  o << p.str();
  if (p.pure)
    o << (*p.pure ? " pure" : " impure");
  if (p.provenance.kind == Provenance::Kind::propagated)
    o << " (rule " << p.provenance.rule << " from " << p.provenance.parent << ")";
  for (const auto &n : p.notes)
    o << "\n  note: " << n;
  return o.str();
}

std::string text(const EntryReport &r) {
  std::ostringstream o;
  o << r.id << ": " << (r.passed() ? "ok" : "FAILED") << "  sso=" << (r.sso ? "yes" : "no")
    << " k=" << r.dim << " dual-k=" << r.dual_dim << " (" << r.dual_method << ")";
  if (r.normalized)
    o << " normalized";
  if (r.primal_bounds)
    o << " bounds=[" << dist_text(r.primal_bounds->lower) << "," << dist_text(r.primal_bounds->upper)
      << "]";
  if (r.dual_bounds)
    o << " dual-bounds=[" << dist_text(r.dual_bounds->lower) << ","
      << dist_text(r.dual_bounds->upper) << "]";
  if (r.primal_distance)
    o << " ds=" << text(*r.primal_distance);
  if (r.qecc)
    o << " qecc=" << r.qecc->str();
  for (const auto &c : r.claims)
    o << " " << triple(c.claimed) << ":" << to_string(c.verdict);
  for (const auto &f : r.failures)
    o << "\n  failure: " << f;
  return o.str();
}

std::string text(const DerivedCheck &d) {
  std::ostringstream o;
  o << "derived rows: " << d.reproduced << "/" << d.derived_rows << " reproduced by propagation";
  for (int r : d.missing_rows)
    o << "\n  missing row " << r;
  for (int r : d.unanchored_rows)
    o << "\n  construction row without catalog entry " << r;
  return o.str();
}

std::string text(const SearchHit &h) {
  std::ostringstream o;
  o << "trial " << h.trial << ": f0=" << h.f0.str() << " f1=" << h.f1.str()
    << " bounds=[" << dist_text(h.lower) << "," << dist_text(h.upper) << "]";
  if (h.dual_lower)
    o << " dual-bounds=[" << dist_text(*h.dual_lower) << "," << dist_text(*h.dual_upper) << "]";
  if (h.exact)
    o << " ds=" << text(*h.exact);
  if (h.qecc)
    o << " qecc=" << h.qecc->str();
  return o.str();
}

std::string text(const SearchStats &s) {
  std::ostringstream o;
  o << s.trials << " trials, " << s.rejections << " f0 rejections, " << s.dropped << " dropped, "
    << s.sso << " self-orthogonal, " << s.hits << " hits";
  return o.str();
}

} // namespace qcsym
