/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/abbrev.hpp"
#include "qcsym/bounds.hpp"
#include "qcsym/catalog.hpp"
#include "qcsym/errors.hpp"
#include "qcsym/qc.hpp"
#include "qcsym/qecc.hpp"
#include "qcsym/report.hpp"
#include "qcsym/search.hpp"
#include "qcsym/verify.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

using namespace qcsym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Globals {
  int q = 2;
  int n = 0;
  std::uint64_t budget = 0;
  bool json = false;
  std::uint64_t seed = 0;
  std::string catalog;
};

struct CodeArgs {
  std::string g, f0, f1, entry;
};

Catalog catalog_for(const Globals &G) {
  return G.catalog.empty() ? load_catalog() : load_catalog_file(G.catalog);
}

/// Bad command-line input that no parser caught, e.g. an unknown entry id.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CatalogEntry entry_for(const Globals &G, const std::string &id) {
  const Catalog c = catalog_for(G);
  for (const auto &e : c.entries)
    if (e.id == id)
      return e;
  throw UsageError("no catalog entry " + id);
}

std::uint64_t budget_for(const Globals &G) { return G.budget ? G.budget : default_budget(); }

RingElement ring_arg(const Globals &G, const std::string &name, const std::string &text) {
  std::vector<Elem> c = parse_coefficients(text, G.q);
  if (static_cast<int>(c.size()) > G.n)
    throw ParseError(name + " has more than n = " + std::to_string(G.n) + " coefficients");
  c.resize(G.n, 0);
  return RingElement(PrimeField(G.q), G.n, std::move(c));
}

QcOneGen code_from(const Globals &G, const CodeArgs &a, bool allow_violation = false) {
  if (!a.entry.empty()) {
    const CatalogEntry e = entry_for(G, a.entry);
    if (e.kind != CatalogEntry::Kind::one_gen)
      throw PreconditionError("entry " + a.entry + " is a two-generator code");
    return e.one();
  }
  if (G.n <= 0)
    throw ParseError("--n is required");
  if (a.g.empty() || a.f0.empty() || a.f1.empty())
    throw ParseError("--g, --f0 and --f1 are required (or --entry)");
  const RingElement g = ring_arg(G, "g", a.g);
  const DivisorPoly gd(g.to_plain(), G.n);
  return QcOneGen::create(gd, {ring_arg(G, "f0", a.f0), ring_arg(G, "f1", a.f1)},
                          allow_violation);
}

void add_code_options(CLI::App *cmd, CodeArgs &a) {
  cmd->add_option("--g", a.g, "generator polynomial dividing x^n-1");
  cmd->add_option("--f0", a.f0, "first coefficient polynomial");
  cmd->add_option("--f1", a.f1, "second coefficient polynomial");
  cmd->add_option("--entry", a.entry, "catalog entry id instead of polynomials");
}

int run_check_sso(const Globals &G, const CodeArgs &a) {
  SsoVerdict v;
  if (!a.entry.empty()) {
    const CatalogEntry e = entry_for(G, a.entry);
    v = e.kind == CatalogEntry::Kind::one_gen ? check_sso_one_gen(e.one())
                                              : check_sso_multi_gen(e.multi());
  } else {
    v = check_sso_one_gen(code_from(G, a, true));
  }
  if (G.json)
    std::cout << json_line(v) << "\n";
  else
    std::cout << (v.self_orthogonal ? "symplectic self-orthogonal" : "not symplectic self-orthogonal")
              << (v.self_orthogonal ? "" : ", remainder " + v.witness->str()) << "\n";
  return v.self_orthogonal ? kExitOk : kExitFailed;
}

BoundOptions bound_options(const Globals &G) {
  BoundOptions o;
  o.iset_budget = budget_for(G);
  return o;
}

int run_bounds(const Globals &G, const CodeArgs &a, bool dual) {
  const QcOneGen code = code_from(G, a);
  const BoundReport r = dual ? theorem6_dual_bounds(code, bound_options(G))
                             : theorem4_bounds(code, bound_options(G));
  std::cout << (G.json ? json_line(r) + "\n" : text(r));
  return kExitOk;
}

int run_dual(const Globals &G, const CodeArgs &a) {
  const QcOneGen code = code_from(G, a);
  const DualTwoGen d = symplectic_dual(code);
  const int rank_dual = d.generator_matrix(true).rows();
  if (G.json) {
    std::ostringstream o;
    o << "{\"n\":" << 2 * d.n() << ",\"k\":" << rank_dual << ",\"f0_bar\":\"" << d.f0_bar().str()
      << "\",\"f1_bar\":\"" << d.f1_bar().str() << "\",\"g_dual\":\"" << d.g_dual().str()
      << "\",\"gram_zero\":true}";
    std::cout << o.str() << "\n";
  } else {
    std::cout << "symplectic dual [" << 2 * d.n() << "," << rank_dual << "]\n"
              << "  generators (bar f0, bar f1) = (" << d.f0_bar().str() << ", " << d.f1_bar().str()
              << ")\n  and (0, " << d.g_dual().str() << ")\n  Gram product with the code is zero\n";
  }
  return kExitOk;
}

int run_distance(const Globals &G, const CodeArgs &a, bool dual) {
  const QcOneGen code = code_from(G, a, true);
  FpMatrix rows = generator_matrix(code, true);
  if (dual)
    rows = symplectic_complement(rows, code.field());
  const DistanceResult d = symplectic_distance_exhaustive(rows, code.field(), budget_for(G));
  std::cout << (G.json ? json_line(d) : "[" + std::to_string(2 * code.n()) + "," +
                                            std::to_string(rows.rows()) + "," + text(d) + "]")
            << "\n";
  return kExitOk;
}

std::optional<std::array<int, 3>> parse_claim(const std::string &s) {
  if (s.empty())
    return std::nullopt;
  std::array<int, 3> out{};
  std::string t;
  for (char c : s)
    t.push_back(std::isdigit(static_cast<unsigned char>(c)) ? c : ' ');
  std::istringstream in(t);
  for (auto &x : out)
    if (!(in >> x))
      throw ParseError("claim must look like [[n,k,d]]");
  return out;
}

int run_qecc(const Globals &G, const CodeArgs &a, const std::string &claim) {
  const auto c = parse_claim(claim);
  CrssOptions o;
  o.budget = budget_for(G);
  o.bounds = bound_options(G);
  QeccParams p;
  if (!a.entry.empty()) {
    const CatalogEntry e = entry_for(G, a.entry);
    p = e.kind == CatalogEntry::Kind::one_gen ? crss_map(e.one(), o) : crss_map(e.multi(), o);
  } else {
    p = crss_map(code_from(G, a), o);
  }
  std::cout << (G.json ? json_line(p) : text(p)) << "\n";
  if (!c)
    return kExitOk;
  const ClaimVerdict v = claim_check(p, (*c)[0], (*c)[1], (*c)[2]);
  if (G.json)
    std::cout << "{\"claim\":\"[[" << (*c)[0] << "," << (*c)[1] << "," << (*c)[2]
              << "]]\",\"verdict\":\"" << to_string(v) << "\"}\n";
  else
    std::cout << "claim: " << to_string(v) << "\n";
  return v == ClaimVerdict::below ? kExitFailed : kExitOk;
}

int run_verify(const Globals &G, const std::vector<std::string> &only, bool structure_only,
               bool no_bounds) {
  const Catalog cat = catalog_for(G);
  VerifyOptions o;
  o.budget = budget_for(G);
  o.bounds = !no_bounds && !structure_only;
  o.distances = !structure_only;
  o.only = only;
  const VerifyReport r = verify_catalog(cat, o);
  for (const auto &e : r.entries)
    std::cout << (G.json ? json_line(e) : text(e)) << "\n";
  std::cout << (G.json ? json_line(r.derived) : text(r.derived)) << "\n";
  if (!G.json)
    std::cout << (r.passed() ? "all checks passed" : "verification FAILED") << "\n";
  return r.passed() ? kExitOk : kExitFailed;
}

int run_search(const Globals &G, const std::string &g, std::uint64_t trials, int min_lower,
               std::uint64_t exact_budget, bool all, unsigned threads) {
  if (G.n <= 0 || g.empty())
    throw ParseError("search needs --n and --g");
  SearchConfig cfg;
  cfg.q = G.q;
  cfg.n = G.n;
  cfg.g = PlainPoly(PrimeField(G.q), parse_coefficients(g, G.q));
  cfg.trials = trials;
  cfg.seed = G.seed;
  cfg.require_sso = !all;
  cfg.min_lower = min_lower;
  cfg.exact_budget = exact_budget;
  cfg.threads = threads;
  const SearchResult r = search(cfg);
  for (const auto &h : r.hits)
    std::cout << (G.json ? json_line(h) : text(h)) << "\n";
  std::cout << (G.json ? json_line(r.stats) : text(r.stats)) << "\n";
  return kExitOk;
}

int run_parse(const Globals &G, const std::string &input) {
  const std::vector<Elem> c = parse_coefficients(input, G.q);
  const PlainPoly p(PrimeField(G.q), c);
  if (G.json) {
    std::ostringstream o;
    o << "{\"coefficients\":[";
    for (std::size_t i = 0; i < c.size(); ++i)
      o << (i ? "," : "") << int(c[i]);
    o << "],\"polynomial\":\"" << p.str() << "\",\"canonical\":\"" << emit_abbrev(c) << "\"}";
    std::cout << o.str() << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quasi-cyclic symplectic self-orthogonal codes: checks, bounds and distances"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals G;
  app.add_option("--q", G.q, "field size (2, 3, 5 or 7)")->check(CLI::IsMember({2, 3, 5, 7}));
  app.add_option("--n", G.n, "ring length n");
  app.add_option("--budget", G.budget, "enumeration budget in messages (QCS_BUDGET otherwise)");
  app.add_flag("--json", G.json, "one JSON object per line");
  app.add_option("--seed", G.seed, "random seed");
  app.add_option("--catalog", G.catalog, "catalog JSON file instead of the built-in one");

  CodeArgs code;
  auto *sso = app.add_subcommand("check-sso", "decide symplectic self-orthogonality");
  add_code_options(sso, code);

  bool dual_bounds = false;
  auto *bounds = app.add_subcommand("bounds", "symplectic distance bounds of an index-2 code");
  add_code_options(bounds, code);
  bounds->add_flag("--dual", dual_bounds, "bound the symplectic dual instead");

  auto *dual = app.add_subcommand("dual", "closed-form symplectic dual");
  add_code_options(dual, code);

  bool dual_distance = false;
  auto *distance = app.add_subcommand("distance", "exact minimum symplectic distance");
  add_code_options(distance, code);
  distance->add_flag("--dual", dual_distance, "distance of the symplectic dual");

  std::string claim;
  auto *qecc = app.add_subcommand("qecc", "quantum code parameters of a binary code");
  add_code_options(qecc, code);
  qecc->add_option("--claim", claim, "compare with claimed [[n,k,d]]");

  std::vector<std::string> only;
  bool structure_only = false, no_bounds = false;
  auto *verify = app.add_subcommand("verify-catalog", "re-verify the catalog");
  verify->add_option("--only", only, "entry ids to check");
  verify->add_flag("--structure-only", structure_only, "self-orthogonality and dimensions only");
  verify->add_flag("--no-bounds", no_bounds, "skip the distance bounds");

  std::string search_g;
  std::uint64_t trials = 1000, exact_budget = 0;
  int min_lower = 0;
  unsigned threads = 0;
  bool all = false;
  auto *srch = app.add_subcommand("search", "random search for self-orthogonal codes");
  srch->add_option("--g", search_g, "generator polynomial dividing x^n-1")->required();
  srch->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
  srch->add_option("--min-lower", min_lower, "minimum primal lower bound");
  srch->add_option("--exact-budget", exact_budget, "enumerate hits up to this many messages");
  srch->add_option("--threads", threads, "worker threads (0 = all cores)");
  srch->add_flag("--all", all, "keep codes that are not self-orthogonal");

  std::string input;
  auto *parse = app.add_subcommand("parse", "expand abbreviated polynomial notation");
  parse->add_option("text", input, "polynomial, e.g. 101^3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sso)
      return run_check_sso(G, code);
    if (*bounds)
      return run_bounds(G, code, dual_bounds);
    if (*dual)
      return run_dual(G, code);
    if (*distance)
      return run_distance(G, code, dual_distance);
    if (*qecc)
      return run_qecc(G, code, claim);
    if (*verify)
      return run_verify(G, only, structure_only, no_bounds);
    if (*srch)
      return run_search(G, search_g, trials, min_lower, exact_budget, all, threads);
    if (*parse)
      return run_parse(G, input);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DivisibilityError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StructuralError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
