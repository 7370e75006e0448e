/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/search.hpp"

#include "qcsym/errors.hpp"

#include <atomic>
#include <random>
#include <thread>

namespace qcsym {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RingElement random_element(const PrimeField &F, int n, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> dist(0, F.p() - 1);
  std::vector<Elem> c(n);
  for (auto &x : c)
    x = static_cast<Elem>(dist(rng));
  return RingElement(F, n, std::move(c));
}

struct TrialOutcome {
  bool valid = false;
  std::uint64_t rejections = 0;
  bool sso = false;
  std::optional<SearchHit> hit;
};

TrialOutcome run_trial(const SearchConfig &cfg, const DivisorPoly &g, const PlainPoly &h,
                       std::uint64_t trial, DistanceCache &cache) {
  TrialOutcome out;
  const PrimeField &F = g.field();
  std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(trial)));
  const RingElement f1 = random_element(F, cfg.n, rng);
  const PlainPoly base = plain_gcd(h, f1.to_plain());
  std::optional<RingElement> f0;
  for (int a = 0; a < cfg.max_rejections; ++a) {
    RingElement c = random_element(F, cfg.n, rng);
    if (c.is_zero() ? base.is_one() : plain_gcd(base, c.to_plain()).is_one()) {
      f0 = std::move(c);
      break;
    }
    ++out.rejections;
  }
  if (!f0)
    return out;
  out.valid = true;
  const QcOneGen code = QcOneGen::create(g, {*f0, f1});
  const SsoVerdict v = check_sso_one_gen(code);
  out.sso = v.self_orthogonal;
  const FpMatrix G = generator_matrix(code, false);
  if (symplectic_orthogonal(G, G, F) != v.self_orthogonal)
    throw ConsistencyError("divisibility test and Gram matrix disagree at trial " +
                           std::to_string(trial));
  if (cfg.require_sso && !v.self_orthogonal)
    return out;

  BoundOptions bo;
  bo.cache = &cache;
  const BoundReport b = theorem4_bounds(code, bo);
  if (b.lower < cfg.min_lower)
    return out;
  SearchHit hit{trial, *f0, f1, v.self_orthogonal, b.lower, b.upper, {}, {}, {}, {}};
  if (cfg.dual && dual_hypothesis_holds(code)) {
    const BoundReport d = theorem6_dual_bounds(code, bo);
    hit.dual_lower = d.lower;
    hit.dual_upper = d.upper;
  }
  if (cfg.exact_budget > 0 &&
      message_space_size(F.p(), code.dim()) <= static_cast<long double>(cfg.exact_budget))
    hit.exact = min_weight_exhaustive(G, F, Weight::symplectic, {cfg.exact_budget, 1});
  if (cfg.dual && cfg.exact_budget > 0 && F.binary() && v.self_orthogonal) {
    CrssOptions co;
    co.budget = cfg.exact_budget;
    co.threads = 1;
    co.bounds = bo;
    hit.qecc = crss_map(code, co);
  }
  out.hit = std::move(hit);
  return out;
}

} // namespace

SearchResult search(const SearchConfig &cfg) {
  if (cfg.trials == 0)
    throw PreconditionError("search needs at least one trial");
  const PrimeField F(cfg.q);
  if (!(cfg.g.field() == F))
    throw PreconditionError("g is not over F_" + std::to_string(cfg.q));
  const DivisorPoly g(cfg.g, cfg.n);
  const PlainPoly h = g.cofactor();

  SearchResult result;
  result.stats.trials = cfg.trials;
  // Bounds never exceed 2n, so a larger threshold admits nothing.
  if (cfg.min_lower > 2 * cfg.n)
    return result;

  std::vector<TrialOutcome> outcomes(cfg.trials);
  DistanceCache cache;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (;;) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= cfg.trials)
        return;
      try {
        outcomes[t] = run_trial(cfg, g, h, t, cache);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next = cfg.trials;
        return;
      }
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, cfg.trials));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);

  for (auto &o : outcomes) {
    result.stats.rejections += o.rejections;
    result.stats.dropped += !o.valid;
    result.stats.sso += o.sso;
    if (o.hit)
      result.hits.push_back(std::move(*o.hit));
  }
  result.stats.hits = result.hits.size();
  return result;
}

} // namespace qcsym
