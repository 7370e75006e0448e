/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/distance.hpp"

#include "qcsym/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace qcsym {

std::uint64_t default_budget() {
  if (const char *env = std::getenv("QCS_BUDGET")) {
    char *end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return v;
  }
  return kDefaultBudget;
}

long double message_space_size(int p, int k) {
  return std::pow(static_cast<long double>(p), static_cast<long double>(k));
}

namespace {

constexpr int kMaxPackedWords = 8;

// Bit layout of a codeword of length `cols` packed into 64-bit words. For the
// symplectic weight the two halves start on separate word boundaries so the
// weight is a popcount of (c' | c'').
struct Layout {
  Weight weight;
  int cols = 0;
  int half = 0;       // N for symplectic, unused for Hamming
  int half_words = 0; // words per half (symplectic)
  int words = 0;      // total words

  Layout(Weight w, int c) : weight(w), cols(c) {
    if (weight == Weight::symplectic) {
      if (cols % 2 != 0)
        throw StructuralError("symplectic weight needs an even length");
      half = cols / 2;
      half_words = (half + 63) / 64;
      words = 2 * half_words;
    } else {
      words = (cols + 63) / 64;
    }
  }

  std::pair<int, int> position(int col) const {
    if (weight == Weight::symplectic && col >= half)
      return {half_words + (col - half) / 64, (col - half) % 64};
    return {col / 64, col % 64};
  }
};

int packed_capacity(int words) {
  for (int k : {1, 2, 4, 8})
    if (words <= k)
      return k;
  return 0;
}

template <int K> using Packed = std::array<std::uint64_t, K>;

template <int K> Packed<K> pack_row(const FpMatrix &m, Eigen::Index r, const Layout &layout) {
  Packed<K> out{};
  for (int c = 0; c < layout.cols; ++c)
    if (m(r, c) != 0) {
      auto [w, b] = layout.position(c);
      out[w] |= std::uint64_t{1} << b;
    }
  return out;
}

template <int K> inline void xor_into(Packed<K> &a, const Packed<K> &b) {
  for (int i = 0; i < K; ++i)
    a[i] ^= b[i];
}

template <int K, bool Symp> inline int packed_weight(const Packed<K> &a) {
  int w = 0;
  if constexpr (Symp) {
    constexpr int H = K / 2;
    for (int i = 0; i < H; ++i)
      w += std::popcount(a[i] | a[H + i]);
  } else {
    for (int i = 0; i < K; ++i)
      w += std::popcount(a[i]);
  }
  return w;
}

// Packed reduced echelon form of a binary subspace for membership queries.
template <int K> struct PackedEchelon {
  std::vector<Packed<K>> rows;
  std::vector<std::pair<int, int>> pivots; // (word, bit)

  PackedEchelon(const Echelon &e, const Layout &layout) {
    for (int i = 0; i < e.rank(); ++i) {
      rows.push_back(pack_row<K>(e.rows, i, layout));
      pivots.push_back(layout.position(e.pivots[i]));
    }
  }

  bool contains(Packed<K> v) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((v[pivots[i].first] >> pivots[i].second) & 1u)
        xor_into<K>(v, rows[i]);
    for (auto w : v)
      if (w)
        return false;
    return true;
  }
};

struct ScanTotals {
  int best_all = kInfinity;
  int best_outside = kInfinity;
  std::uint64_t visited = 0;
};

unsigned worker_count(unsigned requested) {
  unsigned t = requested ? requested : std::thread::hardware_concurrency();
  return std::max(1u, t);
}

// Gray-code walk over the binary row space. The top `prefix_bits` rows select
// one of 2^prefix_bits disjoint chunks; chunks are independent and are handed
// out to workers through an atomic counter.
template <int K, bool Symp>
ScanTotals scan_binary(const std::vector<Packed<K>> &rows, const PackedEchelon<K> *excluded,
                       unsigned threads) {
  const int k = static_cast<int>(rows.size());
  const int prefix_bits = std::min(k, 12);
  const int low_bits = k - prefix_bits;
  const std::uint64_t chunks = std::uint64_t{1} << prefix_bits;
  const std::uint64_t low_count = std::uint64_t{1} << low_bits;

  std::atomic<std::uint64_t> next{0};
  std::mutex merge_lock;
  ScanTotals totals;

  auto worker = [&] {
    ScanTotals local;
    auto visit = [&](const Packed<K> &word) {
      const int w = packed_weight<K, Symp>(word);
      if (w < local.best_all)
        local.best_all = w;
      if (excluded && w < local.best_outside && !excluded->contains(word))
        local.best_outside = w;
    };
    for (std::uint64_t chunk = next++; chunk < chunks; chunk = next++) {
      Packed<K> state{};
      for (int b = 0; b < prefix_bits; ++b)
        if ((chunk >> b) & 1u)
          xor_into<K>(state, rows[low_bits + b]);
      if (chunk != 0) {
        visit(state);
        ++local.visited;
      }
      for (std::uint64_t i = 1; i < low_count; ++i) {
        xor_into<K>(state, rows[std::countr_zero(i)]);
        visit(state);
      }
      local.visited += low_count - 1;
    }
    std::lock_guard<std::mutex> guard(merge_lock);
    totals.best_all = std::min(totals.best_all, local.best_all);
    totals.best_outside = std::min(totals.best_outside, local.best_outside);
    totals.visited += local.visited;
  };

  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::uint64_t>(worker_count(threads), chunks));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_workers; ++t)
      pool.emplace_back(worker);
    for (auto &th : pool)
      th.join();
  }
  if (!excluded)
    totals.best_outside = totals.best_all;
  return totals;
}

template <int K>
ScanTotals dispatch_binary(const Echelon &space, const Echelon *excluded, const Layout &layout,
                           unsigned threads) {
  std::vector<Packed<K>> rows;
  for (int i = 0; i < space.rank(); ++i)
    rows.push_back(pack_row<K>(space.rows, i, layout));
  std::unique_ptr<PackedEchelon<K>> ex;
  if (excluded)
    ex = std::make_unique<PackedEchelon<K>>(*excluded, layout);
  if (layout.weight == Weight::symplectic)
    return scan_binary<K, true>(rows, ex.get(), threads);
  return scan_binary<K, false>(rows, ex.get(), threads);
}

int byte_weight(const std::vector<Elem> &c, const Layout &layout) {
  int w = 0;
  if (layout.weight == Weight::symplectic) {
    for (int i = 0; i < layout.half; ++i)
      w += (c[i] | c[layout.half + i]) != 0;
  } else {
    for (Elem v : c)
      w += v != 0;
  }
  return w;
}

// Any-prime engine: visits one representative per projective point (the
// highest nonzero message digit is 1), since scalar multiples share weight
// and subspace membership.
ScanTotals scan_generic(const Echelon &space, const Echelon *excluded, const Layout &layout,
                        const PrimeField &field) {
  const int k = space.rank();
  const int cols = layout.cols;
  const int p = field.p();
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(cols));
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < cols; ++c)
      rows[i][c] = space.rows(i, c);

  ScanTotals totals;
  FpRowVector probe(cols);
  auto visit = [&](const std::vector<Elem> &word) {
    const int w = byte_weight(word, layout);
    ++totals.visited;
    if (w < totals.best_all)
      totals.best_all = w;
    if (excluded && w < totals.best_outside) {
      for (int c = 0; c < cols; ++c)
        probe(c) = word[c];
      if (!in_row_space(*excluded, probe, field))
        totals.best_outside = w;
    }
  };
  auto add_row = [&](std::vector<Elem> &word, int r) {
    for (int c = 0; c < cols; ++c)
      word[c] = static_cast<Elem>((word[c] + rows[r][c]) % p);
  };

  for (int top = 0; top < k; ++top) {
    std::vector<Elem> word = rows[top];
    std::vector<int> digits(static_cast<std::size_t>(top), 0);
    visit(word);
    while (true) {
      int i = 0;
      while (i < top) {
        add_row(word, i);
        if (++digits[i] < p)
          break;
        digits[i] = 0;
        ++i;
      }
      if (i == top)
        break;
      visit(word);
    }
  }
  if (!excluded)
    totals.best_outside = totals.best_all;
  return totals;
}

ScanTotals scan_space(const Echelon &space, const Echelon *excluded, const Layout &layout,
                      const PrimeField &field, unsigned threads) {
  if (field.binary()) {
    switch (packed_capacity(layout.words)) {
    case 1:
      return dispatch_binary<1>(space, excluded, layout, threads);
    case 2:
      return dispatch_binary<2>(space, excluded, layout, threads);
    case 4:
      return dispatch_binary<4>(space, excluded, layout, threads);
    case 8:
      return dispatch_binary<8>(space, excluded, layout, threads);
    default:
      break;
    }
  }
  return scan_generic(space, excluded, layout, field);
}

void check_budget(int p, int k, std::uint64_t budget) {
  const long double required = message_space_size(p, k);
  if (required > static_cast<long double>(budget))
    throw BudgetError("exhaustive enumeration needs " + std::to_string(p) + "^" +
                          std::to_string(k) + " messages, budget is " + std::to_string(budget),
                      required);
}

DistanceResult to_result(int best, std::uint64_t visited) {
  if (best == kInfinity)
    return DistanceResult::infinite();
  return DistanceResult::exactly(best, visited);
}

} // namespace

DistanceResult min_weight_exhaustive(const FpMatrix &rows, const PrimeField &field, Weight weight,
                                     const ScanOptions &opts) {
  const Layout layout(weight, static_cast<int>(rows.cols()));
  const Echelon space = row_reduce(rows, field);
  if (space.rank() == 0)
    return DistanceResult::infinite();
  check_budget(field.p(), space.rank(), opts.budget);
  const ScanTotals t = scan_space(space, nullptr, layout, field, opts.threads);
  return to_result(t.best_all, t.visited);
}

SplitScan min_weight_outside(const FpMatrix &rows, const FpMatrix &excluded,
                             const PrimeField &field, Weight weight, const ScanOptions &opts) {
  const Layout layout(weight, static_cast<int>(rows.cols()));
  const Echelon space = row_reduce(rows, field);
  if (space.rank() == 0)
    return {DistanceResult::infinite(), DistanceResult::infinite()};
  check_budget(field.p(), space.rank(), opts.budget);
  const Echelon ex = row_reduce(excluded, field);
  if (ex.rank() > 0 && excluded.cols() != rows.cols())
    throw StructuralError("excluded subspace has a different length");
  const ScanTotals t = scan_space(space, &ex, layout, field, opts.threads);
  return {to_result(t.best_all, t.visited), to_result(t.best_outside, t.visited)};
}

// ---------------------------------------------------------------------------
// Information-set search

namespace {

long double binomial(int n, int r) {
  if (r < 0 || r > n)
    return 0;
  long double v = 1;
  for (int i = 1; i <= r; ++i)
    v = v * (n - r + i) / i;
  return std::round(v);
}

template <int K>
void iset_level_binary(const std::vector<Packed<K>> &rows, int level, int &best,
                       std::uint64_t &visited) {
  const int k = static_cast<int>(rows.size());
  std::function<void(int, int, const Packed<K> &)> rec = [&](int start, int depth,
                                                             const Packed<K> &acc) {
    for (int i = start; i <= k - (level - depth); ++i) {
      Packed<K> next = acc;
      xor_into<K>(next, rows[i]);
      if (depth + 1 == level) {
        ++visited;
        best = std::min(best, packed_weight<K, false>(next));
      } else {
        rec(i + 1, depth + 1, next);
      }
    }
  };
  rec(0, 0, Packed<K>{});
}

void iset_level_generic(const Echelon &e, const PrimeField &field, int level, int &best,
                        std::uint64_t &visited) {
  const int k = e.rank();
  const int cols = static_cast<int>(e.rows.cols());
  const int p = field.p();
  std::function<void(int, int, const std::vector<Elem> &)> rec =
      [&](int start, int depth, const std::vector<Elem> &acc) {
        for (int i = start; i <= k - (level - depth); ++i) {
          // The first chosen row carries coefficient 1 (projective representative).
          const int max_coeff = depth == 0 ? 1 : p - 1;
          for (int coeff = 1; coeff <= max_coeff; ++coeff) {
            std::vector<Elem> next = acc;
            for (int c = 0; c < cols; ++c)
              next[c] = static_cast<Elem>((next[c] + coeff * e.rows(i, c)) % p);
            if (depth + 1 == level) {
              ++visited;
              int w = 0;
              for (Elem v : next)
                w += v != 0;
              best = std::min(best, w);
            } else {
              rec(i + 1, depth + 1, next);
            }
          }
        }
      };
  rec(0, 0, std::vector<Elem>(static_cast<std::size_t>(cols), 0));
}

} // namespace

DistanceResult min_weight_iset(const FpMatrix &rows, const PrimeField &field, int weight_cap,
                               std::uint64_t budget) {
  const Echelon e = row_reduce(rows, field);
  const int k = e.rank();
  const int n = static_cast<int>(rows.cols());
  if (k == 0)
    return DistanceResult::infinite();
  const int cap = weight_cap < 0 ? k : std::min(weight_cap, k);
  const Layout layout(Weight::hamming, n);
  const int capacity = field.binary() ? packed_capacity(layout.words) : 0;

  std::vector<Packed<1>> r1;
  std::vector<Packed<2>> r2;
  std::vector<Packed<4>> r4;
  std::vector<Packed<8>> r8;
  for (int i = 0; i < k; ++i) {
    switch (capacity) {
    case 1: r1.push_back(pack_row<1>(e.rows, i, layout)); break;
    case 2: r2.push_back(pack_row<2>(e.rows, i, layout)); break;
    case 4: r4.push_back(pack_row<4>(e.rows, i, layout)); break;
    case 8: r8.push_back(pack_row<8>(e.rows, i, layout)); break;
    default: break;
    }
  }

  int best = kInfinity;
  std::uint64_t visited = 0;
  int completed = 0;
  for (int level = 1; level <= cap; ++level) {
    const long double cost =
        binomial(k, level) * std::pow(static_cast<long double>(field.p() - 1), level - 1);
    if (static_cast<long double>(visited) + cost > static_cast<long double>(budget))
      break;
    switch (capacity) {
    case 1: iset_level_binary<1>(r1, level, best, visited); break;
    case 2: iset_level_binary<2>(r2, level, best, visited); break;
    case 4: iset_level_binary<4>(r4, level, best, visited); break;
    case 8: iset_level_binary<8>(r8, level, best, visited); break;
    default: iset_level_generic(e, field, level, best, visited); break;
    }
    completed = level;
    if (best <= level + 1 || level == k)
      return DistanceResult::exactly(best, visited);
  }
  const int lower = std::min(completed + 1, best);
  const int upper = std::min(best, n);
  if (lower >= upper)
    return DistanceResult::exactly(upper, visited);
  return DistanceResult::bounded(lower, upper, visited);
}

} // namespace qcsym
