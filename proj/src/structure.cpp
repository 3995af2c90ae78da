// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#include "zpsum/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "zpsum/constructions.hpp"

namespace zpsum {

namespace {

DilationReport finish_report(Residue b, NormStats st, std::uint64_t p) {
  DilationReport r;
  r.b = b;
  r.stats = st;
  const wide_t wp = p;
  r.e1 = st.low_sum > wp ? st.low_sum - wp : 0;
  r.e2 = st.high_norm_sum;
  r.incomplete_error = st.total_norm > wp ? st.total_norm - wp : 0;
  return r;
}

struct ChunkBest {
  wide_t objective = -1;
  std::uint64_t b = 0;
  NormStats stats;
};

template <class Acc>
ChunkBest scan_chunk(std::span<const std::uint64_t> elems, const Modulus& m, Objective obj, std::uint64_t b_lo,
                     std::uint64_t b_hi) {
  const std::uint64_t p = m.value();
  const std::uint64_t half = m.half();
  std::vector<std::uint64_t> v(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) v[i] = m.mul(elems[i], b_lo);
  ChunkBest best;
  for (std::uint64_t b = b_lo; b < b_hi; ++b) {
    Acc low = 0, high = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::uint64_t x = v[i];
      if (x <= half)
        low += x;
      else
        high += p - x;
      const std::uint64_t nx = x + elems[i];
      v[i] = nx >= p ? nx - p : nx;
    }
    const wide_t lw = static_cast<wide_t>(low), hw = static_cast<wide_t>(high);
    const wide_t val = obj == Objective::zsf ? (lw > static_cast<wide_t>(p) ? lw - p : 0) + hw : lw + hw;
    if (best.objective < 0 || val < best.objective) {
      best.objective = val;
      best.b = b;
      best.stats = NormStats{lw + hw, lw, hw};
      if (val == 0) break;  // nothing later in this chunk can win the tie-break
    }
  }
  return best;
}

}  // namespace

DilationReport dilation_report(const ZpSet& a, Residue b) {
  return finish_report(b, norm_stats(dilate(a, b)), a.p());
}

DilationReport best_dilation(const ZpSet& a, Objective obj, DilationOptions opt) {
  const Modulus& m = a.modulus();
  const std::uint64_t p = m.value();
  if (p > opt.scan_limit)
    throw Error(Errc::capability, "dilation scan limited to p <= " + std::to_string(opt.scan_limit) + ", got " +
                                      std::to_string(p));
  // Reduce each element to [0,p) is already guaranteed; 0 contributes nothing.
  std::vector<std::uint64_t> elems;
  for (auto x : a.elements())
    if (x != 0) elems.push_back(x);

  const bool narrow = static_cast<wide_t>(elems.size()) * p < (static_cast<wide_t>(1) << 62);
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(std::min<std::uint64_t>(p - 1, 256))));
  std::vector<ChunkBest> results(jobs);
  auto run = [&](unsigned j) {
    const std::uint64_t span = p - 1;
    const std::uint64_t lo = 1 + span * j / jobs, hi = 1 + span * (j + 1) / jobs;
    results[j] = narrow ? scan_chunk<std::uint64_t>(elems, m, obj, lo, hi)
                        : scan_chunk<unsigned __int128>(elems, m, obj, lo, hi);
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(run, j);
  }
  const ChunkBest* best = nullptr;
  for (const auto& r : results) {
    if (r.objective < 0) continue;
    if (!best || r.objective < best->objective || (r.objective == best->objective && r.b < best->b)) best = &r;
  }
  return finish_report(Residue(best->b), best->stats, p);
}

ExtremalDiagnostics extremal_diagnostics(const ZpSet& a) {
  const Modulus& m = a.modulus();
  ExtremalDiagnostics d{m, a};
  d.n = static_cast<std::int64_t>(n_of_p(m));
  for (auto x : a.elements()) {
    if (x >= 1 && static_cast<std::int64_t>(x) <= d.n)
      d.a1.push_back(static_cast<std::int64_t>(x));
    else
      d.a2.push_back(x);
  }
  d.t = d.n - static_cast<std::int64_t>(d.a1.size());
  for (std::int64_t i = 1, j = 0; i <= d.n; ++i) {
    if (j < static_cast<std::int64_t>(d.a1.size()) && d.a1[j] == i)
      ++j;
    else
      d.h_list.push_back(i);
  }
  for (auto x : d.a2) {
    const std::int64_t sr = signed_rep(Residue(x), m);
    if (sr >= -2 * d.t - 2 && sr <= -1)
      d.b.push_back(sr);
    else
      d.c_list.push_back(static_cast<std::int64_t>(x));
  }
  std::sort(d.b.begin(), d.b.end());
  std::sort(d.c_list.begin(), d.c_list.end());
  d.s = static_cast<std::int64_t>(d.c_list.size());
  d.h = static_cast<std::int64_t>(static_cast<wide_t>(d.n) * (d.n + 1) / 2 - static_cast<wide_t>(m.value()));
  d.h_in_a1 = std::binary_search(d.a1.begin(), d.a1.end(), d.h);
  const std::int64_t csum = std::accumulate(d.c_list.begin(), d.c_list.end(), std::int64_t{0});
  const std::int64_t hsum = std::accumulate(d.h_list.begin(), d.h_list.end(), std::int64_t{0});
  d.d = csum - hsum;
  d.d_effective = d.h_in_a1 ? d.d : d.d + d.h;
  for (auto x : d.a1)
    if (x != d.h) d.x.push_back(x);
  d.x.insert(d.x.end(), d.c_list.begin(), d.c_list.end());
  d.x_sum = std::accumulate(d.x.begin(), d.x.end(), std::int64_t{0});
  d.lambda = static_cast<double>(a.size()) / std::sqrt(2.0 * static_cast<double>(m.value()));
  return d;
}

wide_t base_identity_lhs(const ExtremalDiagnostics& d) {
  wide_t v = static_cast<wide_t>(d.n) * (d.n + 1) / 2 - d.h;
  for (auto x : d.h_list) v -= x;
  for (auto x : d.c_list) v += x;
  return v;
}

ExpectationFindings check_extremal_expectations(const ExtremalDiagnostics& d) {
  ExpectationFindings f;
  const std::string where = "p=" + std::to_string(d.p.value()) + " t=" + std::to_string(d.t);
  if (!(d.d_effective < 2 * (d.t + 1) + 3)) {
    f.d_bound = false;
    f.messages.push_back(where + ": D=" + std::to_string(d.d_effective) + " not below 2(t+1)+3");
  }
  const auto bs = static_cast<std::int64_t>(d.b.size());
  if (bs * bs > 4 * (d.t + 1)) {
    f.b_size = false;
    f.messages.push_back(where + ": |B|=" + std::to_string(bs) + " exceeds 2 sqrt(t+1)");
  }
  std::int64_t babs = 0;
  for (auto x : d.b) babs -= x;
  // every subset sum of B lies in [-sum|B|, -1]
  if (babs > 2 * d.t + 2) {
    f.sb_confined = false;
    f.messages.push_back(where + ": S_B reaches " + std::to_string(-babs) + " below -2t-2");
  }
  return f;
}

bool matches_exceptional_pattern(std::span<const std::int64_t> values, std::uint64_t p) {
  std::vector<std::int64_t> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const auto n = static_cast<std::int64_t>(v.size());
  if (n < 3) return false;
  if (v[0] != -2 || v[1] != 1) return false;
  for (std::int64_t i = 2; i < n; ++i)
    if (v[i] != i + 1) return false;
  return static_cast<wide_t>(n) * (n + 1) / 2 - 1 == static_cast<wide_t>(p);
}

const char* cancellation_kind_name(CancellationKind k) noexcept {
  switch (k) {
    case CancellationKind::witness: return "witness";
    case CancellationKind::exceptional: return "exceptional";
    case CancellationKind::not_found: return "not-found";
  }
  return "?";
}

namespace {

constexpr std::int64_t dp_cap = std::int64_t{1} << 26;

struct Item {
  std::int64_t weight;
  bool negative;  // an element of B added to the sum rather than a summand removed
};

// base summands (positive integers) minus a chosen subset, plus chosen
// negatives, must total exactly p.
std::optional<std::vector<std::int64_t>> reduce_to_p(const std::vector<std::int64_t>& base,
                                                     const std::vector<Item>& items, std::int64_t p) {
  const std::int64_t total = std::accumulate(base.begin(), base.end(), std::int64_t{0});
  const std::int64_t delta = total - p;
  if (delta < 0) return std::nullopt;
  std::vector<std::int64_t> out;
  if (delta == 0) return base;
  std::int64_t reach = 0;
  for (const auto& it : items) reach += it.weight;
  if (delta > reach || delta > dp_cap) return std::nullopt;
  std::vector<std::int64_t> w;
  for (const auto& it : items) w.push_back(it.weight);
  auto chosen = integer_subset_sum(w, delta);
  if (!chosen) return std::nullopt;
  std::vector<std::int64_t> removed, added;
  for (auto i : *chosen) (items[i].negative ? added : removed).push_back(items[i].weight);
  out = base;
  for (auto r : removed) out.erase(std::find(out.begin(), out.end(), r));
  for (auto b : added) out.push_back(-b);
  return out;
}

}  // namespace

CancellationOutcome attempt_zero_sum_by_cancellation(const ExtremalDiagnostics& d, CancellationOptions opt) {
  if (opt.strict && 6 * d.t > d.n - 24)
    throw Error(Errc::diagnostics_only, "t = " + std::to_string(d.t) + " exceeds n/6 - 4 for n = " +
                                            std::to_string(d.n));
  const Modulus& m = d.p;
  const auto p = static_cast<std::int64_t>(m.value());
  CancellationOutcome out;

  std::vector<std::int64_t> sv;
  for (auto x : d.set.elements()) sv.push_back(signed_rep(Residue(x), m));
  if (matches_exceptional_pattern(sv, m.value())) {
    out.kind = CancellationKind::exceptional;
    out.route = "exceptional-pattern";
    return out;
  }

  auto accept = [&](const std::vector<std::int64_t>& ints, const char* route) {
    out.witness = Witness::make(d.set, ZpSet::from_integers(m, ints), Residue(0));
    out.kind = CancellationKind::witness;
    out.route = route;
    return out;
  };

  std::vector<std::vector<std::int64_t>> bases{d.x};
  if (d.h_in_a1) {
    auto with_h = d.x;
    with_h.push_back(d.h);
    std::sort(with_h.begin(), with_h.end());
    bases.push_back(std::move(with_h));
  }
  std::vector<Item> b_items;
  for (auto x : d.b) b_items.push_back({-x, true});

  // Small excess: trim among the 2t+5 smallest summands, optionally adding
  // negatives from B.
  for (std::size_t k = 0; k < bases.size(); ++k) {
    auto sorted = bases[k];
    std::sort(sorted.begin(), sorted.end());
    std::vector<Item> items;
    const auto lim = std::min<std::size_t>(sorted.size(), static_cast<std::size_t>(2 * d.t + 5));
    for (std::size_t i = 0; i < lim; ++i)
      if (sorted[i] > 0) items.push_back({sorted[i], false});
    items.insert(items.end(), b_items.begin(), b_items.end());
    if (auto r = reduce_to_p(bases[k], items, p)) return accept(*r, k == 0 ? "trim" : "trim-with-h");
  }

  // Large excess: drop outliers largest first until the remainder can be
  // trimmed from the interval part.
  for (std::size_t k = 0; k < bases.size(); ++k) {
    auto cur = bases[k];
    std::vector<std::int64_t> cs = d.c_list;
    std::sort(cs.begin(), cs.end(), std::greater<>());
    for (std::size_t j = 0; j <= cs.size(); ++j) {
      if (j > 0) cur.erase(std::find(cur.begin(), cur.end(), cs[j - 1]));
      const std::int64_t total = std::accumulate(cur.begin(), cur.end(), std::int64_t{0});
      if (total < p) break;
      std::vector<Item> items;
      for (auto x : cur)
        if (x >= 1 && x <= d.n) items.push_back({x, false});
      items.insert(items.end(), b_items.begin(), b_items.end());
      if (auto r = reduce_to_p(cur, items, p)) return accept(*r, "drop-outliers");
    }
  }
  out.route = "exhausted";
  return out;
}

IncompleteDiagnostics incomplete_diagnostics(const ZpSet& a) {
  IncompleteDiagnostics d;
  const auto& m = a.modulus();
  d.n = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(m.value())));
  while (static_cast<wide_t>(d.n) * d.n > m.value()) --d.n;
  while (static_cast<wide_t>(d.n + 1) * (d.n + 1) <= m.value()) ++d.n;
  for (auto x : a.elements()) {
    const std::int64_t s = signed_rep(Residue(x), m);
    if (s >= 0 && s <= d.n)
      d.a1_pos.push_back(s);
    else if (s < 0 && s >= -d.n)
      d.a1_neg.push_back(s);
    else if (s > d.n)
      d.a2_pos.push_back(s);
    else
      d.a2_neg.push_back(s);
  }
  for (auto* v : {&d.a1_pos, &d.a1_neg, &d.a2_pos, &d.a2_neg}) std::sort(v->begin(), v->end());
  return d;
}

bool counting_inequality(std::int64_t l, std::int64_t k, std::int64_t n) noexcept {
  const wide_t lhs = static_cast<wide_t>(l + n + 1) * (n - l);
  const wide_t rhs = static_cast<wide_t>(2 * n + k) * k;
  return lhs > rhs;
}

CoreInequalities core_inequalities(const ZpSet& a, std::int64_t m) {
  CoreInequalities c;
  c.m = m;
  c.n = static_cast<std::int64_t>(n_of_p(a.modulus()));
  c.core_size = core_pairs(a, c.n).size();
  c.applicable = 2 * m * static_cast<std::int64_t>(c.core_size) >= (m + 2) * c.n;
  const auto st = norm_stats(a);
  c.low_sum = st.low_sum;
  c.high_norm = st.high_norm_sum;
  c.low_bound = static_cast<wide_t>(a.p()) + static_cast<wide_t>(m) * (c.n + 1);
  c.high_bound = static_cast<wide_t>(m + 1) * c.n;
  return c;
}

}  // namespace zpsum
