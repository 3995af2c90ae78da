// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zpsum/sumset.hpp"
#include "zpsum/zp_core.hpp"

namespace zpsum {

enum class Objective { zsf, incomplete };

struct DilationReport {
  Residue b{1};
  NormStats stats;
  wide_t e1 = 0;  // max(0, low_sum - p)
  wide_t e2 = 0;  // high_norm_sum
  wide_t incomplete_error = 0;  // max(0, total_norm - p)

  wide_t objective(Objective o) const noexcept { return o == Objective::zsf ? e1 + e2 : stats.total_norm; }
};

struct DilationOptions {
  unsigned jobs = 1;
  std::uint64_t scan_limit = 10'000'000;
};

DilationReport dilation_report(const ZpSet& a, Residue b);
// Exhaustive over b in [1, p-1]; ties go to the smallest b.
DilationReport best_dilation(const ZpSet& a, Objective obj, DilationOptions opt = {});

struct ExtremalDiagnostics {
  Modulus p;
  ZpSet set;
  std::int64_t n = 0;
  std::vector<std::int64_t> a1{};       // A within [1,n]
  std::vector<std::uint64_t> a2{};      // the rest, as residues
  std::int64_t t = 0;
  std::vector<std::int64_t> h_list{};   // [1,n] minus A1
  std::vector<std::int64_t> b{};        // signed reps in [-2t-2, -1]
  std::vector<std::int64_t> c_list{};   // A2 minus B, residue values ascending
  std::int64_t s = 0;
  std::int64_t h = 0;                 // n(n+1)/2 - p
  bool h_in_a1 = false;
  std::int64_t d = 0;                 // sum c_i - sum h_j
  std::int64_t d_effective = 0;       // h dropped from the h_j when h is missing
  std::vector<std::int64_t> x{};        // (A1 minus h) with C
  std::int64_t x_sum = 0;
  double lambda = 0.0;                // |A| / sqrt(2p)
};

ExtremalDiagnostics extremal_diagnostics(const ZpSet& a);
// sum([1,n] minus h) - sum(h_list) + sum(c_list); equals p + D.
wide_t base_identity_lhs(const ExtremalDiagnostics& d);

struct ExpectationFindings {
  bool d_bound = true;      // D < 2(t+1)+3
  bool b_size = true;       // |B| <= 2 sqrt(t+1)
  bool sb_confined = true;  // S_B within [-2t-2, -1] as integers
  std::vector<std::string> messages;
  bool all() const noexcept { return d_bound && b_size && sb_confined; }
};
ExpectationFindings check_extremal_expectations(const ExtremalDiagnostics& d);

// Integer pattern {-2, 1, 3, 4, ..., n} with p = n(n+1)/2 - 1.
bool matches_exceptional_pattern(std::span<const std::int64_t> values, std::uint64_t p);

enum class CancellationKind { witness, exceptional, not_found };

struct CancellationOutcome {
  CancellationKind kind = CancellationKind::not_found;
  std::optional<Witness> witness;
  std::string route;
};

struct CancellationOptions {
  // Refuse inputs outside t <= n/6 - 4 instead of attempting them.
  bool strict = false;
};

CancellationOutcome attempt_zero_sum_by_cancellation(const ExtremalDiagnostics& d, CancellationOptions opt = {});
const char* cancellation_kind_name(CancellationKind k) noexcept;

struct IncompleteDiagnostics {
  std::int64_t n = 0;  // floor(sqrt p)
  std::vector<std::int64_t> a1_pos;  // signed reps in [0, n]
  std::vector<std::int64_t> a1_neg;  // [-n, -1]
  std::vector<std::int64_t> a2_pos;  // > n
  std::vector<std::int64_t> a2_neg;  // < -n
  std::size_t t1_pos() const noexcept { return a1_pos.size(); }
  std::size_t t1_neg() const noexcept { return a1_neg.size(); }
  std::size_t t1() const noexcept { return a1_pos.size() + a1_neg.size(); }
};

IncompleteDiagnostics incomplete_diagnostics(const ZpSet& a);

// (l+n+1)(n-l) > (2n+k)k
bool counting_inequality(std::int64_t l, std::int64_t k, std::int64_t n) noexcept;

struct CoreInequalities {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::size_t core_size = 0;
  bool applicable = false;  // core >= (1/2 + 1/m) n
  wide_t low_sum = 0;       // sum of a < p/2
  wide_t high_norm = 0;     // sum of norms of a > p/2
  wide_t low_bound = 0;     // p + m(n+1)
  wide_t high_bound = 0;    // (m+1) n
  bool holds() const noexcept { return !applicable || (low_sum <= low_bound && high_norm <= high_bound); }
};

CoreInequalities core_inequalities(const ZpSet& a, std::int64_t m);

}  // namespace zpsum
