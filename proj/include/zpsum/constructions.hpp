// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "zpsum/zp_core.hpp"

namespace zpsum {

// Exact integer sum of distinct parts; no modular reduction.
struct IntRepresentation {
  std::vector<std::int64_t> parts;
  std::int64_t total = 0;

  static IntRepresentation of(std::vector<std::int64_t> parts);
};

// Parts distinct, all in `ground`, summing to `expected`.
bool check_representation(const IntRepresentation& r, std::span<const std::int64_t> ground, std::int64_t expected);

// Sum chain k_1..k_l, then k_i + k_l, then k_i + k_{l-1} + k_l, ...
std::vector<IntRepresentation> chain_sums(std::span<const std::int64_t> k, std::uint64_t p);

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool contains(std::int64_t x) const noexcept { return lo <= x && x <= hi; }
  bool empty() const noexcept { return hi < lo; }
};

struct IntervalOptions {
  // Off only for small illustrative inputs: skips the t <= n/6 - 3 guard.
  bool enforce_guards = true;
};

// [2t+3, (n+1)(floor(n/2)-t-1)] for A1 in [1,n] with t = n - |A1|.
// Throws invalid_parameters unless t <= n/6 - 3.
Interval representation_interval(std::span<const std::int64_t> a1, std::int64_t n, IntervalOptions opt = {});
IntRepresentation represent_in_interval(std::span<const std::int64_t> a1, std::int64_t n, std::int64_t x,
                                        IntervalOptions opt = {});

using RepresentationOracle = std::function<IntRepresentation(std::int64_t)>;

// inner covers [a,b]; extras are each in [0, b-a). Covers [a, b + sum(extras)].
IntRepresentation extend_interval(const RepresentationOracle& inner, std::int64_t a, std::int64_t b,
                                  std::span<const std::int64_t> extras, std::int64_t y);
// Mirror: extras in (-(b-a), 0]. Covers [a + sum(extras), b].
IntRepresentation extend_interval_nonpositive(const RepresentationOracle& inner, std::int64_t a, std::int64_t b,
                                              std::span<const std::int64_t> extras, std::int64_t y);

struct CorePairing {
  std::int64_t n = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;  // (i, n+1-i), i ascending
  std::vector<std::int64_t> core_elements;                   // sorted

  std::size_t size() const noexcept { return core_elements.size(); }
  std::int64_t core_sum() const noexcept { return (n + 1) * static_cast<std::int64_t>(pairs.size()); }
};

CorePairing core_pairs(std::span<const std::int64_t> a, std::int64_t n);
CorePairing core_pairs(const ZpSet& a, std::int64_t n);

struct CoreOptions {
  // Off only for small illustrative cores: skips the n_min and core-size
  // guards and the upper end of the core interval.
  bool enforce_guards = true;
};

constexpr std::int64_t core_n_min(std::int64_t m) noexcept { return 8 * m * (m + 1); }

// l in [n(m+1), n(m+1)+n] as 2(m+1) distinct core elements.
IntRepresentation represent_via_core(const CorePairing& core, std::int64_t m, std::int64_t l,
                                     CoreOptions opt = {});

struct CoreSplit {
  std::int64_t x0 = 0;
  std::int64_t k = 0;
};
CoreSplit split_core_target(std::int64_t n, std::int64_t m, std::int64_t x) noexcept;
Interval core_interval(const CorePairing& core, std::int64_t m) noexcept;

// x in [n(m+1), sum(core) - (n+1)m] from core elements.
IntRepresentation core_interval_witness(const CorePairing& core, std::int64_t m, std::int64_t x,
                                        CoreOptions opt = {});

enum class Family { extremal_zsf, exceptional, small_incomplete };
Family parse_family(std::string_view name);
const char* family_name(Family f) noexcept;
ZpSet build_family(Family kind, const Modulus& p);

// Deterministic 0/1 subset sum over positive items; returns chosen indices.
std::optional<std::vector<std::size_t>> integer_subset_sum(std::span<const std::int64_t> items, std::int64_t target);

}  // namespace zpsum
