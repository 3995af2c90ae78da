// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "zpsum/zp_core.hpp"

namespace zpsum {

enum class SearchPredicate {
  zero_sum_free,
  incomplete,
  // S_A misses some nonzero residue; {0} with such A is incomplete.
  misses_nonzero,
};

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000'000;
  unsigned jobs = 1;
  // Fix 1 in A. Every predicate here is dilation invariant.
  bool dilation_reduction = true;
  // Zero-sum-free only: clique cover of the pair-conflict graph as a bound.
  bool clique_bound = true;
  // Incomplete only: also consider sets containing 0.
  bool include_zero = true;
  // Enumerate the maximum-size sets afterwards to fill extremal_count.
  bool count_extremal = false;
  std::size_t max_representatives = 8;
  // Searches still running at this instant stop and report non-exhaustive.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SearchResult {
  Modulus p;
  std::uint64_t max_size = 0;
  // Dilation orbits when reduction is on, raw sets otherwise.
  std::optional<std::uint64_t> extremal_count{};
  std::vector<ZpSet> representatives{};
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
};

SearchResult max_zero_sum_free(const Modulus& p, SearchOptions opt = {});
SearchResult max_incomplete(const Modulus& p, SearchOptions opt = {});

struct Enumeration {
  std::uint64_t size = 0;
  std::vector<ZpSet> sets;  // ascending DFS order, hence lexicographic
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
};

// All sets of exactly `size` (containing 1 under reduction) satisfying pred.
Enumeration enumerate_sets(const Modulus& p, SearchPredicate pred, std::uint64_t size, SearchOptions opt = {},
                           std::size_t max_sets = static_cast<std::size_t>(-1));

// Lexicographically least dilate.
ZpSet canonical_dilate(const ZpSet& a);

struct Orbit {
  ZpSet canonical;
  std::uint64_t members_seen = 0;
  bool contains_initial_interval = false;  // {1, ..., n(p)-1}
  bool contains_exceptional = false;       // {-2, 1, 3, ..., n(p)}
};

struct Classification {
  Modulus p;
  std::uint64_t size = 0;
  std::vector<Orbit> orbits{};  // sorted by canonical form
  std::vector<ZpSet> sets{};    // every enumerated extremal set
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
};

std::vector<Orbit> group_orbits(const Modulus& p, const std::vector<ZpSet>& sets);
Classification classify_extremal_zsf(const Modulus& p, SearchOptions opt = {});

std::vector<std::uint64_t> exceptional_prime_scan(std::uint64_t n_max);

}  // namespace zpsum
