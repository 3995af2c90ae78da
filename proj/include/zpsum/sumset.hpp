// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zpsum/cyclic_bits.hpp"
#include "zpsum/zp_core.hpp"

namespace zpsum {

// Sums of NONEMPTY subsets of A. The empty sum is deliberately excluded, so
// 0 is a member only if some nonempty subset sums to 0 mod p.
class SumSet {
 public:
  SumSet(Modulus m, CyclicBits bits);

  const Modulus& modulus() const noexcept { return m_; }
  const CyclicBits& bits() const noexcept { return bits_; }
  bool contains(std::uint64_t r) const noexcept { return r < m_.value() && bits_.test(r); }
  std::uint64_t count() const noexcept { return count_; }
  std::vector<std::uint64_t> elements() const { return bits_.to_vector(); }

  bool operator==(const SumSet& o) const noexcept { return m_ == o.m_ && bits_ == o.bits_; }

 private:
  Modulus m_;
  CyclicBits bits_;
  std::uint64_t count_;
};

struct EngineOptions {
  // First-reach tables above this modulus are refused.
  std::uint64_t witness_table_limit = std::uint64_t{1} << 28;
};

inline constexpr std::size_t naive_size_limit = 24;

SumSet subset_sums(const ZpSet& a);
SumSet naive_subset_sums(const ZpSet& a);
bool is_zero_sum_free(const ZpSet& a);
bool is_complete(const ZpSet& a);

// Independent check: subset is nonempty, drawn from a, and sums to target.
bool check_witness(const ZpSet& a, const ZpSet& subset, std::uint64_t target) noexcept;

class Witness {
 public:
  // Runs check_witness; throws Errc::internal_contract on failure.
  static Witness make(const ZpSet& a, ZpSet subset, Residue target);

  const ZpSet& subset() const noexcept { return subset_; }
  Residue target() const noexcept { return target_; }

 private:
  Witness(ZpSet s, Residue t) : subset_(std::move(s)), target_(t) {}
  ZpSet subset_;
  Residue target_;
};

// Subset sums plus the first-reach table used to rebuild witnesses.
class WitnessTable {
 public:
  static constexpr std::uint32_t unreachable = 0xFFFFFFFFu;

  WitnessTable(const ZpSet& a, EngineOptions opt = {});

  const ZpSet& set() const noexcept { return a_; }
  const SumSet& sums() const noexcept { return sums_; }
  std::uint32_t first_reach(std::uint64_t r) const noexcept { return first_[r]; }
  std::optional<Witness> witness(Residue target) const;

 private:
  ZpSet a_;
  std::vector<std::uint32_t> first_;  // filled while sums_ is built
  SumSet sums_;
};

std::optional<Witness> witness(const ZpSet& a, Residue target, EngineOptions opt = {});

}  // namespace zpsum
