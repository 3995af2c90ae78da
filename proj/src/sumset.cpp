// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#include "zpsum/sumset.hpp"

#include <algorithm>
#include <string>

namespace zpsum {

SumSet::SumSet(Modulus m, CyclicBits bits) : m_(m), bits_(std::move(bits)), count_(bits_.count()) {}

SumSet subset_sums(const ZpSet& a) {
  const auto p = a.p();
  CyclicBits s(p), scratch(p);
  for (auto x : a.elements()) {
    // rotation must read the pre-step S
    scratch = s;
    s.or_rotated(scratch, x);
    s.set(x);
  }
  return SumSet(a.modulus(), std::move(s));
}

SumSet naive_subset_sums(const ZpSet& a) {
  if (a.size() > naive_size_limit)
    throw Error(Errc::size_limit, "naive enumeration limited to " + std::to_string(naive_size_limit) +
                                      " elements, got " + std::to_string(a.size()));
  const auto& m = a.modulus();
  CyclicBits s(m.value());
  const std::size_t k = a.size();
  // Gray-code walk: one add or subtract per subset.
  std::uint64_t sum = 0;
  std::uint64_t prev = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    std::uint64_t g = i ^ (i >> 1);
    std::uint64_t flip = g ^ prev;
    auto j = static_cast<std::size_t>(std::countr_zero(flip));
    sum = (g & flip) ? m.add(sum, a[j]) : m.sub(sum, a[j]);
    s.set(sum);
    prev = g;
  }
  return SumSet(m, std::move(s));
}

bool is_zero_sum_free(const ZpSet& a) {
  if (a.contains(0)) return false;
  return !subset_sums(a).contains(0);
}

bool is_complete(const ZpSet& a) { return subset_sums(a).count() == a.p(); }

bool check_witness(const ZpSet& a, const ZpSet& subset, std::uint64_t target) noexcept {
  if (subset.empty() || !(subset.modulus() == a.modulus())) return false;
  const auto& m = a.modulus();
  if (target >= m.value()) return false;
  std::uint64_t sum = 0;
  for (auto x : subset.elements()) {
    if (!a.contains(x)) return false;
    sum = m.add(sum, x);
  }
  // ZpSet guarantees distinctness, re-checked here since this is the trust anchor
  auto e = subset.elements();
  if (std::adjacent_find(e.begin(), e.end()) != e.end()) return false;
  return sum == target;
}

Witness Witness::make(const ZpSet& a, ZpSet subset, Residue target) {
  if (!check_witness(a, subset, target.value))
    throw Error(Errc::internal_contract, "witness failed independent check for target " + std::to_string(target.value));
  return Witness(std::move(subset), target);
}

namespace {

CyclicBits build_first_reach(const ZpSet& a, std::vector<std::uint32_t>& first) {
  const auto p = a.p();
  CyclicBits s(p), fresh(p);
  first.assign(p, WitnessTable::unreachable);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CyclicBits::rotate_into(s, a[i], fresh);
    fresh.set(a[i]);
    fresh.and_not(s);
    fresh.for_each_set([&](std::uint64_t r) { first[r] = static_cast<std::uint32_t>(i); });
    s |= fresh;
  }
  return s;
}

const ZpSet& checked_for_table(const ZpSet& a, const EngineOptions& opt) {
  if (a.p() > opt.witness_table_limit)
    throw Error(Errc::capability, "witness table disabled for p = " + std::to_string(a.p()) + " above limit " +
                                      std::to_string(opt.witness_table_limit));
  if (a.size() >= WitnessTable::unreachable) throw Error(Errc::size_limit, "set too large for 32-bit witness indices");
  return a;
}

}  // namespace

WitnessTable::WitnessTable(const ZpSet& a, EngineOptions opt)
    : a_(checked_for_table(a, opt)), sums_(a.modulus(), build_first_reach(a_, first_)) {}

std::optional<Witness> WitnessTable::witness(Residue target) const {
  const auto& m = a_.modulus();
  if (target.value >= m.value() || first_[target.value] == unreachable) return std::nullopt;
  std::vector<std::uint64_t> parts;
  std::uint64_t r = target.value;
  std::uint32_t bound = unreachable;
  while (true) {
    std::uint32_t i = first_[r];
    if (i == unreachable || i >= bound)
      throw Error(Errc::internal_contract, "first-reach walk broke at residue " + std::to_string(r));
    parts.push_back(a_[i]);
    if (r == a_[i]) break;
    r = m.sub(r, a_[i]);
    bound = i;
  }
  return Witness::make(a_, ZpSet::from_residues(m, parts), target);
}

std::optional<Witness> witness(const ZpSet& a, Residue target, EngineOptions opt) {
  return WitnessTable(a, opt).witness(target);
}

}  // namespace zpsum
