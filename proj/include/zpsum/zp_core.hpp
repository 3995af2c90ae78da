// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "zpsum/error.hpp"

namespace zpsum {

// Wide accumulator for norm and element sums: |A| * p can exceed 64 bits.
using wide_t = __int128;

bool is_prime(std::uint64_t n) noexcept;
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;

struct Residue {
  std::uint64_t value = 0;
  constexpr Residue() = default;
  constexpr explicit Residue(std::uint64_t v) : value(v) {}
  auto operator<=>(const Residue&) const = default;
};

class Modulus {
 public:
  // Throws Errc::not_prime for composite or p < 3.
  explicit Modulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  std::uint64_t half() const noexcept { return (p_ - 1) / 2; }

  Residue reduce(std::int64_t x) const noexcept;
  Residue residue(std::uint64_t x) const;  // requires x < p
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= p_ - b ? a - (p_ - b) : a + b;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return mul_mod(a, b, p_); }
  std::uint64_t inverse(std::uint64_t a) const;  // a != 0

  bool operator==(const Modulus&) const = default;

 private:
  std::uint64_t p_;
};

// Sorted set of distinct residues.
class ZpSet {
 public:
  explicit ZpSet(Modulus m) : m_(m) {}

  // Reduces signed input mod p; a collision after reduction is an error.
  static ZpSet from_integers(Modulus m, std::span<const std::int64_t> values);
  // Input must already lie in [0, p).
  static ZpSet from_residues(Modulus m, std::span<const std::uint64_t> values);

  const Modulus& modulus() const noexcept { return m_; }
  std::uint64_t p() const noexcept { return m_.value(); }
  std::span<const std::uint64_t> elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  bool contains(std::uint64_t r) const noexcept;
  std::uint64_t operator[](std::size_t i) const noexcept { return elems_[i]; }

  bool operator==(const ZpSet&) const = default;
  // Lexicographic on the sorted element sequence; moduli assumed equal.
  bool lex_less(const ZpSet& other) const noexcept;

 private:
  Modulus m_;
  std::vector<std::uint64_t> elems_;
};

std::uint64_t norm(Residue x, const Modulus& p) noexcept;
std::int64_t signed_rep(Residue x, const Modulus& p) noexcept;
ZpSet dilate(const ZpSet& a, Residue b);

std::uint64_t n_of_p(const Modulus& p) noexcept;
bool exceptional_check(const Modulus& p) noexcept;
std::uint64_t m_of_p(const Modulus& p) noexcept;
// Largest m whose minimal norm packing totals at most p - 2, the bound that
// actually forces incompleteness of a zero-free set.
std::uint64_t m_strict_of_p(const Modulus& p) noexcept;
// Total of the minimal norm packing 1,1,2,2,... with m terms.
wide_t min_norm_total(std::uint64_t m) noexcept;

struct NormStats {
  wide_t total_norm = 0;
  wide_t low_sum = 0;
  wide_t high_norm_sum = 0;
  bool operator==(const NormStats&) const = default;
};

NormStats norm_stats(const ZpSet& a) noexcept;

// One integer per line, '#' comments, blank lines skipped.
ZpSet parse_set_text(const Modulus& p, std::string_view text);
ZpSet read_set_file(const Modulus& p, const std::filesystem::path& path);

std::string to_string(wide_t v);

}  // namespace zpsum
