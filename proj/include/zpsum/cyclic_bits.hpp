// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace zpsum {

// Packed bit vector of width p, indices taken cyclically mod p.
// Bits above the width in the top word are kept zero.
class CyclicBits {
 public:
  CyclicBits() = default;
  explicit CyclicBits(std::uint64_t width);

  std::uint64_t width() const noexcept { return width_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  bool test(std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint64_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() noexcept;
  void fill() noexcept;
  void clear_below(std::uint64_t i) noexcept;  // bits [0, i)
  std::uint64_t count() const noexcept;
  bool all() const noexcept { return count() == width_; }
  bool none() const noexcept;

  // dst = src rotated by shift: bit i moves to (i + shift) mod width.
  static void rotate_into(const CyclicBits& src, std::uint64_t shift, CyclicBits& dst) noexcept;
  // *this |= src rotated by shift. src must not alias *this.
  void or_rotated(const CyclicBits& src, std::uint64_t shift) noexcept;

  CyclicBits& operator|=(const CyclicBits& o) noexcept;
  CyclicBits& operator&=(const CyclicBits& o) noexcept;
  void and_not(const CyclicBits& o) noexcept;
  // bit i -> bit (width - i) mod width
  CyclicBits negated() const;

  // Index of first set bit at or after `from`, or width() if none.
  std::uint64_t find_next(std::uint64_t from) const noexcept;

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        f(static_cast<std::uint64_t>(w * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  std::vector<std::uint64_t> to_vector() const;

  bool operator==(const CyclicBits&) const = default;

  std::uint64_t top_mask() const noexcept { return top_mask_; }

 private:
  std::uint64_t width_ = 0;
  std::uint64_t top_mask_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace zpsum
