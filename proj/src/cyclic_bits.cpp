// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#include "zpsum/cyclic_bits.hpp"

#include <algorithm>

namespace zpsum {

namespace {

// dst |= (src << s) truncated to the word span; s < 64 * n.
inline void shl_or(const std::uint64_t* src, std::uint64_t* dst, std::size_t n, std::uint64_t s) noexcept {
  const std::size_t q = s >> 6;
  const unsigned r = s & 63;
  if (r == 0) {
    for (std::size_t i = n; i-- > q;) dst[i] |= src[i - q];
    return;
  }
  for (std::size_t i = n; i-- > q + 1;) dst[i] |= (src[i - q] << r) | (src[i - q - 1] >> (64 - r));
  dst[q] |= src[0] << r;
}

// dst |= (src >> s); s < 64 * n.
inline void shr_or(const std::uint64_t* src, std::uint64_t* dst, std::size_t n, std::uint64_t s) noexcept {
  const std::size_t q = s >> 6;
  const unsigned r = s & 63;
  if (r == 0) {
    for (std::size_t i = 0; i + q < n; ++i) dst[i] |= src[i + q];
    return;
  }
  for (std::size_t i = 0; i + q + 1 < n; ++i) dst[i] |= (src[i + q] >> r) | (src[i + q + 1] << (64 - r));
  dst[n - 1 - q] |= src[n - 1] >> r;
}

}  // namespace

CyclicBits::CyclicBits(std::uint64_t width)
    : width_(width),
      top_mask_(width % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (width % 64)) - 1),
      words_((width + 63) / 64, 0) {}

void CyclicBits::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

void CyclicBits::fill() noexcept {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  if (!words_.empty()) words_.back() &= top_mask_;
}

void CyclicBits::clear_below(std::uint64_t i) noexcept {
  i = std::min(i, width_);
  const std::size_t full = i >> 6;
  std::fill(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(full), 0);
  if ((i & 63) != 0) words_[full] &= ~std::uint64_t{0} << (i & 63);
}

std::uint64_t CyclicBits::count() const noexcept {
  std::uint64_t c = 0;
  for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

bool CyclicBits::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void CyclicBits::rotate_into(const CyclicBits& src, std::uint64_t shift, CyclicBits& dst) noexcept {
  dst.clear();
  dst.or_rotated(src, shift);
}

void CyclicBits::or_rotated(const CyclicBits& src, std::uint64_t shift) noexcept {
  const std::size_t n = words_.size();
  if (n == 0) return;
  shift %= width_;
  if (shift == 0) {
    *this |= src;
    return;
  }
  // Left part: bits [0, width - shift) move up by shift; the overflow past
  // width is cut by the top mask. Right part: bits [width - shift, width)
  // wrap to the bottom.
  shl_or(src.words_.data(), words_.data(), n, shift);
  words_[n - 1] &= top_mask_;
  shr_or(src.words_.data(), words_.data(), n, width_ - shift);
}

CyclicBits& CyclicBits::operator|=(const CyclicBits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

CyclicBits& CyclicBits::operator&=(const CyclicBits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

void CyclicBits::and_not(const CyclicBits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
}

CyclicBits CyclicBits::negated() const {
  CyclicBits out(width_);
  for_each_set([&](std::uint64_t i) { out.set(i == 0 ? 0 : width_ - i); });
  return out;
}

std::uint64_t CyclicBits::find_next(std::uint64_t from) const noexcept {
  if (from >= width_) return width_;
  std::size_t w = from >> 6;
  std::uint64_t x = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (x) return std::min<std::uint64_t>(w * 64 + std::countr_zero(x), width_);
    if (++w == words_.size()) return width_;
    x = words_[w];
  }
}

std::vector<std::uint64_t> CyclicBits::to_vector() const {
  std::vector<std::uint64_t> v;
  v.reserve(count());
  for_each_set([&](std::uint64_t i) { v.push_back(i); });
  return v;
}

}  // namespace zpsum
