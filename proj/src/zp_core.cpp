// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#include "zpsum/zp_core.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace zpsum {

const char* errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::not_prime: return "not-prime";
    case Errc::duplicate_element: return "duplicate-element";
    case Errc::invalid_dilation: return "invalid-dilation";
    case Errc::size_limit: return "size-limit";
    case Errc::capability: return "capability";
    case Errc::out_of_range: return "out-of-range";
    case Errc::invalid_parameters: return "invalid-parameters";
    case Errc::invalid_family: return "invalid-family";
    case Errc::internal_contract: return "internal-contract";
    case Errc::diagnostics_only: return "diagnostics-only";
    case Errc::io: return "io";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : small) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Jim Sinclair's base set, deterministic below 2^64.
  static constexpr std::array<std::uint64_t, 7> bases{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  for (auto a : bases) {
    std::uint64_t x = a % n;
    if (x == 0) continue;
    x = pow_mod(x, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Modulus::Modulus(std::uint64_t p) : p_(p) {
  if (p < 3 || !is_prime(p))
    throw Error(Errc::not_prime, "modulus " + std::to_string(p) + " is not a prime >= 3");
}

Residue Modulus::reduce(std::int64_t x) const noexcept {
  if (x >= 0) return Residue(static_cast<std::uint64_t>(x) % p_);
  // -(x+1) avoids overflow at INT64_MIN
  std::uint64_t mag = static_cast<std::uint64_t>(-(x + 1)) + 1;
  std::uint64_t r = mag % p_;
  return Residue(r == 0 ? 0 : p_ - r);
}

Residue Modulus::residue(std::uint64_t x) const {
  if (x >= p_)
    throw Error(Errc::invalid_argument,
                "residue " + std::to_string(x) + " not in [0, " + std::to_string(p_) + ")");
  return Residue(x);
}

std::uint64_t Modulus::inverse(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw Error(Errc::invalid_dilation, "zero has no inverse");
  return pow_mod(a, p_ - 2, p_);
}

namespace {

void sort_and_check(std::vector<std::uint64_t>& v, std::uint64_t p) {
  std::sort(v.begin(), v.end());
  auto dup = std::adjacent_find(v.begin(), v.end());
  if (dup != v.end())
    throw Error(Errc::duplicate_element, "duplicate residue " + std::to_string(*dup) + " mod " + std::to_string(p));
}

}  // namespace

ZpSet ZpSet::from_integers(Modulus m, std::span<const std::int64_t> values) {
  ZpSet s(m);
  s.elems_.reserve(values.size());
  for (auto x : values) s.elems_.push_back(m.reduce(x).value);
  sort_and_check(s.elems_, m.value());
  return s;
}

ZpSet ZpSet::from_residues(Modulus m, std::span<const std::uint64_t> values) {
  ZpSet s(m);
  s.elems_.reserve(values.size());
  for (auto x : values) s.elems_.push_back(m.residue(x).value);
  sort_and_check(s.elems_, m.value());
  return s;
}

bool ZpSet::contains(std::uint64_t r) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), r);
}

bool ZpSet::lex_less(const ZpSet& other) const noexcept {
  return std::lexicographical_compare(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
}

std::uint64_t norm(Residue x, const Modulus& p) noexcept {
  return std::min(x.value, p.value() - x.value);
}

std::int64_t signed_rep(Residue x, const Modulus& p) noexcept {
  if (x.value <= p.half()) return static_cast<std::int64_t>(x.value);
  return -static_cast<std::int64_t>(p.value() - x.value);
}

ZpSet dilate(const ZpSet& a, Residue b) {
  const Modulus& m = a.modulus();
  if (b.value % m.value() == 0) throw Error(Errc::invalid_dilation, "dilation by zero");
  std::vector<std::uint64_t> out;
  out.reserve(a.size());
  for (auto x : a.elements()) out.push_back(m.mul(x, b.value % m.value()));
  return ZpSet::from_residues(m, out);
}

namespace {

wide_t tri(wide_t n) { return n * (n + 1) / 2; }

std::uint64_t isqrt_floor(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (static_cast<wide_t>(r) * r > v) --r;
  while (static_cast<wide_t>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Largest m with min_norm_total(m) < bound.
std::uint64_t packing_limit(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // even: k(k+1) < bound
  auto k1 = isqrt_floor(bound);
  while (k1 > 0 && static_cast<wide_t>(k1) * (k1 + 1) >= bound) --k1;
  // odd: (k+1)^2 < bound
  auto r = isqrt_floor(bound - 1);
  std::uint64_t m_even = 2 * k1;
  std::uint64_t m_odd = r >= 1 ? 2 * (r - 1) + 1 : 0;
  return std::max(m_even, m_odd);
}

}  // namespace

std::uint64_t n_of_p(const Modulus& pm) noexcept {
  const wide_t p = pm.value();
  auto n = static_cast<std::uint64_t>(std::sqrt(2.0L * static_cast<long double>(pm.value())));
  if (n < 1) n = 1;
  while (n > 1 && tri(n - 1) >= p) --n;
  while (tri(n) < p) ++n;
  return n;
}

bool exceptional_check(const Modulus& pm) noexcept {
  auto n = n_of_p(pm);
  return tri(n) - 1 == static_cast<wide_t>(pm.value());
}

wide_t min_norm_total(std::uint64_t m) noexcept {
  wide_t k = m / 2;
  return (m % 2 == 0) ? k * (k + 1) : (k + 1) * (k + 1);
}

std::uint64_t m_of_p(const Modulus& p) noexcept { return packing_limit(p.value()); }

std::uint64_t m_strict_of_p(const Modulus& p) noexcept { return packing_limit(p.value() - 1); }

NormStats norm_stats(const ZpSet& a) noexcept {
  NormStats s;
  const auto& m = a.modulus();
  for (auto x : a.elements()) {
    if (x == 0) continue;
    if (x <= m.half())
      s.low_sum += x;
    else
      s.high_norm_sum += m.value() - x;
  }
  s.total_norm = s.low_sum + s.high_norm_sum;
  return s;
}

ZpSet parse_set_text(const Modulus& p, std::string_view text) {
  std::vector<std::int64_t> vals;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) continue;
    line = line.substr(b);
    if (line.front() == '#') continue;
    line = line.substr(0, line.find_last_not_of(" \t\r") + 1);
    const char* first = line.data();
    if (*first == '+') ++first;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), v);
    if (ec != std::errc{} || ptr != line.data() + line.size())
      throw Error(Errc::parse, "line " + std::to_string(line_no) + ": not an integer: '" + std::string(line) + "'");
    vals.push_back(v);
  }
  return ZpSet::from_integers(p, vals);
}

ZpSet read_set_file(const Modulus& p, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open set file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_set_text(p, ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string to_string(wide_t v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace zpsum
