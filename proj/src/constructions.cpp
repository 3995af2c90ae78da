// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#include "zpsum/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zpsum {

IntRepresentation IntRepresentation::of(std::vector<std::int64_t> parts) {
  IntRepresentation r;
  r.total = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
  r.parts = std::move(parts);
  return r;
}

bool check_representation(const IntRepresentation& r, std::span<const std::int64_t> ground, std::int64_t expected) {
  std::vector<std::int64_t> g(ground.begin(), ground.end());
  std::sort(g.begin(), g.end());
  std::vector<std::int64_t> parts = r.parts;
  std::sort(parts.begin(), parts.end());
  if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) return false;
  std::int64_t sum = 0;
  for (auto x : parts) {
    if (!std::binary_search(g.begin(), g.end(), x)) return false;
    sum += x;
  }
  return sum == r.total && sum == expected;
}

std::vector<IntRepresentation> chain_sums(std::span<const std::int64_t> kin, std::uint64_t p) {
  std::vector<std::int64_t> k(kin.begin(), kin.end());
  std::sort(k.begin(), k.end());
  if (k.empty()) throw Error(Errc::invalid_argument, "chain needs at least one element");
  if (k.front() <= 0) throw Error(Errc::invalid_argument, "chain elements must be positive");
  if (std::adjacent_find(k.begin(), k.end()) != k.end())
    throw Error(Errc::invalid_argument, "chain elements must be distinct");
  wide_t total = 0;
  for (auto x : k) total += x;
  if (total > static_cast<wide_t>(p))
    throw Error(Errc::invalid_argument, "chain total " + to_string(total) + " exceeds p = " + std::to_string(p));

  const std::size_t l = k.size();
  std::vector<IntRepresentation> out;
  out.reserve(l * (l + 1) / 2);
  std::vector<std::int64_t> suffix;
  for (std::size_t level = 0; level < l; ++level) {
    if (level > 0) suffix.push_back(k[l - level]);
    for (std::size_t i = 0; i + level < l; ++i) {
      std::vector<std::int64_t> parts{k[i]};
      parts.insert(parts.end(), suffix.rbegin(), suffix.rend());
      out.push_back(IntRepresentation::of(std::move(parts)));
    }
  }
  return out;
}

namespace {

class Membership {
 public:
  Membership(std::span<const std::int64_t> a, std::int64_t n) : n_(n), in_(static_cast<std::size_t>(n) + 2, 0) {
    for (auto x : a) {
      if (x < 1 || x > n)
        throw Error(Errc::invalid_argument, "element " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
      if (in_[x]) throw Error(Errc::invalid_argument, "duplicate element " + std::to_string(x));
      in_[x] = 1;
    }
  }
  bool has(std::int64_t v) const noexcept { return v >= 1 && v <= n_ && in_[v]; }

 private:
  std::int64_t n_;
  std::vector<char> in_;
};

std::optional<IntRepresentation> pair_scan(const Membership& g, std::int64_t x) {
  for (std::int64_t i = 1; 2 * i < x; ++i)
    if (g.has(i) && g.has(x - i)) return IntRepresentation::of({i, x - i});
  return std::nullopt;
}

// x = K(n+1) + R: a triple summing to n+1+R plus K-1 complementary pairs.
std::optional<IntRepresentation> triple_and_pairs(const Membership& g, std::int64_t n, std::int64_t K,
                                                  std::int64_t R, std::size_t triple_limit) {
  if (K < 1) return std::nullopt;
  const std::int64_t t3 = n + 1 + R;
  std::size_t tried = 0;
  for (std::int64_t c = n; c >= 1; --c) {
    if (!g.has(c)) continue;
    const std::int64_t rest = t3 - c;
    for (std::int64_t a = 1; 2 * a < rest; ++a) {
      const std::int64_t b = rest - a;
      if (b > n || a == c || b == c || !g.has(a) || !g.has(b)) continue;
      std::vector<std::int64_t> parts{a, b, c};
      for (std::int64_t i = 1; 2 * i < n + 1 && static_cast<std::int64_t>(parts.size()) < 3 + 2 * (K - 1); ++i) {
        const std::int64_t j = n + 1 - i;
        if (i == a || i == b || i == c || j == a || j == b || j == c) continue;
        if (g.has(i) && g.has(j)) {
          parts.push_back(i);
          parts.push_back(j);
        }
      }
      if (static_cast<std::int64_t>(parts.size()) == 3 + 2 * (K - 1)) return IntRepresentation::of(std::move(parts));
      if (++tried >= triple_limit) return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

Interval representation_interval(std::span<const std::int64_t> a1, std::int64_t n, IntervalOptions opt) {
  if (n < 1) throw Error(Errc::invalid_argument, "n must be positive");
  const auto t = n - static_cast<std::int64_t>(a1.size());
  if (t < 0) throw Error(Errc::invalid_argument, "A1 larger than [1,n]");
  if (opt.enforce_guards && 6 * t > n - 18)
    throw Error(Errc::invalid_parameters,
                "t = " + std::to_string(t) + " exceeds n/6 - 3 for n = " + std::to_string(n));
  return {2 * t + 3, (n + 1) * (n / 2 - t - 1)};
}

IntRepresentation represent_in_interval(std::span<const std::int64_t> a1, std::int64_t n, std::int64_t x,
                                        IntervalOptions opt) {
  Membership g(a1, n);
  const Interval iv = representation_interval(a1, n, opt);
  if (!iv.contains(x))
    throw Error(Errc::out_of_range, "x = " + std::to_string(x) + " outside [" + std::to_string(iv.lo) + ", " +
                                        std::to_string(iv.hi) + "]");
  std::optional<IntRepresentation> r;
  if (x <= n) {
    r = pair_scan(g, x);
  } else {
    const std::int64_t k = x / (n + 1), rem = x % (n + 1);
    // The first triple can cost one pair too many near the top of the
    // interval; borrowing one pair into the triple target restores the count.
    for (std::size_t limit : {std::size_t{8}, static_cast<std::size_t>(-1)}) {
      r = triple_and_pairs(g, n, k, rem, limit);
      if (!r) r = triple_and_pairs(g, n, k - 1, rem + n + 1, limit);
      if (r) break;
    }
  }
  if (!r || !check_representation(*r, a1, x))
    throw Error(Errc::internal_contract, "no representation of " + std::to_string(x) + " found for n = " +
                                             std::to_string(n));
  return *r;
}

IntRepresentation extend_interval(const RepresentationOracle& inner, std::int64_t a, std::int64_t b,
                                  std::span<const std::int64_t> extras, std::int64_t y) {
  if (a > b) throw Error(Errc::invalid_argument, "empty base interval");
  std::vector<std::int64_t> ex(extras.begin(), extras.end());
  std::int64_t extra_sum = 0;
  for (auto e : ex) {
    if (e < 0 || e >= b - a)
      throw Error(Errc::invalid_argument, "extra " + std::to_string(e) + " not in [0, " + std::to_string(b - a) + ")");
    extra_sum += e;
  }
  if (y < a || y > b + extra_sum)
    throw Error(Errc::out_of_range, "y = " + std::to_string(y) + " outside [" + std::to_string(a) + ", " +
                                        std::to_string(b + extra_sum) + "]");
  std::sort(ex.begin(), ex.end(), std::greater<>());
  std::vector<std::int64_t> used;
  std::int64_t rem = y;
  for (auto e : ex) {
    if (rem <= b) break;
    used.push_back(e);
    rem -= e;
  }
  IntRepresentation base = inner(rem);
  if (base.total != rem) throw Error(Errc::internal_contract, "inner oracle returned a wrong total");
  for (auto e : used) {
    if (std::find(base.parts.begin(), base.parts.end(), e) != base.parts.end())
      throw Error(Errc::internal_contract, "extra " + std::to_string(e) + " collides with an inner part");
  }
  used.insert(used.end(), base.parts.begin(), base.parts.end());
  return IntRepresentation::of(std::move(used));
}

IntRepresentation extend_interval_nonpositive(const RepresentationOracle& inner, std::int64_t a, std::int64_t b,
                                              std::span<const std::int64_t> extras, std::int64_t y) {
  std::vector<std::int64_t> neg(extras.size());
  std::transform(extras.begin(), extras.end(), neg.begin(), std::negate<>());
  auto mirrored = [&](std::int64_t z) {
    IntRepresentation r = inner(-z);
    for (auto& x : r.parts) x = -x;
    r.total = -r.total;
    return r;
  };
  IntRepresentation r = extend_interval(mirrored, -b, -a, neg, -y);
  for (auto& x : r.parts) x = -x;
  r.total = -r.total;
  return r;
}

CorePairing core_pairs(std::span<const std::int64_t> a, std::int64_t n) {
  CorePairing c;
  c.n = n;
  if (n < 1) return c;
  std::vector<char> in(static_cast<std::size_t>(n) + 2, 0);
  for (auto x : a)
    if (x >= 1 && x <= n) in[x] = 1;
  for (std::int64_t i = 1; 2 * i <= n; ++i) {
    if (in[i] && in[n + 1 - i]) {
      c.pairs.emplace_back(i, n + 1 - i);
      c.core_elements.push_back(i);
      c.core_elements.push_back(n + 1 - i);
    }
  }
  std::sort(c.core_elements.begin(), c.core_elements.end());
  return c;
}

CorePairing core_pairs(const ZpSet& a, std::int64_t n) {
  std::vector<std::int64_t> v;
  for (auto x : a.elements())
    if (x >= 1 && static_cast<std::int64_t>(x) <= n) v.push_back(static_cast<std::int64_t>(x));
  return core_pairs(v, n);
}

namespace {

void check_core_guards(const CorePairing& core, std::int64_t m) {
  const std::int64_t n = core.n;
  if (n < core_n_min(m))
    throw Error(Errc::invalid_parameters, "n = " + std::to_string(n) + " below n_min(" + std::to_string(m) +
                                              ") = " + std::to_string(core_n_min(m)));
  if (2 * m * static_cast<std::int64_t>(core.size()) < (m + 2) * n)
    throw Error(Errc::invalid_parameters, "core of size " + std::to_string(core.size()) +
                                              " below (1/2 + 1/m) n for n = " + std::to_string(n));
}

std::vector<char> core_mask(const CorePairing& core) {
  std::vector<char> in(static_cast<std::size_t>(core.n) + 2, 0);
  for (auto x : core.core_elements) in[x] = 1;
  return in;
}

}  // namespace

IntRepresentation represent_via_core(const CorePairing& core, std::int64_t m, std::int64_t l, CoreOptions opt) {
  const std::int64_t n = core.n;
  if (m < 1 || n < 1) throw Error(Errc::invalid_parameters, "need m >= 1 and n >= 1");
  const std::int64_t lo = n * (m + 1);
  if (l < lo || l > lo + n)
    throw Error(Errc::invalid_parameters, "l = " + std::to_string(l) + " outside [" + std::to_string(lo) + ", " +
                                              std::to_string(lo + n) + "]");
  if (opt.enforce_guards) check_core_guards(core, m);
  const std::int64_t cap = n / m;
  std::int64_t rem = l - lo;
  if (rem > (m + 1) * cap) throw Error(Errc::invalid_parameters, "offset exceeds (m+1) * floor(n/m)");

  const auto in = core_mask(core);
  std::vector<char> used(in.size(), 0);
  std::vector<std::int64_t> parts;
  for (std::int64_t i = 0; i <= m; ++i) {
    const std::int64_t a = std::min(cap, rem);
    rem -= a;
    const std::int64_t s = n + a;
    bool found = false;
    for (std::int64_t u = std::max<std::int64_t>(1, s - n); 2 * u < s; ++u) {
      const std::int64_t v = s - u;
      if (v > n || !in[u] || !in[v] || used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      parts.push_back(u);
      parts.push_back(v);
      found = true;
      break;
    }
    if (!found)
      throw Error(Errc::internal_contract, "core pairs exhausted at target " + std::to_string(s) + " (l = " +
                                               std::to_string(l) + ", n = " + std::to_string(n) + ")");
  }
  auto r = IntRepresentation::of(std::move(parts));
  if (!check_representation(r, core.core_elements, l))
    throw Error(Errc::internal_contract, "core representation failed its check");
  return r;
}

CoreSplit split_core_target(std::int64_t n, std::int64_t m, std::int64_t x) noexcept {
  const std::int64_t lo = n * (m + 1);
  CoreSplit s;
  s.x0 = lo + (x - lo) % (n + 1);
  s.k = (x - s.x0) / (n + 1);
  return s;
}

Interval core_interval(const CorePairing& core, std::int64_t m) noexcept {
  return {core.n * (m + 1), core.core_sum() - (core.n + 1) * m};
}

namespace {

std::int64_t pair_index(std::int64_t v, std::int64_t n) { return std::min(v, n + 1 - v); }

std::optional<IntRepresentation> core_direct(const CorePairing& core, std::int64_t m, std::int64_t x,
                                             CoreOptions opt) {
  const std::int64_t n = core.n;
  const CoreSplit sp = split_core_target(n, m, x);
  IntRepresentation r = represent_via_core(core, m, sp.x0, opt);
  // retire every pair touched by the base representation
  std::vector<char> retired(static_cast<std::size_t>(n) + 2, 0);
  for (auto v : r.parts) retired[pair_index(v, n)] = 1;
  std::int64_t need = sp.k;
  for (const auto& [i, j] : core.pairs) {
    if (need == 0) break;
    if (retired[i]) continue;
    r.parts.push_back(i);
    r.parts.push_back(j);
    --need;
  }
  if (need > 0) return std::nullopt;
  return IntRepresentation::of(std::move(r.parts));
}

// Take the complement within the core of a small representation of
// sum(core) - x built from whole pairs plus one cross pair.
std::optional<IntRepresentation> core_complement(const CorePairing& core, std::int64_t x) {
  const std::int64_t n = core.n;
  const std::int64_t y = core.core_sum() - x;
  if (y < 0) return std::nullopt;
  const auto in = core_mask(core);
  const std::int64_t jmax = y / (n + 1);
  for (std::int64_t j = jmax; j >= 0 && j >= jmax - 2; --j) {
    const std::int64_t w = y - j * (n + 1);
    std::vector<char> drop(in.size(), 0);
    if (w > 0) {
      bool found = false;
      for (std::int64_t u = std::max<std::int64_t>(1, w - n); 2 * u < w; ++u) {
        const std::int64_t v = w - u;
        if (v > n || !in[u] || !in[v] || pair_index(u, n) == pair_index(v, n)) continue;
        drop[u] = drop[v] = 1;
        found = true;
        break;
      }
      if (!found) continue;
    }
    std::int64_t need = j;
    for (const auto& [i, k] : core.pairs) {
      if (need == 0) break;
      if (drop[i] || drop[k]) continue;
      drop[i] = drop[k] = 1;
      --need;
    }
    if (need > 0) continue;
    std::vector<std::int64_t> parts;
    for (auto v : core.core_elements)
      if (!drop[v]) parts.push_back(v);
    if (parts.empty()) continue;
    return IntRepresentation::of(std::move(parts));
  }
  return std::nullopt;
}

}  // namespace

IntRepresentation core_interval_witness(const CorePairing& core, std::int64_t m, std::int64_t x, CoreOptions opt) {
  const std::int64_t n = core.n;
  if (m < 1 || n < 1) throw Error(Errc::invalid_parameters, "need m >= 1 and n >= 1");
  const Interval iv = core_interval(core, m);
  if (x < iv.lo || (opt.enforce_guards && x > iv.hi))
    throw Error(Errc::out_of_range, "x = " + std::to_string(x) + " outside [" + std::to_string(iv.lo) + ", " +
                                        std::to_string(iv.hi) + "]");
  if (opt.enforce_guards) check_core_guards(core, m);
  std::optional<IntRepresentation> r = core_direct(core, m, x, opt);
  if (!r) r = core_complement(core, x);
  if (!r || !check_representation(*r, core.core_elements, x))
    throw Error(Errc::internal_contract, "no core representation of " + std::to_string(x) + " for n = " +
                                             std::to_string(n) + ", m = " + std::to_string(m));
  return *r;
}

Family parse_family(std::string_view name) {
  if (name == "extremal-zsf") return Family::extremal_zsf;
  if (name == "exceptional") return Family::exceptional;
  if (name == "small-incomplete") return Family::small_incomplete;
  throw Error(Errc::invalid_family, "unknown family '" + std::string(name) +
                                        "' (expected extremal-zsf, exceptional or small-incomplete)");
}

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::extremal_zsf: return "extremal-zsf";
    case Family::exceptional: return "exceptional";
    case Family::small_incomplete: return "small-incomplete";
  }
  return "?";
}

ZpSet build_family(Family kind, const Modulus& p) {
  const auto n = static_cast<std::int64_t>(n_of_p(p));
  std::vector<std::int64_t> v;
  switch (kind) {
    case Family::extremal_zsf:
      for (std::int64_t i = 1; i < n; ++i) v.push_back(i);
      break;
    case Family::exceptional:
      if (!exceptional_check(p))
        throw Error(Errc::invalid_family, "p = " + std::to_string(p.value()) + " is not of the form n(n+1)/2 - 1");
      v.push_back(-2);
      v.push_back(1);
      for (std::int64_t i = 3; i <= n; ++i) v.push_back(i);
      break;
    case Family::small_incomplete: {
      const auto m = static_cast<std::int64_t>(m_of_p(p));
      for (std::int64_t i = 1; 2 * i <= m; ++i) {
        v.push_back(i);
        v.push_back(-i);
      }
      if (m % 2 == 1) v.push_back(m / 2 + 1);
      break;
    }
  }
  return ZpSet::from_integers(p, v);
}

std::optional<std::vector<std::size_t>> integer_subset_sum(std::span<const std::int64_t> items, std::int64_t target) {
  if (target < 0) return std::nullopt;
  if (target == 0) return std::vector<std::size_t>{};
  constexpr std::uint32_t none = 0xFFFFFFFFu;
  std::vector<std::uint32_t> from(static_cast<std::size_t>(target) + 1, none);
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::int64_t w = items[i];
    if (w <= 0) throw Error(Errc::invalid_argument, "subset-sum items must be positive");
    for (std::int64_t v = target; v >= w; --v) {
      if (!reach[v] && reach[v - w]) {
        reach[v] = 1;
        from[v] = static_cast<std::uint32_t>(i);
      }
    }
    if (reach[target]) break;
  }
  if (!reach[target]) return std::nullopt;
  std::vector<std::size_t> chosen;
  for (std::int64_t v = target; v > 0;) {
    const auto i = from[v];
    chosen.push_back(i);
    v -= items[i];
  }
  return chosen;
}

}  // namespace zpsum
