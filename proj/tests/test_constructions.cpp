// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "zpsum/constructions.hpp"
#include "zpsum/sumset.hpp"

using namespace zpsum;

namespace {

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::vector<std::int64_t> without(std::vector<std::int64_t> v, std::initializer_list<std::int64_t> drop) {
  for (auto d : drop) v.erase(std::remove(v.begin(), v.end(), d), v.end());
  return v;
}

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::internal_contract;
}

// Integer subset sums of positive items, as a reachability table.
std::vector<bool> reachable(const std::vector<std::int64_t>& items) {
  const auto total = std::accumulate(items.begin(), items.end(), std::int64_t{0});
  std::vector<bool> r(static_cast<std::size_t>(total) + 1);
  r[0] = true;
  for (auto x : items)
    for (std::int64_t s = total; s >= x; --s)
      if (r[s - x]) r[s] = true;
  return r;
}

std::vector<std::int64_t> random_a1(std::mt19937_64& rng, std::int64_t n, std::int64_t t) {
  auto v = range(1, n);
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(static_cast<std::size_t>(n - t));
  std::sort(v.begin(), v.end());
  return v;
}

CorePairing full_core(std::int64_t n) { return core_pairs(range(1, n), n); }

}  // namespace

TEST_CASE("chain sums examples") {
  auto totals = [](std::vector<std::int64_t> k, std::uint64_t p) {
    std::vector<std::int64_t> t;
    for (const auto& r : chain_sums(k, p)) t.push_back(r.total);
    std::sort(t.begin(), t.end());
    return t;
  };
  CHECK(totals({1, 2, 4}, 8) == std::vector<std::int64_t>{1, 2, 4, 5, 6, 7});
  CHECK(totals({1}, 2) == std::vector<std::int64_t>{1});
  CHECK(totals({1, 2, 3}, 7) == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6});
  CHECK(code_of([] { chain_sums(std::vector<std::int64_t>{1, 1}, 10); }) == Errc::invalid_argument);
  CHECK(code_of([] { chain_sums(std::vector<std::int64_t>{0, 1}, 10); }) == Errc::invalid_argument);
  CHECK(code_of([] { chain_sums(std::vector<std::int64_t>{5, 6}, 10); }) == Errc::invalid_argument);
}

TEST_CASE("chain sums are distinct and lie in the subset sums") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t q = oracle::primes_between(50, 3000)[rng() % 50];
    std::vector<std::int64_t> k;
    std::int64_t total = 0;
    for (int i = 0; i < 30; ++i) {
      const auto x = 1 + static_cast<std::int64_t>(rng() % (q / 3));
      if (std::find(k.begin(), k.end(), x) != k.end() || total + x > static_cast<std::int64_t>(q)) continue;
      k.push_back(x);
      total += x;
    }
    const auto chain = chain_sums(k, q);
    const auto l = k.size();
    CHECK(chain.size() == l * (l + 1) / 2);
    std::set<std::int64_t> totals;
    const auto sums = subset_sums(ZpSet::from_integers(Modulus(q), k));
    for (const auto& r : chain) {
      CHECK(check_representation(r, k, r.total));
      totals.insert(r.total);
      CHECK(sums.contains(static_cast<std::uint64_t>(r.total) % q));
    }
    CHECK(totals.size() == chain.size());
  }
}

TEST_CASE("represent in interval: small examples") {
  const auto a1 = without(range(1, 10), {7});
  const IntervalOptions loose{false};
  auto r5 = represent_in_interval(a1, 10, 5, loose);
  CHECK(r5.parts == std::vector<std::int64_t>{1, 4});
  auto r23 = represent_in_interval(a1, 10, 23, loose);
  CHECK(check_representation(r23, a1, 23));
  const auto iv = representation_interval(a1, 10, loose);
  CHECK(iv.lo == 5);
  CHECK(iv.hi == 33);
  for (std::int64_t x = iv.lo; x <= iv.hi; ++x) CHECK(check_representation(represent_in_interval(a1, 10, x, loose), a1, x));
  CHECK(code_of([&] { represent_in_interval(a1, 10, 4, loose); }) == Errc::out_of_range);
  CHECK(code_of([&] { represent_in_interval(a1, 10, 34, loose); }) == Errc::out_of_range);
  CHECK(code_of([&] { represent_in_interval(a1, 10, 5); }) == Errc::invalid_parameters);
}

TEST_CASE("represent in interval covers the whole interval") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const std::int64_t n = 30 + static_cast<std::int64_t>(rng() % 171);
    const std::int64_t t = static_cast<std::int64_t>(rng() % (n / 20 + 1));
    const auto a1 = random_a1(rng, n, t);
    const auto iv = representation_interval(a1, n);
    CHECK(iv.lo == 2 * t + 3);
    CHECK(iv.hi == (n + 1) * (n / 2 - t - 1));
    const auto reach = reachable(a1);
    for (std::int64_t x = iv.lo; x <= iv.hi; ++x) {
      const auto r = represent_in_interval(a1, n, x);
      CHECK(check_representation(r, a1, x));
      if (x % 97 == 0) CHECK(reach[x]);
    }
  }
}

TEST_CASE("extend interval examples") {
  // tagged inner oracle so its parts are recognisable
  RepresentationOracle inner = [](std::int64_t y) { return IntRepresentation::of({y + 1000, -1000}); };
  const std::vector<std::int64_t> extras{3, 4};
  auto r16 = extend_interval(inner, 5, 10, extras, 16);
  CHECK(r16.total == 16);
  CHECK(std::find(r16.parts.begin(), r16.parts.end(), 4) != r16.parts.end());
  CHECK(std::find(r16.parts.begin(), r16.parts.end(), 3) != r16.parts.end());
  CHECK(std::find(r16.parts.begin(), r16.parts.end(), 1009) != r16.parts.end());
  auto r7 = extend_interval(inner, 5, 10, extras, 7);
  CHECK(r7.parts == std::vector<std::int64_t>{1007, -1000});
  auto r17 = extend_interval(inner, 5, 10, extras, 17);
  CHECK(std::find(r17.parts.begin(), r17.parts.end(), 1010) != r17.parts.end());
  CHECK(code_of([&] { extend_interval(inner, 5, 10, extras, 18); }) == Errc::out_of_range);
  CHECK(code_of([&] { extend_interval(inner, 5, 10, extras, 4); }) == Errc::out_of_range);
  CHECK(code_of([&] { extend_interval(inner, 5, 10, std::vector<std::int64_t>{5}, 7); }) == Errc::invalid_argument);
}

TEST_CASE("extend interval on random instances") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t n = 40 + static_cast<std::int64_t>(rng() % 40);
    const auto a1 = random_a1(rng, n, static_cast<std::int64_t>(rng() % 3));
    const auto iv = representation_interval(a1, n);
    RepresentationOracle inner = [&](std::int64_t y) { return represent_in_interval(a1, n, y); };
    // extras above n never collide with inner parts
    std::vector<std::int64_t> extras;
    for (int i = 0; i < 6; ++i) {
      const std::int64_t e = n + 1 + static_cast<std::int64_t>(rng() % (iv.hi - iv.lo - n - 1));
      if (std::find(extras.begin(), extras.end(), e) == extras.end()) extras.push_back(e);
    }
    std::vector<std::int64_t> ground = a1;
    ground.insert(ground.end(), extras.begin(), extras.end());
    const auto top = iv.hi + std::accumulate(extras.begin(), extras.end(), std::int64_t{0});
    for (std::int64_t y = iv.lo; y <= top; y += 1 + static_cast<std::int64_t>(rng() % 7)) {
      const auto r = extend_interval(inner, iv.lo, iv.hi, extras, y);
      CHECK(check_representation(r, ground, y));
    }
    CHECK(check_representation(extend_interval(inner, iv.lo, iv.hi, extras, top), ground, top));
  }
}

TEST_CASE("extend interval, nonpositive mirror") {
  const std::int64_t n = 60;
  const auto a1 = range(1, n);
  const auto iv = representation_interval(a1, n);
  std::vector<std::int64_t> neg_a1;
  for (auto x : a1) neg_a1.push_back(-x);
  RepresentationOracle inner = [&](std::int64_t y) {
    auto r = represent_in_interval(a1, n, -y);
    for (auto& x : r.parts) x = -x;
    r.total = y;
    return r;
  };
  const std::vector<std::int64_t> extras{-(n + 5), -(n + 9)};
  std::vector<std::int64_t> ground = neg_a1;
  ground.insert(ground.end(), extras.begin(), extras.end());
  for (std::int64_t y = -iv.hi - 2 * n - 14; y <= -iv.lo; ++y) {
    const auto r = extend_interval_nonpositive(inner, -iv.hi, -iv.lo, extras, y);
    CHECK(check_representation(r, ground, y));
  }
}

TEST_CASE("core pairs") {
  auto c = core_pairs(std::vector<std::int64_t>{1, 2, 3, 4, 5, 9, 10}, 10);
  CHECK(c.pairs == std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 10}, {2, 9}});
  CHECK(c.size() == 4);
  CHECK(c.core_sum() == 22);
  auto f = full_core(10);
  CHECK(f.pairs.size() == 5);
  CHECK(f.size() == 10);
  CHECK(core_pairs(std::vector<std::int64_t>{}, 10).size() == 0);
  CHECK(core_pairs(ZpSet::from_integers(Modulus(101), std::vector<std::int64_t>{1, 10, 50}), 10).size() == 2);
}

TEST_CASE("core pair invariants") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t n = 10 + static_cast<std::int64_t>(rng() % 200);
    const auto a = random_a1(rng, n, static_cast<std::int64_t>(rng() % (n / 2)));
    const auto c = core_pairs(a, n);
    std::set<std::int64_t> seen;
    std::int64_t total = 0;
    for (const auto& [x, y] : c.pairs) {
      CHECK(x + y == n + 1);
      CHECK(x < y);
      CHECK(seen.insert(x).second);
      CHECK(seen.insert(y).second);
      total += x + y;
    }
    CHECK(total == c.core_sum());
    CHECK(c.size() == 2 * c.pairs.size());
  }
}

TEST_CASE("represent via core: small examples") {
  const auto core = full_core(10);
  const CoreOptions loose{false};
  auto r34 = represent_via_core(core, 2, 34, loose);
  CHECK(r34.parts.size() == 6);
  CHECK(check_representation(r34, core.core_elements, 34));
  auto r30 = represent_via_core(core, 2, 30, loose);
  CHECK(check_representation(r30, core.core_elements, 30));
  for (std::size_t i = 0; i < r30.parts.size(); i += 2) CHECK(r30.parts[i] + r30.parts[i + 1] == 10);
  auto r40 = represent_via_core(core, 2, 40, loose);
  CHECK(check_representation(r40, core.core_elements, 40));
  CHECK(r40.parts[0] + r40.parts[1] == 15);
  CHECK(r40.parts[2] + r40.parts[3] == 15);
  CHECK(r40.parts[4] + r40.parts[5] == 10);
  CHECK(code_of([&] { represent_via_core(core, 2, 29, loose); }) == Errc::invalid_parameters);
  CHECK(code_of([&] { represent_via_core(core, 2, 34); }) == Errc::invalid_parameters);
}

TEST_CASE("represent via core: full sweeps") {
  std::mt19937_64 rng(77);
  for (std::int64_t m = 2; m <= 4; ++m) {
    for (int trial = 0; trial < 4; ++trial) {
      const std::int64_t n = core_n_min(m) + static_cast<std::int64_t>(rng() % (400 - core_n_min(m) + 1));
      // drop pairs while keeping the core above (1/2 + 1/m) n
      std::vector<std::int64_t> a = range(1, n);
      const std::int64_t max_drop_pairs = (n - (m + 2) * n / (2 * m)) / 2 - 1;
      const std::int64_t drop = max_drop_pairs > 0 ? static_cast<std::int64_t>(rng() % max_drop_pairs) : 0;
      for (std::int64_t d = 0; d < drop; ++d) {
        const std::int64_t i = 1 + static_cast<std::int64_t>(rng() % (n / 2));
        a.erase(std::remove(a.begin(), a.end(), i), a.end());
      }
      const auto core = core_pairs(a, n);
      if (2 * m * static_cast<std::int64_t>(core.size()) < (m + 2) * n) continue;
      for (std::int64_t l = n * (m + 1); l <= n * (m + 1) + n; ++l) {
        const auto r = represent_via_core(core, m, l);
        CHECK(r.parts.size() == static_cast<std::size_t>(2 * (m + 1)));
        CHECK(check_representation(r, core.core_elements, l));
      }
      const auto iv = core_interval(core, m);
      for (std::int64_t x = iv.lo; x <= iv.hi; ++x) CHECK(check_representation(core_interval_witness(core, m, x), core.core_elements, x));
    }
  }
}

TEST_CASE("core interval witness: small examples") {
  const auto core = full_core(10);
  const CoreOptions loose{false};
  const auto sp = split_core_target(10, 2, 41);
  CHECK(sp.x0 == 30);
  CHECK(sp.k == 1);
  auto r41 = core_interval_witness(core, 2, 41, loose);
  CHECK(check_representation(r41, core.core_elements, 41));
  auto r30 = core_interval_witness(core, 2, 30, loose);
  CHECK(check_representation(r30, core.core_elements, 30));
  CHECK(code_of([&] { core_interval_witness(core, 2, 22, loose); }) == Errc::out_of_range);
  CHECK(code_of([&] { core_interval_witness(core, 2, 22); }) == Errc::out_of_range);
}

TEST_CASE("core interval witness agrees with the integer oracle at n = 30") {
  const auto core = full_core(30);
  const CoreOptions loose{false};
  const auto reach = reachable(core.core_elements);
  const auto iv = core_interval(core, 2);
  CHECK(iv.lo == 90);
  CHECK(iv.hi == 465 - 62);
  for (std::int64_t x = iv.lo; x <= iv.hi; ++x) {
    CHECK(reach[x]);
    CHECK(check_representation(core_interval_witness(core, 2, x, loose), core.core_elements, x));
  }
}

TEST_CASE("families") {
  const Modulus p11(11);
  const auto e = build_family(Family::extremal_zsf, p11);
  CHECK(std::vector<std::uint64_t>(e.elements().begin(), e.elements().end()) == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(is_zero_sum_free(e));
  const auto s = build_family(Family::small_incomplete, p11);
  CHECK(std::vector<std::uint64_t>(s.elements().begin(), s.elements().end()) ==
        std::vector<std::uint64_t>{1, 2, 3, 9, 10});
  CHECK_FALSE(is_complete(s));
  CHECK(code_of([&] { build_family(Family::exceptional, p11); }) == Errc::invalid_family);
  CHECK(code_of([] { parse_family("nope"); }) == Errc::invalid_family);
  CHECK(parse_family(family_name(Family::small_incomplete)) == Family::small_incomplete);
}

TEST_CASE("family invariants across primes") {
  for (std::uint64_t q : oracle::primes_between(7, 2000)) {
    const Modulus p(q);
    const auto e = build_family(Family::extremal_zsf, p);
    CHECK(e.size() == n_of_p(p) - 1);
    CHECK(is_zero_sum_free(e));
    const auto s = build_family(Family::small_incomplete, p);
    CHECK(s.size() == m_of_p(p));
    CHECK(norm_stats(s).total_norm < static_cast<wide_t>(q));
  }
}

TEST_CASE("small-incomplete family: incomplete unless its norm total is p - 1") {
  // A zero-free set of norm total p - 1 can still be complete ({1,6,2,5} mod 7).
  for (std::uint64_t q : oracle::primes_between(3, 400)) {
    const Modulus p(q);
    const auto s = build_family(Family::small_incomplete, p);
    const bool tight = norm_stats(s).total_norm == static_cast<wide_t>(q - 1);
    if (!tight) CHECK_MESSAGE(!is_complete(s), q);
  }
  CHECK(is_complete(build_family(Family::small_incomplete, Modulus(7))));
}

TEST_CASE("integer subset sum") {
  const std::vector<std::int64_t> items{3, 5, 9, 14};
  auto r = integer_subset_sum(items, 17);
  REQUIRE(r);
  std::int64_t s = 0;
  for (auto i : *r) s += items[i];
  CHECK(s == 17);
  CHECK_FALSE(integer_subset_sum(items, 2));
  CHECK(integer_subset_sum(items, 0)->empty());
}
