// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "zpsum/constructions.hpp"
#include "zpsum/search.hpp"
#include "zpsum/sumset.hpp"

using namespace zpsum;

namespace {

ZpSet make(std::uint64_t p, std::vector<std::int64_t> v) { return ZpSet::from_integers(Modulus(p), v); }

std::vector<std::uint64_t> elems(const ZpSet& s) { return {s.elements().begin(), s.elements().end()}; }

}  // namespace

TEST_CASE("maximum zero-sum-free: examples") {
  CHECK(max_zero_sum_free(Modulus(7)).max_size == 3);
  CHECK(max_zero_sum_free(Modulus(11)).max_size == 4);
  CHECK(max_zero_sum_free(Modulus(5)).max_size == 2);
  const auto r = max_zero_sum_free(Modulus(7));
  CHECK(r.exhaustive);
  REQUIRE_FALSE(r.representatives.empty());
  CHECK(elems(r.representatives.front()) == std::vector<std::uint64_t>{1, 2, 3});
}

TEST_CASE("maximum zero-sum-free equals flat enumeration") {
  for (std::uint64_t q : oracle::primes_between(3, 31)) {
    const Modulus p(q);
    const auto expect = oracle::max_zero_sum_free(q);
    SearchOptions plain;
    plain.dilation_reduction = false;
    plain.clique_bound = false;
    SearchOptions reduced;
    SearchOptions parallel;
    parallel.jobs = 3;
    for (const auto& opt : {plain, reduced, parallel}) {
      const auto r = max_zero_sum_free(p, opt);
      CHECK_MESSAGE(r.max_size == expect, q);
      CHECK(r.exhaustive);
      for (const auto& s : r.representatives) {
        CHECK(s.size() == r.max_size);
        CHECK(is_zero_sum_free(s));
        CHECK(oracle::zero_sum_free(elems(s), q));
      }
    }
  }
}

TEST_CASE("maximum incomplete: examples") {
  const auto r7 = max_incomplete(Modulus(7));
  CHECK(r7.max_size >= 4);
  CHECK(r7.max_size <= 5);
  const auto r11 = max_incomplete(Modulus(11));
  CHECK(r11.max_size >= 5);
  CHECK(r11.max_size <= 6);
  // Allowing 0, {0, 1} is incomplete mod 3; without 0 the answer is 1.
  CHECK(max_incomplete(Modulus(3)).max_size == 2);
  SearchOptions no_zero;
  no_zero.include_zero = false;
  CHECK(max_incomplete(Modulus(3), no_zero).max_size == 1);
}

TEST_CASE("maximum incomplete equals flat enumeration") {
  for (std::uint64_t q : oracle::primes_between(3, 17)) {
    const Modulus p(q);
    for (bool with_zero : {false, true}) {
      SearchOptions opt;
      opt.include_zero = with_zero;
      const auto r = max_incomplete(p, opt);
      CHECK_MESSAGE(r.max_size == oracle::max_incomplete(q, with_zero), q);
      CHECK(r.exhaustive);
      for (const auto& s : r.representatives) {
        CHECK(s.size() == r.max_size);
        CHECK_FALSE(is_complete(s));
        if (s.size() <= naive_size_limit) CHECK(naive_subset_sums(s).count() < q);
      }
    }
  }
}

TEST_CASE("maximum incomplete respects both bounds") {
  for (std::uint64_t q : oracle::primes_between(7, 47)) {
    const Modulus p(q);
    const auto r = max_incomplete(p);
    REQUIRE(r.exhaustive);
    CHECK(r.max_size <= static_cast<std::uint64_t>(std::sqrt(4.0 * q - 3)));
    CHECK(r.max_size >= m_of_p(p));
  }
}

TEST_CASE("budget exhaustion is reported, never silently") {
  SearchOptions opt;
  opt.node_budget = 100;
  const auto r = max_zero_sum_free(Modulus(61), opt);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.nodes_explored >= 100);
  opt.node_budget = 1'000'000'000;
  opt.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_FALSE(max_zero_sum_free(Modulus(61), opt).exhaustive);
}

TEST_CASE("sequential node counts are reproducible") {
  const auto a = max_zero_sum_free(Modulus(47));
  const auto b = max_zero_sum_free(Modulus(47));
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.representatives == b.representatives);
}

TEST_CASE("enumeration") {
  const auto e = enumerate_sets(Modulus(11), SearchPredicate::zero_sum_free, 4);
  CHECK(e.exhaustive);
  std::size_t expect = 0;
  oracle::for_each_combination(11, 4, [&](const std::vector<std::uint64_t>& c) {
    if (c[0] == 1 && oracle::zero_sum_free(c, 11)) ++expect;
  });
  CHECK(e.sets.size() == expect);
  for (std::size_t i = 1; i < e.sets.size(); ++i) CHECK(e.sets[i - 1].lex_less(e.sets[i]));
  const auto capped = enumerate_sets(Modulus(11), SearchPredicate::zero_sum_free, 4, {}, 2);
  CHECK(capped.sets.size() == 2);
  CHECK_FALSE(capped.exhaustive);
}

TEST_CASE("canonical dilate is the least dilate") {
  const auto a = make(11, {7, 3, 10, 6});
  const auto c = canonical_dilate(a);
  CHECK(elems(c) == std::vector<std::uint64_t>{1, 2, 3, 4});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Modulus p(101);
    std::vector<std::int64_t> v;
    for (int i = 0; i < 5; ++i) v.push_back(1 + static_cast<std::int64_t>(rng() % 100));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    const auto s = ZpSet::from_integers(p, v);
    const auto cs = canonical_dilate(s);
    for (std::uint64_t b = 1; b < 101; ++b) CHECK_FALSE(dilate(s, Residue(b)).lex_less(cs));
    CHECK(canonical_dilate(dilate(s, Residue(1 + rng() % 100))) == cs);
  }
}

TEST_CASE("classification") {
  const auto c11 = classify_extremal_zsf(Modulus(11));
  CHECK(c11.size == 4);
  CHECK(c11.exhaustive);
  bool interval = false;
  for (const auto& o : c11.orbits) interval = interval || o.contains_initial_interval;
  CHECK(interval);
  const auto c7 = classify_extremal_zsf(Modulus(7));
  CHECK(c7.size == 3);
  interval = false;
  for (const auto& o : c7.orbits) interval = interval || o.contains_initial_interval;
  CHECK(interval);
  const auto c5 = classify_extremal_zsf(Modulus(5));
  CHECK(c5.size == 2);
  bool has12 = false;
  for (const auto& o : c5.orbits)
    for (std::uint64_t b = 1; b < 5; ++b) has12 = has12 || dilate(o.canonical, Residue(b)) == make(5, {1, 2});
  CHECK(has12);
}

TEST_CASE("orbit grouping matches brute-force orbits") {
  for (std::uint64_t q : {7ULL, 11ULL, 13ULL, 17ULL}) {
    const Modulus p(q);
    const auto c = classify_extremal_zsf(p);
    std::set<std::vector<std::uint64_t>> canon;
    oracle::for_each_combination(q, c.size, [&](const std::vector<std::uint64_t>& v) {
      if (!oracle::zero_sum_free(v, q)) return;
      std::vector<std::uint64_t> best;
      for (std::uint64_t b = 1; b < q; ++b) {
        std::vector<std::uint64_t> d;
        for (auto x : v) d.push_back(x * b % q);
        std::sort(d.begin(), d.end());
        if (best.empty() || d < best) best = d;
      }
      canon.insert(best);
    });
    CHECK(c.orbits.size() == canon.size());
    for (const auto& o : c.orbits) CHECK(canon.count(elems(o.canonical)) == 1);
  }
}

TEST_CASE("exceptional prime scan") {
  CHECK(exceptional_prime_scan(4) == std::vector<std::uint64_t>{3});
  CHECK(exceptional_prime_scan(13) == std::vector<std::uint64_t>{3});
  CHECK(exceptional_prime_scan(100000) == std::vector<std::uint64_t>{3});
  CHECK_THROWS_AS(exceptional_prime_scan(2), Error);
}
