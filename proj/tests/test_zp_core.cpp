// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "zpsum/zp_core.hpp"

using namespace zpsum;

namespace {

ZpSet make(std::uint64_t p, std::vector<std::int64_t> v) { return ZpSet::from_integers(Modulus(p), v); }

std::vector<std::uint64_t> elems(const ZpSet& s) { return {s.elements().begin(), s.elements().end()}; }

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

}  // namespace

TEST_CASE("primality agrees with trial division") {
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK_MESSAGE(is_prime(n) == oracle::is_prime(n), n);
}

TEST_CASE("primality on large inputs") {
  CHECK(is_prime(1'000'003));
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551556ULL));
  CHECK_FALSE(is_prime(3215031751ULL));       // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
}

TEST_CASE("modulus rejects composites and small values") {
  CHECK(code_of([] { Modulus m(9); }) == Errc::not_prime);
  CHECK(code_of([] { Modulus m(2); }) == Errc::not_prime);
  CHECK(code_of([] { Modulus m(1); }) == Errc::not_prime);
  CHECK_NOTHROW(Modulus(3));
  CHECK(Modulus(11).inverse(7) == 8);
  CHECK(code_of([] { Modulus(11).inverse(0); }) == Errc::invalid_dilation);
}

TEST_CASE("norm") {
  const Modulus p(11);
  CHECK(norm(Residue(10), p) == 1);
  CHECK(norm(Residue(0), p) == 0);
  CHECK(norm(Residue(6), p) == 5);
}

TEST_CASE("signed representative") {
  const Modulus p(11);
  CHECK(signed_rep(Residue(9), p) == -2);
  CHECK(signed_rep(Residue(5), p) == 5);
  CHECK(signed_rep(Residue(0), p) == 0);
}

TEST_CASE("norm symmetry and signed agreement") {
  for (std::uint64_t q : oracle::primes_between(3, 400)) {
    const Modulus p(q);
    for (std::uint64_t x = 0; x < q; ++x) {
      const auto nx = norm(Residue(x), p);
      CHECK(nx == norm(Residue(x == 0 ? 0 : q - x), p));
      CHECK(nx == static_cast<std::uint64_t>(std::llabs(signed_rep(Residue(x), p))));
      CHECK(nx <= (q - 1) / 2);
    }
  }
}

TEST_CASE("set construction") {
  auto s = make(7, {3, -1, 9});
  CHECK(elems(s) == std::vector<std::uint64_t>{2, 3, 6});
  CHECK(code_of([] { make(7, {1, 8}); }) == Errc::duplicate_element);
  CHECK(code_of([] { make(7, {5, -2}); }) == Errc::duplicate_element);
  CHECK(make(13, {0}).contains(0));
}

TEST_CASE("dilate") {
  CHECK(elems(dilate(make(7, {1, 2, 3}), Residue(3))) == std::vector<std::uint64_t>{2, 3, 6});
  CHECK(elems(dilate(make(11, {7, 3, 10, 6}), Residue(8))) == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(elems(dilate(make(13, {5}), Residue(1))) == std::vector<std::uint64_t>{5});
  CHECK(code_of([] { dilate(make(7, {1}), Residue(0)); }) == Errc::invalid_dilation);
}

TEST_CASE("dilation by b then its inverse is the identity") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {5ULL, 11ULL, 97ULL, 1009ULL, 65537ULL}) {
    const Modulus p(q);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::int64_t> v;
      for (int i = 0; i < 6; ++i) v.push_back(static_cast<std::int64_t>(rng() % q));
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      const auto a = ZpSet::from_integers(p, v);
      const std::uint64_t b = 1 + rng() % (q - 1);
      const auto there = dilate(a, Residue(b));
      CHECK(there.size() == a.size());
      CHECK(dilate(there, Residue(p.inverse(b))) == a);
    }
  }
}

TEST_CASE("n(p)") {
  CHECK(n_of_p(Modulus(7)) == 4);
  CHECK(n_of_p(Modulus(11)) == 5);
  CHECK(n_of_p(Modulus(101)) == 14);
  for (std::uint64_t q : oracle::primes_between(3, 20000)) {
    const auto n = n_of_p(Modulus(q));
    CHECK(n == oracle::n_of_p(q));
    CHECK(n * (n - 1) / 2 < q);
    CHECK(q <= n * (n + 1) / 2);
  }
}

TEST_CASE("exceptional primes") {
  CHECK(exceptional_check(Modulus(5)));
  CHECK_FALSE(exceptional_check(Modulus(11)));
  CHECK_FALSE(exceptional_check(Modulus(13)));
  for (std::uint64_t n = 1; n < 5000; ++n) CHECK(n * (n + 1) / 2 - 1 == (n - 1) * (n + 2) / 2);
}

TEST_CASE("m(p) closed form against the knapsack oracle") {
  CHECK(m_of_p(Modulus(7)) == 4);
  CHECK(m_of_p(Modulus(11)) == 5);
  CHECK(m_of_p(Modulus(5)) == 3);
  for (std::uint64_t q : oracle::primes_between(3, 61)) CHECK_MESSAGE(m_of_p(Modulus(q)) == oracle::m_of_p(q), q);
}

TEST_CASE("m(p) against flat enumeration for the smallest primes") {
  for (std::uint64_t q : oracle::primes_between(3, 19)) {
    std::uint64_t best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (q - 1)); ++mask) {
      std::uint64_t total = 0, size = 0;
      for (std::uint64_t x = 1; x < q; ++x)
        if (mask >> (x - 1) & 1) {
          total += oracle::norm(x, q);
          ++size;
        }
      if (total < q) best = std::max(best, size);
    }
    CHECK_MESSAGE(m_of_p(Modulus(q)) == best, q);
  }
}

TEST_CASE("strict m(p) never exceeds m(p)") {
  for (std::uint64_t q : oracle::primes_between(3, 2000)) {
    const Modulus p(q);
    CHECK(m_strict_of_p(p) <= m_of_p(p));
    CHECK(min_norm_total(m_strict_of_p(p)) <= static_cast<wide_t>(q - 2));
  }
}

TEST_CASE("norm statistics") {
  auto s1 = norm_stats(make(11, {1, 2, 3, 4}));
  CHECK(s1.total_norm == 10);
  CHECK(s1.low_sum == 10);
  CHECK(s1.high_norm_sum == 0);
  auto s2 = norm_stats(make(11, {1, 10}));
  CHECK(s2.total_norm == 2);
  CHECK(s2.low_sum == 1);
  CHECK(s2.high_norm_sum == 1);
  CHECK(norm_stats(ZpSet(Modulus(11))) == NormStats{});
}

TEST_CASE("norm statistics invariants on random sets") {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {3ULL, 101ULL, 1'000'003ULL, 18446744073709551557ULL}) {
    const Modulus p(q);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::uint64_t> v;
      for (int i = 0; i < 50; ++i) v.push_back(rng() % q);
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      const auto a = ZpSet::from_residues(p, v);
      const auto s = norm_stats(a);
      CHECK(s.total_norm == s.low_sum + s.high_norm_sum);
      const wide_t cap = static_cast<wide_t>(a.size()) * ((q - 1) / 2);
      CHECK(s.low_sum >= 0);
      CHECK(s.high_norm_sum >= 0);
      CHECK(s.total_norm <= cap);
    }
  }
}

TEST_CASE("set file parsing") {
  const Modulus p(11);
  auto a = parse_set_text(p, "# comment\n1\n\n-1\n  2  \n# tail\n");
  CHECK(elems(a) == std::vector<std::uint64_t>{1, 2, 10});
  CHECK(code_of([&] { parse_set_text(p, "1\nfoo\n"); }) == Errc::parse);
  CHECK(code_of([&] { parse_set_text(p, "1\n12\n"); }) == Errc::duplicate_element);
  CHECK(code_of([&] { read_set_file(p, "/nonexistent/zpsum/set.txt"); }) == Errc::io);
  const auto path = std::filesystem::temp_directory_path() / "zpsum_core_set.txt";
  std::ofstream(path) << "3\n-2\n";
  CHECK(elems(read_set_file(p, path)) == std::vector<std::uint64_t>{3, 9});
  std::filesystem::remove(path);
}

TEST_CASE("wide integer formatting") {
  CHECK(to_string(wide_t{0}) == "0");
  CHECK(to_string(wide_t{-42}) == "-42");
  const wide_t big = static_cast<wide_t>(18446744073709551557ULL) * 1000;
  CHECK(to_string(big) == "18446744073709551557000");
}
