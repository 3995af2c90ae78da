// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
//
// zpsum command line. Exit codes: 0 ok / all records pass, 1 a scan had
// records that did not pass, 2 usage or library error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zpsum/zpsum.h"

namespace {

struct LibError {
  zps_status status;
  std::string message;
};

void check(zps_status s) {
  if (s != ZPS_OK) throw LibError{s, zps_last_error()};
}

struct SetDeleter {
  void operator()(zps_set* s) const { zps_set_destroy(s); }
};
struct ReportDeleter {
  void operator()(zps_report* r) const { zps_report_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { zps_string_free(s); }
};
using SetPtr = std::unique_ptr<zps_set, SetDeleter>;
using ReportPtr = std::unique_ptr<zps_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::vector<std::uint64_t> elements(const zps_set* s) {
  std::vector<std::uint64_t> v(zps_set_size(s));
  size_t n = 0;
  check(zps_set_elements(s, v.data(), v.size(), &n));
  return v;
}

void write_text(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw LibError{ZPS_E_IO, "cannot write " + out};
}

SetPtr load_set(std::uint64_t p, const std::string& path) {
  zps_set* s = nullptr;
  check(zps_set_read_file(p, path.c_str(), &s));
  return SetPtr(s);
}

struct Common {
  std::uint64_t p = 0;
  std::string set_file;
  unsigned jobs = 1;
  std::uint64_t node_budget = 1'000'000'000;
  std::string format = "json";
  std::string out;
  bool no_timestamp = false;
  std::uint64_t dilation_limit = 10'000'000;
  double time_limit = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset sums in Z_p: analysis, constructions, exhaustive search and verification scans"};
  app.set_version_flag("--version", std::string(zps_version()));
  app.require_subcommand(1);
  Common c;

  auto add_p = [&](CLI::App* sub) { sub->add_option("--p", c.p, "prime modulus")->required(); };
  auto add_set = [&](CLI::App* sub) {
    sub->add_option("--set", c.set_file, "set file: one integer per line, # comments")->required();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", c.out, "output path (default stdout)"); };
  auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber); };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--node-budget", c.node_budget, "search nodes per prime before giving up");
    sub->add_option("--time-limit", c.time_limit, "wall-clock seconds before giving up (0 = none)");
  };

  auto* analyze = app.add_subcommand("analyze", "predicates, subset-sum count, best dilation, diagnostics");
  add_p(analyze);
  add_set(analyze);
  add_jobs(analyze);
  add_out(analyze);
  analyze->add_option("--dilation-limit", c.dilation_limit, "skip the dilation scan above this p");

  std::int64_t target = 0;
  auto* wit = app.add_subcommand("witness", "a subset of the set summing to the target");
  add_p(wit);
  add_set(wit);
  wit->add_option("--target", target, "target residue")->required();

  std::string family;
  auto* construct = app.add_subcommand("construct", "build a named family");
  add_p(construct);
  construct->add_option("--family", family, "extremal-zsf | exceptional | small-incomplete")->required();
  add_out(construct);

  auto* maxzsf = app.add_subcommand("maxzsf", "exact largest zero-sum-free size");
  auto* maxinc = app.add_subcommand("maxinc", "exact largest incomplete size");
  for (auto* sub : {maxzsf, maxinc}) {
    add_p(sub);
    add_jobs(sub);
    add_search(sub);
    add_out(sub);
  }

  std::string theorem;
  std::uint64_t p_min = 0, p_max = 0;
  auto* scan = app.add_subcommand("scan", "verify a statement over a prime range");
  scan->add_option("--theorem", theorem,
                   "main1 | main2-lemma | main3 | olson | hz | lemma-simple5 | exceptional-scan")
      ->required();
  scan->add_option("--p-min", p_min, "first p (n for exceptional-scan)")->required();
  scan->add_option("--p-max", p_max, "last p (n for exceptional-scan)")->required();
  add_jobs(scan);
  add_search(scan);
  scan->add_option("--format", c.format, "json | csv");
  add_out(scan);
  scan->add_flag("--no-timestamp", c.no_timestamp, "omit the timestamp for byte-stable output");

  std::int64_t pair_n = 0;
  auto* pairs = app.add_subcommand("pairs", "core pairs (a, n+1-a) of the set");
  add_p(pairs);
  add_set(pairs);
  pairs->add_option("--n", pair_n, "pairing parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      auto s = load_set(c.p, c.set_file);
      char* json = nullptr;
      check(zps_analyze_json(s.get(), c.dilation_limit, c.jobs, &json));
      StringPtr j(json);
      write_text(std::string(j.get()) + "\n", c.out);
    } else if (wit->parsed()) {
      auto s = load_set(c.p, c.set_file);
      zps_set* w = nullptr;
      check(zps_witness(s.get(), target, &w));
      SetPtr wp(w);
      nlohmann::ordered_json j;
      j["p"] = c.p;
      j["target"] = target;
      j["found"] = wp != nullptr;
      j["subset"] = wp ? nlohmann::ordered_json(elements(wp.get())) : nlohmann::ordered_json(nullptr);
      std::cout << j.dump(2) << "\n";
    } else if (construct->parsed()) {
      zps_set* raw = nullptr;
      check(zps_set_build_family(c.p, family.c_str(), &raw));
      SetPtr s(raw);
      int zsf = 0, complete = 0;
      check(zps_is_zero_sum_free(s.get(), &zsf));
      check(zps_is_complete(s.get(), &complete));
      nlohmann::ordered_json j;
      j["family"] = family;
      j["p"] = c.p;
      j["elements"] = elements(s.get());
      j["zero_sum_free"] = zsf != 0;
      j["complete"] = complete != 0;
      write_text(j.dump(2) + "\n", c.out);
    } else if (maxzsf->parsed() || maxinc->parsed()) {
      char* json = nullptr;
      check(zps_search_json(c.p, maxzsf->parsed() ? "zsf" : "incomplete", c.node_budget, c.jobs, c.time_limit,
                            &json));
      StringPtr j(json);
      write_text(std::string(j.get()) + "\n", c.out);
    } else if (scan->parsed()) {
      zps_report* raw = nullptr;
      check(zps_verify_theorem(theorem.c_str(), p_min, p_max, c.jobs, c.node_budget, c.time_limit, &raw));
      ReportPtr r(raw);
      if (c.out.empty()) {
        char* text = nullptr;
        check(zps_report_to_string(r.get(), c.format.c_str(), !c.no_timestamp, &text));
        StringPtr t(text);
        std::cout << t.get();
      } else {
        check(zps_report_write(r.get(), c.format.c_str(), c.out.c_str(), !c.no_timestamp));
      }
      return zps_report_all_pass(r.get()) ? 0 : 1;
    } else if (pairs->parsed()) {
      auto s = load_set(c.p, c.set_file);
      char* json = nullptr;
      check(zps_core_pairs_json(s.get(), pair_n, &json));
      StringPtr j(json);
      std::cout << j.get() << "\n";
    }
  } catch (const LibError& e) {
    std::cerr << "zpsum: " << zps_status_name(e.status) << ": " << e.message << "\n";
    return 2;
  }
  return 0;
}
