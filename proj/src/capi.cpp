// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#include "zpsum/zpsum.h"

#include <chrono>
#include <cstring>
#include <new>
#include <string>

#include "zpsum/constructions.hpp"
#include "zpsum/harness.hpp"
#include "zpsum/search.hpp"
#include "zpsum/sumset.hpp"

struct zps_set {
  zpsum::ZpSet value;
};

struct zps_report {
  zpsum::VerificationReport value;
};

namespace {

thread_local std::string last_error;

zps_status fail(zps_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs f and maps exceptions onto status codes.
template <class F>
zps_status guarded(F&& f) noexcept {
  try {
    last_error.clear();
    f();
    return ZPS_OK;
  } catch (const zpsum::Error& e) {
    return fail(static_cast<zps_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZPS_E_CAPABILITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZPS_E_UNKNOWN, e.what());
  } catch (...) {
    return fail(ZPS_E_UNKNOWN, "unknown failure");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw zpsum::Error(zpsum::Errc::invalid_argument, what);
}

char* dup_string(const std::string& s) {
  auto* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<std::chrono::steady_clock::time_point> deadline_after(double seconds) {
  if (!(seconds > 0)) return std::nullopt;
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
}

}  // namespace

extern "C" {

const char* zps_last_error(void) { return last_error.c_str(); }

const char* zps_status_name(zps_status s) {
  if (s == ZPS_OK) return "ok";
  if (s == ZPS_E_UNKNOWN) return "unknown";
  return zpsum::errc_name(static_cast<zpsum::Errc>(s));
}

const char* zps_version(void) { return zpsum::tool_version; }

void zps_string_free(char* s) { delete[] s; }

zps_status zps_set_create(uint64_t p, const int64_t* values, size_t count, zps_set** out) {
  return guarded([&] {
    require(out != nullptr && (values != nullptr || count == 0), "null argument");
    const zpsum::Modulus m(p);
    *out = new zps_set{zpsum::ZpSet::from_integers(m, std::span<const std::int64_t>(values, count))};
  });
}

zps_status zps_set_read_file(uint64_t p, const char* path, zps_set** out) {
  return guarded([&] {
    require(out != nullptr && path != nullptr, "null argument");
    const zpsum::Modulus m(p);
    *out = new zps_set{zpsum::read_set_file(m, path)};
  });
}

zps_status zps_set_build_family(uint64_t p, const char* family, zps_set** out) {
  return guarded([&] {
    require(out != nullptr && family != nullptr, "null argument");
    const zpsum::Modulus m(p);
    *out = new zps_set{zpsum::build_family(zpsum::parse_family(family), m)};
  });
}

void zps_set_destroy(zps_set* s) { delete s; }

uint64_t zps_set_modulus(const zps_set* s) { return s ? s->value.modulus().value() : 0; }

size_t zps_set_size(const zps_set* s) { return s ? s->value.size() : 0; }

zps_status zps_set_elements(const zps_set* s, uint64_t* buf, size_t cap, size_t* count) {
  return guarded([&] {
    require(s != nullptr && (buf != nullptr || cap == 0), "null argument");
    const auto e = s->value.elements();
    const size_t k = std::min(cap, e.size());
    std::copy_n(e.begin(), k, buf);
    if (count) *count = e.size();
  });
}

zps_status zps_set_dilate(const zps_set* s, int64_t b, zps_set** out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    const auto& m = s->value.modulus();
    *out = new zps_set{zpsum::dilate(s->value, m.reduce(b))};
  });
}

zps_status zps_sumset_count(const zps_set* s, uint64_t* out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = zpsum::subset_sums(s->value).count();
  });
}

zps_status zps_is_zero_sum_free(const zps_set* s, int* out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = zpsum::is_zero_sum_free(s->value) ? 1 : 0;
  });
}

zps_status zps_is_complete(const zps_set* s, int* out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = zpsum::is_complete(s->value) ? 1 : 0;
  });
}

zps_status zps_witness(const zps_set* s, int64_t target, zps_set** out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    auto w = zpsum::witness(s->value, s->value.modulus().reduce(target));
    if (w) *out = new zps_set{w->subset()};
  });
}

zps_status zps_analyze_json(const zps_set* s, uint64_t dilation_limit, unsigned jobs, char** json) {
  return guarded([&] {
    require(s != nullptr && json != nullptr, "null argument");
    zpsum::AnalyzeOptions opt{dilation_limit, jobs};
    *json = dup_string(zpsum::analyze_set(s->value, opt).dump(2));
  });
}

zps_status zps_search_json(uint64_t p, const char* kind, uint64_t node_budget, unsigned jobs, double time_limit_s,
                           char** json) {
  return guarded([&] {
    require(kind != nullptr && json != nullptr, "null argument");
    const zpsum::Modulus m(p);
    zpsum::SearchOptions opt;
    opt.node_budget = node_budget;
    opt.jobs = jobs;
    opt.count_extremal = true;
    opt.deadline = deadline_after(time_limit_s);
    const std::string k = kind;
    zpsum::SearchResult r{m};
    if (k == "zsf")
      r = zpsum::max_zero_sum_free(m, opt);
    else if (k == "incomplete")
      r = zpsum::max_incomplete(m, opt);
    else
      throw zpsum::Error(zpsum::Errc::invalid_argument, "search kind must be zsf or incomplete, got '" + k + "'");
    *json = dup_string(zpsum::search_to_json(r, k).dump(2));
  });
}

zps_status zps_core_pairs_json(const zps_set* s, int64_t n, char** json) {
  return guarded([&] {
    require(s != nullptr && json != nullptr, "null argument");
    require(n >= 1, "n must be positive");
    const auto core = zpsum::core_pairs(s->value, n);
    nlohmann::ordered_json j;
    j["n"] = n;
    j["pairs"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : core.pairs) j["pairs"].push_back({a, b});
    j["core_size"] = core.size();
    j["core_sum"] = core.core_sum();
    *json = dup_string(j.dump(2));
  });
}

zps_status zps_verify_theorem(const char* theorem, uint64_t p_min, uint64_t p_max, unsigned jobs,
                              uint64_t node_budget, double time_limit_s, zps_report** out) {
  return guarded([&] {
    require(theorem != nullptr && out != nullptr, "null argument");
    zpsum::VerifyOptions opt;
    opt.jobs = jobs;
    opt.node_budget = node_budget;
    opt.deadline = deadline_after(time_limit_s);
    *out = new zps_report{zpsum::verify_theorem(zpsum::parse_theorem(theorem), p_min, p_max, opt)};
  });
}

zps_status zps_report_write(const zps_report* r, const char* format, const char* path, int include_timestamp) {
  return guarded([&] {
    require(r != nullptr && format != nullptr && path != nullptr, "null argument");
    zpsum::emit_report(r->value, zpsum::parse_format(format), path, include_timestamp != 0);
  });
}

zps_status zps_report_to_string(const zps_report* r, const char* format, int include_timestamp, char** out) {
  return guarded([&] {
    require(r != nullptr && format != nullptr && out != nullptr, "null argument");
    *out = dup_string(zpsum::render_report(r->value, zpsum::parse_format(format), include_timestamp != 0));
  });
}

int zps_report_all_pass(const zps_report* r) { return r && r->value.all_pass() ? 1 : 0; }

size_t zps_report_violations(const zps_report* r) { return r ? r->value.summary.violations : 0; }

void zps_report_destroy(zps_report* r) { delete r; }

}  // extern "C"
