// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zpsum/search.hpp"
#include "zpsum/zp_core.hpp"

namespace zpsum {

inline constexpr const char* tool_version = "zpsum 0.1.0";

enum class TheoremId { main1, main2_lemma, main3, olson, hz, lemma_simple5, exceptional_scan };
TheoremId parse_theorem(std::string_view name);
const char* theorem_name(TheoremId id) noexcept;

struct SupportedRange {
  std::uint64_t lo;
  std::uint64_t hi;
};
// For exceptional-scan the range is over n, not p.
SupportedRange supported_range(TheoremId id) noexcept;

enum class RecordStatus { pass, violation, inconclusive };
const char* status_name(RecordStatus s) noexcept;

struct Record {
  std::uint64_t p = 0;
  std::string theorem;
  std::int64_t computed = 0;
  std::int64_t bound = 0;
  RecordStatus status = RecordStatus::inconclusive;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool pass() const noexcept { return status == RecordStatus::pass; }
  bool operator==(const Record&) const = default;
};

struct Summary {
  std::size_t records = 0;
  std::size_t passed = 0;
  std::size_t violations = 0;
  std::size_t inconclusive = 0;
  bool operator==(const Summary&) const = default;
};

struct VerificationReport {
  std::string theorem;
  std::uint64_t p_min = 0;
  std::uint64_t p_max = 0;
  std::vector<Record> records;
  Summary summary;
  std::string tool_version;
  std::optional<std::string> timestamp;

  bool all_pass() const noexcept { return summary.passed == summary.records; }
  bool operator==(const VerificationReport&) const = default;
};

struct VerifyOptions {
  unsigned jobs = 1;
  std::uint64_t node_budget = 1'000'000'000;
  std::int64_t m = 4;  // 1/epsilon for the core inequalities
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

VerificationReport verify_theorem(TheoremId id, std::uint64_t p_min, std::uint64_t p_max, VerifyOptions opt = {});
Summary tally(const std::vector<Record>& records) noexcept;

enum class ReportFormat { json, csv };
ReportFormat parse_format(std::string_view name);

std::string render_report(const VerificationReport& r, ReportFormat fmt, bool include_timestamp);
// Writes atomically enough for CLI use; I/O errors carry the path.
void emit_report(const VerificationReport& r, ReportFormat fmt, const std::filesystem::path& path,
                 bool include_timestamp);
VerificationReport parse_report_json(std::string_view text);

struct AnalyzeOptions {
  std::uint64_t dilation_limit = 10'000'000;
  unsigned jobs = 1;
};

nlohmann::ordered_json analyze_set(const ZpSet& a, AnalyzeOptions opt = {});
nlohmann::ordered_json search_to_json(const SearchResult& r, std::string_view kind);
nlohmann::ordered_json set_to_json(const ZpSet& a);
nlohmann::ordered_json wide_to_json(wide_t v);

}  // namespace zpsum
