// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#include "zpsum/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "zpsum/constructions.hpp"
#include "zpsum/structure.hpp"
#include "zpsum/sumset.hpp"

namespace zpsum {

using nlohmann::ordered_json;

TheoremId parse_theorem(std::string_view name) {
  static constexpr std::pair<std::string_view, TheoremId> table[] = {
      {"main1", TheoremId::main1},
      {"main2-lemma", TheoremId::main2_lemma},
      {"main3", TheoremId::main3},
      {"olson", TheoremId::olson},
      {"hz", TheoremId::hz},
      {"lemma-simple5", TheoremId::lemma_simple5},
      {"exceptional-scan", TheoremId::exceptional_scan},
  };
  for (const auto& [k, v] : table)
    if (k == name) return v;
  throw Error(Errc::invalid_argument,
              "unknown theorem '" + std::string(name) +
                  "' (expected main1, main2-lemma, main3, olson, hz, lemma-simple5 or exceptional-scan)");
}

const char* theorem_name(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::main1: return "main1";
    case TheoremId::main2_lemma: return "main2-lemma";
    case TheoremId::main3: return "main3";
    case TheoremId::olson: return "olson";
    case TheoremId::hz: return "hz";
    case TheoremId::lemma_simple5: return "lemma-simple5";
    case TheoremId::exceptional_scan: return "exceptional-scan";
  }
  return "?";
}

SupportedRange supported_range(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::lemma_simple5: return {3, 1'000'000};
    case TheoremId::exceptional_scan: return {3, 6'074'000'999ULL};
    default: return {3, 499};
  }
}

const char* status_name(RecordStatus s) noexcept {
  switch (s) {
    case RecordStatus::pass: return "pass";
    case RecordStatus::violation: return "violation";
    case RecordStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

ordered_json wide_to_json(wide_t v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
  return to_string(v);
}

ordered_json set_to_json(const ZpSet& a) {
  ordered_json arr = ordered_json::array();
  for (auto x : a.elements()) arr.push_back(x);
  return arr;
}

namespace {

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

SearchOptions search_options(const VerifyOptions& opt) {
  SearchOptions so;
  so.node_budget = opt.node_budget;
  so.jobs = 1;  // parallelism is across primes, which keeps node counts reproducible
  so.deadline = opt.deadline;
  so.max_representatives = 1;
  return so;
}

RecordStatus judge(bool certain_violation, bool exhaustive, bool holds) {
  if (certain_violation) return RecordStatus::violation;
  if (!exhaustive) return RecordStatus::inconclusive;
  return holds ? RecordStatus::pass : RecordStatus::violation;
}

Record record_main1(const Modulus& m, const VerifyOptions& opt, bool hz) {
  const auto p = m.value();
  const auto n = n_of_p(m);
  auto r = max_zero_sum_free(m, search_options(opt));
  Record rec;
  rec.p = p;
  rec.computed = static_cast<std::int64_t>(r.max_size);
  ordered_json& d = rec.details;
  d["n_p"] = n;
  d["max_zsf"] = r.max_size;
  if (!hz) {
    rec.theorem = "main1";
    rec.bound = static_cast<std::int64_t>(n - 1);
    auto interval = build_family(Family::extremal_zsf, m);
    const bool interval_found =
        std::find(r.representatives.begin(), r.representatives.end(), interval) != r.representatives.end();
    d["interval_witness"] = interval_found;
    rec.status = judge(r.max_size > n - 1, r.exhaustive, r.max_size == n - 1 && interval_found);
  } else {
    rec.theorem = "hz";
    const double b = std::sqrt(2.0 * static_cast<double>(p)) + 5.0 * std::log(static_cast<double>(p));
    rec.bound = static_cast<std::int64_t>(std::ceil(b));
    rec.status = judge(rec.computed >= rec.bound, r.exhaustive, rec.computed < rec.bound);
  }
  d["exhaustive"] = r.exhaustive;
  d["nodes"] = r.nodes_explored;
  return rec;
}

Record record_olson(const Modulus& m, const VerifyOptions& opt) {
  const auto p = m.value();
  auto r = max_incomplete(m, search_options(opt));
  Record rec;
  rec.p = p;
  rec.theorem = "olson";
  rec.computed = static_cast<std::int64_t>(r.max_size);
  rec.bound = static_cast<std::int64_t>(isqrt(4 * p - 3));
  const auto mp = m_of_p(m);
  ordered_json& d = rec.details;
  d["max_incomplete"] = r.max_size;
  d["olson_bound"] = rec.bound;
  d["m_p"] = mp;
  d["m_strict"] = m_strict_of_p(m);
  d["witness"] = r.representatives.empty() ? ordered_json::array() : set_to_json(r.representatives.front());
  d["family_incomplete"] = !is_complete(build_family(Family::small_incomplete, m));
  d["exhaustive"] = r.exhaustive;
  d["nodes"] = r.nodes_explored;
  const bool upper_broken = rec.computed > rec.bound;
  const bool lower_ok = r.max_size >= mp;
  rec.status = judge(upper_broken, r.exhaustive, lower_ok);
  return rec;
}

Record record_main2(const Modulus& m, const VerifyOptions& opt) {
  auto so = search_options(opt);
  auto c = classify_extremal_zsf(m, so);
  Record rec;
  rec.p = m.value();
  rec.theorem = "main2-lemma";
  std::size_t applicable = 0, violations = 0;
  ordered_json bad = ordered_json::array();
  for (const auto& s : c.sets) {
    const ZpSet dil = dilate(s, best_dilation(s, Objective::zsf).b);
    for (const ZpSet* form : {&s, &dil}) {
      auto ci = core_inequalities(*form, opt.m);
      if (!ci.applicable) continue;
      ++applicable;
      if (!ci.holds()) {
        ++violations;
        if (bad.size() < 4) bad.push_back(set_to_json(*form));
      }
    }
  }
  rec.computed = static_cast<std::int64_t>(violations);
  rec.bound = 0;
  ordered_json& d = rec.details;
  d["m"] = opt.m;
  d["max_zsf"] = c.size;
  d["sets_enumerated"] = c.sets.size();
  d["applicable"] = applicable;
  d["violations"] = violations;
  d["offending"] = bad;
  d["exhaustive"] = c.exhaustive;
  d["nodes"] = c.nodes_explored;
  rec.status = violations ? RecordStatus::violation : RecordStatus::pass;
  return rec;
}

Record record_main3(const Modulus& m, const VerifyOptions& opt) {
  auto so = search_options(opt);
  auto r = max_incomplete(m, so);
  Record rec;
  rec.p = m.value();
  rec.theorem = "main3";
  std::vector<ZpSet> sets;
  bool exhaustive = r.exhaustive;
  if (r.max_size > 0) {
    auto e = enumerate_sets(m, SearchPredicate::incomplete, r.max_size, so);
    exhaustive = exhaustive && e.exhaustive;
    sets = std::move(e.sets);
    if (r.max_size >= 2) {
      auto z = enumerate_sets(m, SearchPredicate::misses_nonzero, r.max_size - 1, so);
      exhaustive = exhaustive && z.exhaustive;
      for (const auto& s : z.sets) {
        std::vector<std::uint64_t> v(s.elements().begin(), s.elements().end());
        v.insert(v.begin(), 0);
        sets.push_back(ZpSet::from_residues(m, v));
      }
    }
  }
  wide_t worst = 0;
  for (const auto& s : sets) worst = std::max(worst, best_dilation(s, Objective::incomplete).stats.total_norm);
  const double sp = std::sqrt(static_cast<double>(m.value()));
  rec.computed = static_cast<std::int64_t>(worst);
  rec.bound = static_cast<std::int64_t>(m.value());
  ordered_json& d = rec.details;
  d["max_incomplete"] = r.max_size;
  d["sets_examined"] = sets.size();
  d["max_total_norm"] = wide_to_json(worst);
  d["c"] = (static_cast<double>(worst) - static_cast<double>(m.value())) / sp;
  d["exhaustive"] = exhaustive;
  rec.status = RecordStatus::pass;  // c is reported, not asserted
  return rec;
}

Record record_simple5(const Modulus& m) {
  const auto p = m.value();
  std::mt19937_64 rng(p);
  Record rec;
  rec.p = p;
  rec.theorem = "lemma-simple5";
  std::int64_t min_slack = INT64_MAX;
  bool ok = true;
  constexpr int trials = 20;
  for (int i = 0; i < trials; ++i) {
    std::vector<std::int64_t> k;
    std::int64_t total = 0;
    std::uniform_int_distribution<std::int64_t> pick(1, static_cast<std::int64_t>(std::min<std::uint64_t>(p, 4 * isqrt(p) + 4)));
    for (int tries = 0; tries < 64; ++tries) {
      std::int64_t x = pick(rng);
      if (std::find(k.begin(), k.end(), x) != k.end() || total + x > static_cast<std::int64_t>(p)) continue;
      k.push_back(x);
      total += x;
    }
    auto chain = chain_sums(k, p);
    const auto l = static_cast<std::int64_t>(k.size());
    auto sums = subset_sums(ZpSet::from_integers(m, k));
    std::vector<std::int64_t> totals;
    for (const auto& c : chain) {
      totals.push_back(c.total);
      if (!check_representation(c, k, c.total) || !sums.contains(static_cast<std::uint64_t>(c.total) % p)) ok = false;
    }
    std::sort(totals.begin(), totals.end());
    if (std::adjacent_find(totals.begin(), totals.end()) != totals.end()) ok = false;
    if (static_cast<std::int64_t>(totals.size()) != l * (l + 1) / 2) ok = false;
    min_slack = std::min(min_slack, static_cast<std::int64_t>(sums.count()) - l * (l + 1) / 2);
  }
  rec.computed = min_slack;
  rec.bound = 0;
  rec.details["trials"] = trials;
  rec.details["min_slack"] = min_slack;
  rec.status = ok && min_slack >= 0 ? RecordStatus::pass : RecordStatus::violation;
  return rec;
}

template <class F>
std::vector<Record> fan_out(const std::vector<std::uint64_t>& keys, unsigned jobs, F&& make) {
  std::vector<Record> out(keys.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < keys.size(); i = next++) {
      try {
        out[i] = make(keys[i]);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(keys.size(), 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Summary tally(const std::vector<Record>& records) noexcept {
  Summary s;
  s.records = records.size();
  for (const auto& r : records) {
    switch (r.status) {
      case RecordStatus::pass: ++s.passed; break;
      case RecordStatus::violation: ++s.violations; break;
      case RecordStatus::inconclusive: ++s.inconclusive; break;
    }
  }
  return s;
}

VerificationReport verify_theorem(TheoremId id, std::uint64_t p_min, std::uint64_t p_max, VerifyOptions opt) {
  VerificationReport rep;
  rep.theorem = theorem_name(id);
  rep.p_min = p_min;
  rep.p_max = p_max;
  rep.tool_version = tool_version;
  rep.timestamp = utc_now();
  const auto range = supported_range(id);
  if (p_min <= p_max && (p_min < range.lo || p_max > range.hi))
    throw Error(Errc::capability, std::string(theorem_name(id)) + " supports the range [" + std::to_string(range.lo) +
                                      ", " + std::to_string(range.hi) + "]");

  if (id == TheoremId::exceptional_scan) {
    if (p_min <= p_max) {
      for (auto n : exceptional_prime_scan(p_max)) {
        if (n < p_min) continue;
        Record r;
        r.p = n * (n + 1) / 2 - 1;
        r.theorem = rep.theorem;
        r.computed = static_cast<std::int64_t>(n);
        r.bound = 3;
        r.details["n"] = n;
        r.status = n == 3 ? RecordStatus::pass : RecordStatus::violation;
        rep.records.push_back(std::move(r));
      }
    }
    rep.summary = tally(rep.records);
    return rep;
  }

  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = p_min; q <= p_max && p_min <= p_max; ++q)
    if (is_prime(q)) primes.push_back(q);
  rep.records = fan_out(primes, opt.jobs, [&](std::uint64_t q) {
    const Modulus m(q);
    switch (id) {
      case TheoremId::main1: return record_main1(m, opt, false);
      case TheoremId::hz: return record_main1(m, opt, true);
      case TheoremId::olson: return record_olson(m, opt);
      case TheoremId::main2_lemma: return record_main2(m, opt);
      case TheoremId::main3: return record_main3(m, opt);
      case TheoremId::lemma_simple5: return record_simple5(m);
      case TheoremId::exceptional_scan: break;
    }
    throw Error(Errc::internal_contract, "unhandled theorem");
  });
  rep.summary = tally(rep.records);
  return rep;
}

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw Error(Errc::invalid_argument, "unknown format '" + std::string(name) + "' (expected json or csv)");
}

std::string render_report(const VerificationReport& r, ReportFormat fmt, bool include_timestamp) {
  if (fmt == ReportFormat::csv) {
    std::ostringstream os;
    os << "p,theorem,computed,bound,pass\n";
    for (const auto& rec : r.records)
      os << rec.p << ',' << rec.theorem << ',' << rec.computed << ',' << rec.bound << ',' << (rec.pass() ? "true" : "false")
         << '\n';
    return os.str();
  }
  ordered_json j;
  j["theorem"] = r.theorem;
  j["p_min"] = r.p_min;
  j["p_max"] = r.p_max;
  j["tool_version"] = r.tool_version;
  if (include_timestamp && r.timestamp) j["timestamp"] = *r.timestamp;
  j["summary"] = {{"records", r.summary.records},
                  {"passed", r.summary.passed},
                  {"violations", r.summary.violations},
                  {"inconclusive", r.summary.inconclusive}};
  ordered_json recs = ordered_json::array();
  for (const auto& rec : r.records) {
    ordered_json o;
    o["p"] = rec.p;
    o["theorem"] = rec.theorem;
    for (const auto& [k, v] : rec.details.items()) o[k] = v;
    o["computed"] = rec.computed;
    o["bound"] = rec.bound;
    o["status"] = status_name(rec.status);
    o["pass"] = rec.pass();
    recs.push_back(std::move(o));
  }
  j["records"] = std::move(recs);
  return j.dump(2) + "\n";
}

void emit_report(const VerificationReport& r, ReportFormat fmt, const std::filesystem::path& path,
                 bool include_timestamp) {
  const std::string text = render_report(r, fmt, include_timestamp);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io, "cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(Errc::io, "write failed for " + path.string());
}

VerificationReport parse_report_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    VerificationReport r;
    r.theorem = j.at("theorem").get<std::string>();
    r.p_min = j.at("p_min").get<std::uint64_t>();
    r.p_max = j.at("p_max").get<std::uint64_t>();
    r.tool_version = j.at("tool_version").get<std::string>();
    if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
    const auto& s = j.at("summary");
    r.summary = {s.at("records").get<std::size_t>(), s.at("passed").get<std::size_t>(),
                 s.at("violations").get<std::size_t>(), s.at("inconclusive").get<std::size_t>()};
    for (const auto& o : j.at("records")) {
      Record rec;
      for (const auto& [k, v] : o.items()) {
        if (k == "p")
          rec.p = v.get<std::uint64_t>();
        else if (k == "theorem")
          rec.theorem = v.get<std::string>();
        else if (k == "computed")
          rec.computed = v.get<std::int64_t>();
        else if (k == "bound")
          rec.bound = v.get<std::int64_t>();
        else if (k == "status") {
          const auto st = v.get<std::string>();
          rec.status = st == "pass" ? RecordStatus::pass
                       : st == "violation" ? RecordStatus::violation
                                           : RecordStatus::inconclusive;
        } else if (k != "pass")
          rec.details[k] = v;
      }
      r.records.push_back(std::move(rec));
    }
    if (!(tally(r.records) == r.summary)) throw Error(Errc::parse, "summary does not match the records");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("malformed report: ") + e.what());
  }
}

namespace {

ordered_json stats_json(const NormStats& s) {
  return {{"total_norm", wide_to_json(s.total_norm)},
          {"low_sum", wide_to_json(s.low_sum)},
          {"high_norm_sum", wide_to_json(s.high_norm_sum)}};
}

ordered_json dilation_json(const DilationReport& d) {
  return {{"b", d.b.value},
          {"stats", stats_json(d.stats)},
          {"e1", wide_to_json(d.e1)},
          {"e2", wide_to_json(d.e2)},
          {"incomplete_error", wide_to_json(d.incomplete_error)}};
}

}  // namespace

ordered_json analyze_set(const ZpSet& a, AnalyzeOptions opt) {
  const auto& m = a.modulus();
  ordered_json j;
  j["p"] = m.value();
  j["size"] = a.size();
  j["elements"] = set_to_json(a);
  const auto sums = subset_sums(a);
  j["subset_sum_count"] = sums.count();
  j["zero_sum_free"] = !a.contains(0) && !sums.contains(0);
  j["complete"] = sums.count() == m.value();
  j["n_p"] = n_of_p(m);
  j["m_p"] = m_of_p(m);
  j["norm_stats"] = stats_json(norm_stats(a));
  if (m.value() <= opt.dilation_limit && !a.empty()) {
    DilationOptions dopt{opt.jobs, opt.dilation_limit};
    j["best_dilation"] = {{"zsf", dilation_json(best_dilation(a, Objective::zsf, dopt))},
                          {"incomplete", dilation_json(best_dilation(a, Objective::incomplete, dopt))}};
  } else {
    j["best_dilation"] = nullptr;
  }
  const auto d = extremal_diagnostics(a);
  j["extremal_diagnostics"] = {{"n", d.n},
                               {"t", d.t},
                               {"h", d.h},
                               {"h_in_a1", d.h_in_a1},
                               {"h_list", d.h_list},
                               {"b", d.b},
                               {"c_list", d.c_list},
                               {"s", d.s},
                               {"d", d.d},
                               {"d_effective", d.d_effective},
                               {"x_sum", d.x_sum},
                               {"lambda", d.lambda}};
  const auto f = check_extremal_expectations(d);
  j["expectations"] = {{"d_bound", f.d_bound}, {"b_size", f.b_size}, {"sb_confined", f.sb_confined},
                       {"messages", f.messages}};
  try {
    const auto c = attempt_zero_sum_by_cancellation(d);
    ordered_json cj{{"kind", cancellation_kind_name(c.kind)}, {"route", c.route}};
    if (c.witness) cj["witness"] = set_to_json(c.witness->subset());
    j["cancellation"] = cj;
  } catch (const Error& e) {
    j["cancellation"] = {{"error", e.what()}};
  }
  const auto inc = incomplete_diagnostics(a);
  j["incomplete_diagnostics"] = {{"n", inc.n},          {"t1_pos", inc.t1_pos()}, {"t1_neg", inc.t1_neg()},
                                 {"t1", inc.t1()},      {"a2_pos", inc.a2_pos},    {"a2_neg", inc.a2_neg}};
  return j;
}

ordered_json search_to_json(const SearchResult& r, std::string_view kind) {
  ordered_json j;
  j["p"] = r.p.value();
  j["kind"] = kind;
  j["max_size"] = r.max_size;
  if (r.extremal_count)
    j["extremal_count"] = *r.extremal_count;
  else
    j["extremal_count"] = nullptr;
  ordered_json reps = ordered_json::array();
  for (const auto& s : r.representatives) reps.push_back(set_to_json(s));
  j["representatives"] = reps;
  j["nodes_explored"] = r.nodes_explored;
  j["exhaustive"] = r.exhaustive;
  return j;
}

}  // namespace zpsum
