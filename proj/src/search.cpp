// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The zpsum authors
#include "zpsum/search.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <thread>

#include "zpsum/cyclic_bits.hpp"
#include "zpsum/sumset.hpp"

namespace zpsum {

namespace {

enum class Mode { maximize, enumerate };

struct Shared {
  std::atomic<std::uint64_t> need{1};  // smallest size still worth reaching
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::uint64_t budget = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class Dfs {
 public:
  Dfs(const Modulus& m, SearchPredicate pred, Mode mode, Shared& sh, std::uint64_t target, bool clique,
      std::size_t max_sets)
      : p_(m.value()), pred_(pred), mode_(mode), sh_(sh), target_(target), clique_(clique), max_sets_(max_sets),
        un_(p_), cand_(p_), tmp_(p_), f_(p_) {}

  // Search every extension of `prefix` by larger residues.
  void run(const std::vector<std::uint64_t>& prefix) {
    cur_.clear();
    ensure_depth(prefix.size());
    frames_[0].s.clear();
    frames_[0].n.clear();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      cur_.push_back(prefix[i]);
      extend(i, prefix[i]);
    }
    visit(prefix.size(), prefix.empty() ? 0 : prefix.back());
    flush();
  }

  // Children of `prefix` that pass the predicate, in ascending order.
  std::vector<std::uint64_t> children(const std::vector<std::uint64_t>& prefix) {
    cur_.clear();
    ensure_depth(prefix.size());
    frames_[0].s.clear();
    frames_[0].n.clear();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      cur_.push_back(prefix[i]);
      extend(i, prefix[i]);
    }
    candidates(prefix.size(), prefix.empty() ? 0 : prefix.back());
    return frames_[prefix.size()].v.to_vector();
  }

  const std::vector<std::uint64_t>& best() const noexcept { return best_; }
  std::vector<std::vector<std::uint64_t>>& found() noexcept { return found_; }
  bool truncated_sets() const noexcept { return truncated_; }

 private:
  struct Frame {
    CyclicBits s, n, v;
  };

  void ensure_depth(std::size_t d) {
    while (frames_.size() <= d + 1) frames_.push_back(Frame{CyclicBits(p_), CyclicBits(p_), CyclicBits(p_)});
  }

  // frames_[d+1] = frames_[d] extended by c.
  void extend(std::size_t d, std::uint64_t c) {
    ensure_depth(d + 1);
    Frame& a = frames_[d];
    Frame& b = frames_[d + 1];
    b.s = a.s;
    b.s.or_rotated(a.s, c);
    b.s.set(c);
    if (pred_ == SearchPredicate::zero_sum_free) {
      const std::uint64_t nc = c == 0 ? 0 : p_ - c;
      b.n = a.n;
      b.n.or_rotated(a.n, nc);
      b.n.set(nc);
    }
  }

  bool admissible(const CyclicBits& s) const noexcept {
    switch (pred_) {
      case SearchPredicate::zero_sum_free: return !s.test(0);
      case SearchPredicate::incomplete: return !s.all();
      case SearchPredicate::misses_nonzero: return s.count() - (s.test(0) ? 1 : 0) < p_ - 1;
    }
    return false;
  }

  // frames_[d].v = admissible extensions by residues above `last`.
  void candidates(std::size_t d, std::uint64_t last) {
    Frame& f = frames_[d];
    f.v.fill();
    f.v.clear_below(last + 1);
    if (pred_ == SearchPredicate::zero_sum_free) {
      f.v.and_not(f.n);  // c with -c already a subset sum closes a zero sum
      f.v.reset(0);
      return;
    }
    f.v.reset(0);
    auto vec = f.v.to_vector();
    for (auto c : vec) {
      tmp_ = f.s;
      tmp_.or_rotated(f.s, c);
      tmp_.set(c);
      if (!admissible(tmp_)) f.v.reset(c);
    }
  }

  // Residues x, y conflict when x + y lies in -S or is 0. Cliques of the
  // conflict graph hold at most one element of any extension.
  std::uint64_t clique_cover(const Frame& fr, std::uint64_t stop_at) {
    f_ = fr.n;
    f_.set(0);
    un_ = fr.v;
    std::uint64_t cliques = 0;
    for (std::uint64_t x = un_.find_next(0); x < p_; x = un_.find_next(x + 1)) {
      un_.reset(x);
      if (++cliques >= stop_at) return cliques;
      CyclicBits::rotate_into(f_, p_ - x, cand_);
      cand_ &= un_;
      for (std::uint64_t y = cand_.find_next(0); y < p_; y = cand_.find_next(y + 1)) {
        un_.reset(y);
        CyclicBits::rotate_into(f_, p_ - y, tmp_);
        cand_ &= tmp_;
      }
    }
    return cliques;
  }

  void visit(std::size_t d, std::uint64_t last) {
    if (++local_nodes_ >= 4096) {
      flush();
      if (sh_.nodes.load(std::memory_order_relaxed) > sh_.budget ||
          (sh_.deadline && std::chrono::steady_clock::now() >= *sh_.deadline))
        sh_.abort.store(true);
    }
    if (sh_.abort.load(std::memory_order_relaxed)) return;
    const std::uint64_t k = cur_.size();
    if (mode_ == Mode::maximize) {
      std::uint64_t need = sh_.need.load();
      if (k >= need) {
        while (k + 1 > need && !sh_.need.compare_exchange_weak(need, k + 1)) {
        }
        if (k > best_.size()) best_ = cur_;
      }
    } else if (k == target_) {
      found_.push_back(cur_);
      if (found_.size() >= max_sets_) {
        truncated_ = true;  // caller asked for no more
        sh_.abort.store(true);
      }
      return;
    }
    candidates(d, last);
    const std::uint64_t count = frames_[d].v.count();
    std::uint64_t need = mode_ == Mode::maximize ? sh_.need.load() : target_;
    if (k + count < need) return;
    if (clique_ && pred_ == SearchPredicate::zero_sum_free && k + clique_cover(frames_[d], need - k) < need) return;

    std::uint64_t remaining = count;
    const CyclicBits& v = frames_[d].v;
    for (std::uint64_t c = v.find_next(last + 1); c < p_; c = frames_[d].v.find_next(c + 1)) {
      if (mode_ == Mode::maximize) need = sh_.need.load();
      if (k + remaining < need) break;
      --remaining;
      extend(d, c);
      cur_.push_back(c);
      visit(d + 1, c);
      cur_.pop_back();
      if (sh_.abort.load(std::memory_order_relaxed)) return;
    }
  }

  void flush() {
    sh_.nodes.fetch_add(local_nodes_);
    local_nodes_ = 0;
  }

  std::uint64_t p_;
  SearchPredicate pred_;
  Mode mode_;
  Shared& sh_;
  std::uint64_t target_;
  bool clique_;
  std::size_t max_sets_;
  CyclicBits un_, cand_, tmp_, f_;
  std::deque<Frame> frames_;  // stable references while deepening
  std::vector<std::uint64_t> cur_;
  std::vector<std::uint64_t> best_;
  std::vector<std::vector<std::uint64_t>> found_;
  bool truncated_ = false;
  std::uint64_t local_nodes_ = 0;
};

struct RunOutcome {
  std::vector<std::uint64_t> best;
  std::vector<std::vector<std::uint64_t>> sets;
  std::uint64_t nodes = 0;
  bool exhaustive = false;
};

RunOutcome run_search(const Modulus& m, SearchPredicate pred, Mode mode, std::uint64_t need_or_target,
                      const SearchOptions& opt, std::size_t max_sets) {
  Shared sh;
  sh.budget = opt.node_budget;
  sh.deadline = opt.deadline;
  if (sh.deadline && std::chrono::steady_clock::now() >= *sh.deadline) {
    RunOutcome late;
    return late;  // not started, not exhaustive
  }
  sh.need = mode == Mode::maximize ? need_or_target : 0;
  const std::uint64_t target = mode == Mode::enumerate ? need_or_target : 0;
  const bool clique = opt.clique_bound;
  std::vector<std::uint64_t> root;
  if (opt.dilation_reduction) root.push_back(1);

  RunOutcome out;
  if (mode == Mode::enumerate && target == 0) {
    out.sets.push_back({});
    out.exhaustive = true;
    return out;
  }

  if (opt.jobs <= 1) {
    Dfs dfs(m, pred, mode, sh, target, clique, max_sets);
    dfs.run(root);
    out.best = dfs.best();
    out.sets = std::move(dfs.found());
    out.nodes = sh.nodes.load();
    out.exhaustive = !sh.abort.load() && !dfs.truncated_sets();
    return out;
  }

  // Fan out over the children of the root; the root itself is one node.
  Dfs probe(m, pred, mode, sh, target, clique, max_sets);
  const auto kids = probe.children(root);
  sh.nodes.fetch_add(1);
  if (mode == Mode::maximize && root.size() >= sh.need.load()) {
    out.best = root;
    sh.need = root.size() + 1;
  }
  if (mode == Mode::enumerate && root.size() == target) {
    out.sets.push_back(root);
    out.exhaustive = true;
    out.nodes = 1;
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  bool truncated = false;
  std::vector<std::vector<std::uint64_t>> bests;
  auto worker = [&] {
    Dfs dfs(m, pred, mode, sh, target, clique, max_sets);
    for (std::size_t i = next++; i < kids.size(); i = next++) {
      const std::uint64_t need = mode == Mode::maximize ? sh.need.load() : target;
      if (root.size() + (kids.size() - i) < need) continue;
      auto prefix = root;
      prefix.push_back(kids[i]);
      dfs.run(prefix);
      std::lock_guard lock(mu);
      for (auto& s : dfs.found()) out.sets.push_back(std::move(s));
      dfs.found().clear();
      truncated = truncated || dfs.truncated_sets();
    }
    std::lock_guard lock(mu);
    bests.push_back(dfs.best());
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < opt.jobs; ++j) pool.emplace_back(worker);
  }
  for (auto& b : bests)
    if (b.size() > out.best.size()) out.best = b;
  std::sort(out.sets.begin(), out.sets.end());
  if (out.sets.size() > max_sets) {
    out.sets.resize(max_sets);
    truncated = true;
  }
  out.nodes = sh.nodes.load();
  out.exhaustive = !sh.abort.load() && !truncated;
  return out;
}

std::vector<ZpSet> to_sets(const Modulus& m, const std::vector<std::vector<std::uint64_t>>& raw) {
  std::vector<ZpSet> v;
  v.reserve(raw.size());
  for (const auto& r : raw) v.push_back(ZpSet::from_residues(m, r));
  return v;
}

// Lexicographically first sets of the given size, from a sequential DFS.
std::vector<ZpSet> first_of_size(const Modulus& m, SearchPredicate pred, std::uint64_t size, SearchOptions opt,
                                 std::uint64_t& nodes, bool with_zero = false) {
  opt.jobs = 1;
  auto r = run_search(m, pred, Mode::enumerate, size, opt, std::max<std::size_t>(1, opt.max_representatives));
  nodes += r.nodes;
  std::vector<ZpSet> out;
  for (auto& s : r.sets) {
    if (with_zero) s.insert(s.begin(), 0);
    out.push_back(ZpSet::from_residues(m, s));
  }
  return out;
}

std::uint64_t orbit_count(const Modulus& m, SearchPredicate pred, std::uint64_t size, const SearchOptions& opt,
                          std::uint64_t& nodes, bool& exhaustive, bool with_zero) {
  auto e = run_search(m, pred, Mode::enumerate, size, opt, static_cast<std::size_t>(-1));
  nodes += e.nodes;
  exhaustive = exhaustive && e.exhaustive;
  if (!opt.dilation_reduction) return e.sets.size();
  std::vector<ZpSet> sets;
  for (auto& s : e.sets) {
    if (with_zero) s.insert(s.begin(), 0);
    sets.push_back(ZpSet::from_residues(m, s));
  }
  return group_orbits(m, sets).size();
}

}  // namespace

SearchResult max_zero_sum_free(const Modulus& m, SearchOptions opt) {
  SearchResult res{m};
  auto r = run_search(m, SearchPredicate::zero_sum_free, Mode::maximize, 1, opt, 0);
  res.max_size = r.best.size();
  res.nodes_explored = r.nodes;
  res.exhaustive = r.exhaustive;
  if (res.max_size > 0) {
    std::uint64_t extra = 0;
    res.representatives = first_of_size(m, SearchPredicate::zero_sum_free, res.max_size, opt, extra);
    if (res.representatives.empty()) res.representatives.push_back(ZpSet::from_residues(m, r.best));
    res.nodes_explored += extra;
    if (opt.count_extremal) {
      bool ex = res.exhaustive;
      res.extremal_count = orbit_count(m, SearchPredicate::zero_sum_free, res.max_size, opt, res.nodes_explored,
                                       ex, false);
      res.exhaustive = ex;
    }
  }
  return res;
}

SearchResult max_incomplete(const Modulus& m, SearchOptions opt) {
  SearchResult res{m};
  auto r = run_search(m, SearchPredicate::incomplete, Mode::maximize, 1, opt, 0);
  res.nodes_explored = r.nodes;
  res.exhaustive = r.exhaustive;
  std::uint64_t best = r.best.size();
  bool zero_wins = false;
  if (opt.include_zero) {
    // {0} with B is incomplete iff S_B misses a nonzero residue; such B is
    // itself incomplete, so only |B| >= best can improve the maximum.
    auto z = run_search(m, SearchPredicate::misses_nonzero, Mode::maximize, std::max<std::uint64_t>(best, 1), opt, 0);
    res.nodes_explored += z.nodes;
    res.exhaustive = res.exhaustive && z.exhaustive;
    if (z.best.size() + 1 > best) {
      best = z.best.size() + 1;
      zero_wins = true;
    }
  }
  res.max_size = best;
  std::uint64_t extra = 0;
  if (zero_wins)
    res.representatives = first_of_size(m, SearchPredicate::misses_nonzero, best - 1, opt, extra, true);
  else if (best > 0)
    res.representatives = first_of_size(m, SearchPredicate::incomplete, best, opt, extra);
  res.nodes_explored += extra;
  if (opt.count_extremal && best > 0) {
    bool ex = res.exhaustive;
    std::uint64_t count = 0;
    // Orbits of the two shapes never merge: dilation fixes 0.
    count += orbit_count(m, SearchPredicate::incomplete, best, opt, res.nodes_explored, ex, false);
    if (opt.include_zero && best >= 2)
      count += orbit_count(m, SearchPredicate::misses_nonzero, best - 1, opt, res.nodes_explored, ex, true);
    res.extremal_count = count;
    res.exhaustive = ex;
  }
  return res;
}

Enumeration enumerate_sets(const Modulus& m, SearchPredicate pred, std::uint64_t size, SearchOptions opt,
                           std::size_t max_sets) {
  Enumeration e;
  e.size = size;
  auto r = run_search(m, pred, Mode::enumerate, size, opt, max_sets);
  e.sets = to_sets(m, r.sets);
  e.nodes_explored = r.nodes;
  e.exhaustive = r.exhaustive;
  return e;
}

ZpSet canonical_dilate(const ZpSet& a) {
  const Modulus& m = a.modulus();
  std::optional<ZpSet> best;
  for (auto x : a.elements()) {
    if (x == 0) continue;
    ZpSet d = dilate(a, Residue(m.inverse(x)));
    if (!best || d.lex_less(*best)) best = std::move(d);
  }
  return best ? *best : a;
}

std::vector<Orbit> group_orbits(const Modulus& m, const std::vector<ZpSet>& sets) {
  std::map<std::vector<std::uint64_t>, Orbit> by_form;
  const auto n = static_cast<std::int64_t>(n_of_p(m));
  std::optional<ZpSet> interval_form, exceptional_form;
  {
    std::vector<std::int64_t> v;
    for (std::int64_t i = 1; i < n; ++i) v.push_back(i);
    interval_form = canonical_dilate(ZpSet::from_integers(m, v));
    v = {-2, 1};
    for (std::int64_t i = 3; i <= n; ++i) v.push_back(i);
    try {
      exceptional_form = canonical_dilate(ZpSet::from_integers(m, v));
    } catch (const Error&) {
      exceptional_form.reset();  // pattern collides mod p
    }
  }
  for (const auto& s : sets) {
    ZpSet c = canonical_dilate(s);
    std::vector<std::uint64_t> key(c.elements().begin(), c.elements().end());
    auto it = by_form.find(key);
    if (it == by_form.end()) {
      Orbit o{c};
      o.contains_initial_interval = interval_form && c == *interval_form;
      o.contains_exceptional = exceptional_form && c == *exceptional_form;
      it = by_form.emplace(std::move(key), std::move(o)).first;
    }
    ++it->second.members_seen;
  }
  std::vector<Orbit> out;
  for (auto& [k, o] : by_form) out.push_back(std::move(o));
  return out;
}

Classification classify_extremal_zsf(const Modulus& m, SearchOptions opt) {
  Classification c{m};
  auto mx = max_zero_sum_free(m, opt);
  c.size = mx.max_size;
  c.nodes_explored = mx.nodes_explored;
  auto e = enumerate_sets(m, SearchPredicate::zero_sum_free, c.size, opt);
  c.nodes_explored += e.nodes_explored;
  c.exhaustive = mx.exhaustive && e.exhaustive;
  c.orbits = group_orbits(m, e.sets);
  c.sets = std::move(e.sets);
  return c;
}

std::vector<std::uint64_t> exceptional_prime_scan(std::uint64_t n_max) {
  if (n_max < 3) throw Error(Errc::invalid_argument, "n_max must be at least 3");
  // n(n+1)/2 - 1 must fit in 64 bits
  constexpr std::uint64_t limit = 6'074'000'999ULL;
  if (n_max > limit)
    throw Error(Errc::capability, "exceptional scan supports n_max <= " + std::to_string(limit));
  std::vector<std::uint64_t> hits;
  for (std::uint64_t n = 3; n <= n_max; ++n) {
    const std::uint64_t v = n * (n + 1) / 2 - 1;
    if (is_prime(v)) hits.push_back(n);
  }
  return hits;
}

}  // namespace zpsum
