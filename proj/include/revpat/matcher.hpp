#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "anchor_nonperiodic.hpp"
#include "anchor_periodic.hpp"
#include "context.hpp"

namespace revpat {

struct Config {
  std::int64_t min_sub_len = 1;
  unsigned threads = 1;
};

struct MatchReport {
  std::vector<InstanceFamily> families;
  std::int64_t total = 0;
  std::int64_t n = 0;
  std::string pattern;
  Config config;
};

// Text plus the structures the matcher queries. Not movable: the runs index
// points into the text index.
class Indexes {
public:
  explicit Indexes(std::string t) : idx_(std::move(t)), runs_(idx_) {}
  Indexes(const Indexes&) = delete;
  Indexes& operator=(const Indexes&) = delete;

  const TextIndex& text() const { return idx_; }
  const RunsIndex& runs() const { return runs_; }

private:
  TextIndex idx_;
  RunsIndex runs_;
};

namespace detail {

inline void two_segment_instances(const MatchContext& c, Collector& out)
{
  auto ends = c.D[2].positions();
  std::int64_t msl = std::max<std::int64_t>(c.min_sub_len, 0);
  c.D[1].bits.for_each_set([&](std::size_t k) {
    std::int64_t i = c.D[1].base + static_cast<std::int64_t>(k) - 1;
    if (i > c.n)
      return;
    std::int64_t a = i + c.len[1];
    auto it = std::lower_bound(ends.begin(), ends.end(), a + msl);
    while (it != ends.end()) {
      std::int64_t beta0 = *it - a;
      auto nx = it + 1;
      if (nx == ends.end()) {
        out.add(i, beta0);
        break;
      }
      std::int64_t diff = *nx - *it, cnt = 2;
      auto e = nx + 1;
      while (e != ends.end() && *e - *(e - 1) == diff) {
        ++cnt;
        ++e;
      }
      out.add_family({i, 0, beta0, diff, cnt});
      it = e;
    }
  });
}

inline void short_instances(const MatchContext& c, Collector& out)
{
  for (std::int64_t beta = std::max<std::int64_t>(c.min_sub_len, 0); beta <= 1; ++beta)
    for (std::int64_t i = 1; i <= c.n; ++i)
      if (c.verify(i, beta))
        out.add(i, beta);
}

// Runs tasks [0, count) over `threads` workers; each task fills its own
// collector so the merge order is fixed.
template <class F>
std::vector<Collector> run_tasks(std::size_t count, unsigned threads, F&& task)
{
  std::vector<Collector> parts(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k)
      task(k, parts[k]);
    return parts;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(threads, count); ++w)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < count;)
        task(k, parts[k]);
    });
  pool.clear();
  return parts;
}

// Drops singles already covered by a family and merges everything into one
// sorted list. Families handed in must be pairwise disjoint.
inline std::vector<InstanceFamily> assemble(Collector&& col)
{
  auto& fam = col.families;
  auto& sg = col.singles;
  std::sort(sg.begin(), sg.end());
  sg.erase(std::unique(sg.begin(), sg.end()), sg.end());
  // Members of a family with start_step = -m*len_step share start + m*sub_len.
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> lines;
  std::vector<std::int64_t> slopes;
  for (std::size_t k = 0; k < fam.size(); ++k) {
    const auto& f = fam[k];
    std::int64_t m = -f.start_step / f.len_step;
    lines[{m, f.first_start + m * f.first_sublen}].push_back(k);
    slopes.push_back(m);
  }
  std::sort(slopes.begin(), slopes.end());
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());
  std::vector<InstanceFamily> out = std::move(fam);
  for (const auto& s : sg) {
    bool covered = false;
    for (auto m : slopes) {
      auto it = lines.find({m, s.start + m * s.sub_len});
      if (it == lines.end())
        continue;
      for (auto k : it->second) {
        const auto& f = out[k];
        std::int64_t off = s.sub_len - f.first_sublen;
        if (off >= 0 && off % f.len_step == 0 && off / f.len_step < f.count) {
          covered = true;
          break;
        }
      }
      if (covered)
        break;
    }
    if (!covered)
      out.push_back({s.start, 0, s.sub_len, 0, 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

inline MatchReport find_all(const Indexes& ix, const Pattern& pattern, const Config& cfg = {})
{
  MatchReport rep;
  rep.n = ix.text().size();
  rep.pattern = render_pattern(pattern);
  rep.config = cfg;
  MatchContext c(ix.text(), ix.runs(), pattern, cfg.min_sub_len);
  Collector col;
  if (c.r == 1) {
    for (auto i : c.D[1].positions())
      if (i <= c.n)
        col.add(i, 0);
  } else if (c.r == 2) {
    detail::two_segment_instances(c, col);
  } else {
    detail::short_instances(c, col);
    std::int64_t max_beta = c.n >= c.pre[c.r] ? (c.n - c.pre[c.r]) / (c.r - 1) : -1;
    if (max_beta >= 2) {
      auto scales = anchor_scales(max_beta);
      const auto& runs = c.runs.runs();
      const std::size_t run_chunks = cfg.threads > 1 ? 4 * cfg.threads : 1;
      auto parts = detail::run_tasks(scales.size() + run_chunks, cfg.threads, [&](std::size_t k, Collector& out) {
        if (k < scales.size()) {
          anchor_sweep(c, scales, k, k + 1, out.singles);
          return;
        }
        std::size_t chunk = k - scales.size();
        for (std::size_t rid = chunk; rid < runs.size(); rid += run_chunks)
          if (2 * runs[rid].d <= max_beta)
            periodic_run_sweep(c, rid, out);
      });
      for (auto& p : parts)
        col.merge(std::move(p));
    }
  }
  rep.families = detail::assemble(std::move(col));
  for (const auto& f : rep.families)
    rep.total += f.count;
  return rep;
}

inline MatchReport find_all(const std::string& t, const Pattern& p, const Config& cfg = {})
{
  Indexes ix(t);
  return find_all(ix, p, cfg);
}

namespace detail {
// Sorts a[0..n) on the low `bits` of each key. Small inputs only: callers
// split large ones into cache-sized buckets first.
inline void sort_bucket(std::uint64_t* a, std::size_t n, int bits, std::vector<std::uint64_t>& tmp,
                        std::vector<std::size_t>& cnt)
{
  if (n <= 32 || bits == 0) {
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i; j > 0 && a[j - 1] > a[j]; --j)
        std::swap(a[j - 1], a[j]);
    return;
  }
  int cap = std::clamp(static_cast<int>(std::bit_width(n)) - 1, 4, 11);
  int passes = (bits + cap - 1) / cap;
  int digit = (bits + passes - 1) / passes;
  std::uint64_t mask = (std::uint64_t{1} << digit) - 1;
  if (tmp.size() < n)
    tmp.resize(n);
  cnt.assign(std::size_t{1} << digit, 0);
  std::uint64_t *src = a, *dst = tmp.data();
  for (int shift = 0; shift < bits; shift += digit) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      ++cnt[(src[i] >> shift) & mask];
    std::size_t sum = 0;
    for (auto& c : cnt)
      sum += std::exchange(c, sum);
    for (std::size_t i = 0; i < n; ++i)
      dst[cnt[(src[i] >> shift) & mask]++] = src[i];
    std::swap(src, dst);
  }
  if (src != a)
    std::copy(src, src + n, a);
}
} // namespace detail

// Every instance of the report once, ordered by (start, sub_len).
inline std::vector<Instance> enumerate(const MatchReport& rep)
{
  std::int64_t max_len = 0, max_start = 0, total = 0;
  for (const auto& f : rep.families)
    if (f.count > 0) {
      total += f.count;
      for (auto x : {f.at(0), f.at(f.count - 1)}) {
        max_len = std::max(max_len, x.sub_len);
        max_start = std::max(max_start, x.start);
      }
    }
  int len_bits = std::bit_width(static_cast<std::uint64_t>(max_len));
  int start_bits = std::bit_width(static_cast<std::uint64_t>(max_start));
  std::vector<Instance> all;
  all.reserve(static_cast<std::size_t>(total));
  if (len_bits + start_bits <= 64) {
    // Keys are (start, sub_len) packed into one word. One scatter pass on the
    // top bits straight from the families, then each bucket is sorted while
    // it is still in cache and unpacked into the output.
    int key_bits = len_bits + start_bits;
    int top = std::clamp(static_cast<int>(std::bit_width(static_cast<std::uint64_t>(total))) - 12, 0, key_bits);
    int low = key_bits - top;
    auto key = [&](const Instance& x) {
      return static_cast<std::uint64_t>(x.start) << len_bits | static_cast<std::uint64_t>(x.sub_len);
    };
    auto bucket = [&](std::uint64_t k) { return top == 0 ? std::size_t{0} : static_cast<std::size_t>(k >> low); };
    std::vector<std::size_t> off((std::size_t{1} << top) + 1, 0);
    for (const auto& f : rep.families)
      for (std::int64_t k = 0; k < f.count; ++k)
        ++off[bucket(key(f.at(k))) + 1];
    for (std::size_t b = 1; b < off.size(); ++b)
      off[b] += off[b - 1];
    std::vector<std::uint64_t> keys(static_cast<std::size_t>(total));
    {
      auto pos = off;
      for (const auto& f : rep.families)
        for (std::int64_t k = 0; k < f.count; ++k) {
          std::uint64_t x = key(f.at(k));
          keys[pos[bucket(x)]++] = x;
        }
    }
    std::uint64_t len_mask = len_bits == 0 ? 0 : ~std::uint64_t{0} >> (64 - len_bits);
    std::vector<std::uint64_t> tmp;
    std::vector<std::size_t> cnt;
    for (std::size_t b = 0; b + 1 < off.size(); ++b) {
      detail::sort_bucket(keys.data() + off[b], off[b + 1] - off[b], low, tmp, cnt);
      for (std::size_t i = off[b]; i < off[b + 1]; ++i)
        all.push_back({static_cast<std::int64_t>(keys[i] >> len_bits), static_cast<std::int64_t>(keys[i] & len_mask)});
    }
    return all;
  }
  // keys too wide to pack: two stable counting passes, sub_len then start
  for (const auto& f : rep.families)
    for (std::int64_t k = 0; k < f.count; ++k)
      all.push_back(f.at(k));
  std::vector<Instance> tmp(all.size());
  auto pass = [&](auto key, std::int64_t top) {
    std::vector<std::size_t> cnt(static_cast<std::size_t>(top) + 2, 0);
    for (const auto& x : all)
      ++cnt[static_cast<std::size_t>(key(x)) + 1];
    for (std::size_t k = 1; k < cnt.size(); ++k)
      cnt[k] += cnt[k - 1];
    for (const auto& x : all)
      tmp[cnt[static_cast<std::size_t>(key(x))]++] = x;
    all.swap(tmp);
  };
  pass([](const Instance& x) { return x.sub_len; }, max_len);
  pass([](const Instance& x) { return x.start; }, max_start);
  return all;
}

inline bool verify_instance(const MatchContext& c, std::int64_t start, std::int64_t sub_len)
{
  if (c.r == 1)
    return sub_len == 0 && start <= c.n && c.seg_at(1, start);
  return c.verify(start, sub_len);
}

inline bool verify_instance(const Indexes& ix, const Pattern& p, std::int64_t start, std::int64_t sub_len)
{
  MatchContext c(ix.text(), ix.runs(), p, 0);
  return verify_instance(c, start, sub_len);
}

} // namespace revpat
