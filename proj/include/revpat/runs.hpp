#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "text_index.hpp"

namespace revpat {

// Maximal repetition t[start..end] with minimal period d, end-start+1 >= 2d.
struct Run {
  std::int64_t start = 0;
  std::int64_t end = 0;
  std::int64_t d = 0;

  std::int64_t length() const { return end - start + 1; }
  friend bool operator==(const Run&, const Run&) = default;
  friend auto operator<=>(const Run&, const Run&) = default;
};

inline std::int64_t ceil_log2(std::int64_t n)
{
  std::int64_t k = 0;
  while ((std::int64_t{1} << k) < n)
    ++k;
  return std::max<std::int64_t>(k, 1);
}

class RunsIndex {
public:
  RunsIndex() = default;
  explicit RunsIndex(const TextIndex& idx) : idx_(&idx) { build(); }

  const std::vector<Run>& runs() const { return runs_; }
  std::size_t size() const { return runs_.size(); }
  const Run& run(std::size_t id) const { return runs_[id]; }

  // Run ids with period d, by ascending start; `level` 0 = all, 1 = length >=
  // ceil(log n), 2 = length >= ceil(log log n).
  std::vector<std::size_t> with_period(std::int64_t d, int level = 0) const
  {
    std::vector<std::size_t> out;
    if (d < 1 || d >= static_cast<std::int64_t>(by_d_off_.size()) - 1)
      return out;
    for (std::size_t k = by_d_off_[d]; k < by_d_off_[d + 1]; ++k) {
      std::size_t id = by_d_[k];
      std::int64_t len = runs_[id].length();
      if (level == 1 && len < log_n_)
        continue;
      if (level == 2 && len < loglog_n_)
        continue;
      out.push_back(id);
    }
    return out;
  }

  // (minimal period, run id) of t[i..j] when that substring is periodic.
  std::optional<std::pair<std::int64_t, std::size_t>> substring_run(std::int64_t i, std::int64_t j) const
  {
    if (i < 1 || j < i || j > idx_->size())
      throw std::out_of_range("substring_run range");
    std::int64_t len = j - i + 1;
    for (std::size_t k = pos_off_[i]; k < pos_off_[i + 1]; ++k) {
      const Run& R = runs_[pos_runs_[k]];
      if (2 * R.d <= len && R.end >= j)
        return std::make_pair(R.d, pos_runs_[k]);
    }
    return std::nullopt;
  }

  // Leftmost start of the lexicographically least length-d window of the run.
  std::int64_t lyndon_root(std::size_t id) const { return lroot_[id]; }
  // Leftmost end position of the least reversed length-d window of the run.
  std::int64_t reversed_lyndon_root(std::size_t id) const { return rroot_[id]; }

  std::int64_t log_n() const { return log_n_; }
  std::int64_t loglog_n() const { return loglog_n_; }

private:
  // Suffix order on t, optionally with the alphabet inverted. A proper
  // prefix is smaller in both orders.
  bool suffix_less(std::int64_t i, std::int64_t j, bool inverted) const
  {
    if (!inverted)
      return idx_->rank_fwd(i) < idx_->rank_fwd(j);
    std::int64_t n = idx_->size();
    std::int64_t l = idx_->lcp(i, j);
    if (i + l > n)
      return true;
    if (j + l > n)
      return false;
    unsigned char a = idx_->at(i + l), b = idx_->at(j + l);
    return inverted ? a > b : a < b;
  }

  void build()
  {
    const std::int64_t n = idx_->size();
    log_n_ = ceil_log2(n);
    loglog_n_ = ceil_log2(log_n_);
    std::vector<Run> found;
    std::vector<std::int64_t> nss(static_cast<std::size_t>(n + 2));
    for (int inv = 0; inv < 2; ++inv) {
      std::vector<std::int64_t> st;
      for (std::int64_t i = n; i >= 1; --i) {
        while (!st.empty() && suffix_less(i, st.back(), inv == 1))
          st.pop_back();
        nss[i] = st.empty() ? n + 1 : st.back();
        st.push_back(i);
      }
      for (std::int64_t i = 1; i <= n; ++i) {
        std::int64_t l = nss[i] - i;
        if (i + l > n)
          continue;
        std::int64_t e = idx_->lcp(i, i + l);
        std::int64_t b = i > 1 ? idx_->rlcp(i - 1, i + l - 1) : 0;
        Run R{i - b, i + l + e - 1, l};
        if (R.length() >= 2 * l)
          found.push_back(R);
      }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    runs_ = std::move(found);

    std::int64_t maxd = 1;
    for (auto& R : runs_)
      maxd = std::max(maxd, R.d);
    by_d_off_.assign(static_cast<std::size_t>(maxd + 2), 0);
    for (auto& R : runs_)
      by_d_off_[R.d + 1]++;
    for (std::size_t d = 1; d < by_d_off_.size(); ++d)
      by_d_off_[d] += by_d_off_[d - 1];
    by_d_.assign(runs_.size(), 0);
    {
      auto fill = by_d_off_;
      for (std::size_t id = 0; id < runs_.size(); ++id)
        by_d_[fill[runs_[id].d]++] = id;
    }

    pos_off_.assign(static_cast<std::size_t>(n + 2), 0);
    for (auto& R : runs_)
      for (std::int64_t p = R.start; p <= R.end - 2 * R.d + 1; ++p)
        pos_off_[p + 1]++;
    for (std::size_t p = 1; p < pos_off_.size(); ++p)
      pos_off_[p] += pos_off_[p - 1];
    pos_runs_.assign(pos_off_.back(), 0);
    {
      auto fill = pos_off_;
      for (std::size_t id = 0; id < runs_.size(); ++id) {
        const Run& R = runs_[id];
        for (std::int64_t p = R.start; p <= R.end - 2 * R.d + 1; ++p)
          pos_runs_[fill[p]++] = id;
      }
    }

    lroot_.resize(runs_.size());
    rroot_.resize(runs_.size());
    for (std::size_t id = 0; id < runs_.size(); ++id) {
      const Run& R = runs_[id];
      std::int64_t best = R.start;
      for (std::int64_t p = R.start + 1; p < R.start + R.d; ++p)
        if (idx_->rank_fwd(p) < idx_->rank_fwd(best))
          best = p;
      lroot_[id] = best;
      std::int64_t rb = R.start + R.d - 1;
      for (std::int64_t p = rb + 1; p < R.start + 2 * R.d - 1 && p <= R.end; ++p)
        if (idx_->rank_rev(p) < idx_->rank_rev(rb))
          rb = p;
      rroot_[id] = rb;
    }
  }

  const TextIndex* idx_ = nullptr;
  std::vector<Run> runs_;
  std::vector<std::size_t> by_d_off_, by_d_;
  std::vector<std::size_t> pos_off_, pos_runs_;
  std::vector<std::int64_t> lroot_, rroot_;
  std::int64_t log_n_ = 1, loglog_n_ = 1;
};

inline RunsIndex compute_runs(const TextIndex& idx) { return RunsIndex(idx); }

// Lengths of the longest prefix and suffix of t[a..b] having period d.
inline std::pair<std::int64_t, std::int64_t> periodic_extension(const TextIndex& idx, std::int64_t a,
                                                                std::int64_t b, std::int64_t d)
{
  if (a < 1 || b < a || b > idx.size() || d < 1)
    throw std::out_of_range("periodic_extension range");
  std::int64_t len = b - a + 1;
  if (d >= len)
    return {len, len};
  std::int64_t pre = std::min(len, d + idx.lcp(a, a + d));
  std::int64_t suf = std::min(len, d + idx.rlcp(b, b - d));
  return {pre, suf};
}

} // namespace revpat
