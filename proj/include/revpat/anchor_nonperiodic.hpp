#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "context.hpp"

namespace revpat {

struct OccNearby {
  std::vector<std::int64_t> forward;
  std::vector<std::int64_t> reversed;
};

// Starts q in [lo..hi] with t[q..q+m-1] = t[x..x+m-1].
inline void scan_forward(const TextIndex& idx, std::int64_t x, std::int64_t m, std::int64_t lo, std::int64_t hi,
                         std::vector<std::int64_t>& out, std::int64_t step = 1)
{
  lo = std::max<std::int64_t>(lo, 1);
  std::int64_t last = std::min(hi, idx.size() - m + 1);
  if (m <= 0 || lo > last)
    return;
  std::uint64_t h = idx.hash_fwd(x, m);
  for (std::int64_t q = lo; q <= last; q += step)
    if (idx.hash_fwd(q, m) == h && idx.equal(x, q, m))
      out.push_back(q);
}

// Starts q in [lo..hi] with t[q..q+m-1] = reverse(t[x..x+m-1]).
inline void scan_reversed(const TextIndex& idx, std::int64_t x, std::int64_t m, std::int64_t lo, std::int64_t hi,
                          std::vector<std::int64_t>& out)
{
  lo = std::max<std::int64_t>(lo, 1);
  std::int64_t last = std::min(hi, idx.size() - m + 1);
  if (m <= 0 || lo > last)
    return;
  std::uint64_t h = idx.hash_rev(x + m - 1, m);
  for (std::int64_t q = lo; q <= last; ++q)
    if (idx.hash_fwd(q, m) == h && idx.equal_reversed(q, x, m))
      out.push_back(q);
}

// Nearby-occurrence search for one gap length lambda.
class VFindIndex {
public:
  VFindIndex(const TextIndex& idx, const RunsIndex& runs, std::int64_t lambda)
    : idx_(&idx), runs_(&runs), lambda_(lambda)
  {
    if (lambda < 0)
      throw std::invalid_argument("negative gap");
  }

  std::int64_t lambda() const { return lambda_; }

  // All occurrences of v = t[q..q2-1] and of reverse(v) starting in
  // [q2+lambda .. q2+lambda+2|v|]. v must not be periodic.
  OccNearby find_nearby(std::int64_t q, std::int64_t q2) const
  {
    std::int64_t m = q2 - q;
    if (m < 1 || q < 1 || q2 - 1 > idx_->size())
      throw std::out_of_range("find_nearby range");
    if (runs_->substring_run(q, q2 - 1))
      throw std::invalid_argument("find_nearby needs a non-periodic substring");
    OccNearby o;
    std::int64_t lo = q2 + lambda_, hi = q2 + lambda_ + 2 * m;
    scan_forward(*idx_, q, m, lo, hi, o.forward);
    scan_reversed(*idx_, q, m, lo, hi, o.reversed);
    return o;
  }

private:
  const TextIndex* idx_;
  const RunsIndex* runs_;
  std::int64_t lambda_;
};

inline VFindIndex build_vfind(const TextIndex& idx, const RunsIndex& runs, std::int64_t lambda)
{
  return VFindIndex(idx, runs, lambda);
}

// Substitution lengths suggested by the copies of v = t[q1..q1+v_len-1] found
// after w_1 (first) and, for mixed directions, after w_2 (second), kept in
// (3|v|/2 .. 2|v|]. Pattern must be normalized.
inline std::vector<std::int64_t> candidate_betas(const Pattern& p, std::int64_t q1, std::int64_t v_len,
                                                 const OccNearby& first, const OccNearby* second = nullptr)
{
  std::vector<std::int64_t> out;
  if (p.variables() < 2)
    return out;
  auto seg = [&](std::size_t z) { return static_cast<std::int64_t>(p.segments[z - 1].size()); };
  if (p.directions[1] == Direction::Forward) {
    for (auto q2 : first.forward)
      out.push_back(q2 - q1 - seg(2));
  } else if (second && p.variables() >= 3) {
    if (p.directions[2] == Direction::Forward) {
      for (auto q3 : second->forward) {
        std::int64_t twice = q3 - q1 - seg(2) - seg(3);
        if (twice % 2 == 0)
          out.push_back(twice / 2);
      }
    } else {
      for (auto q2 : first.reversed)
        for (auto q3 : second->reversed)
          out.push_back(q3 - q2 - seg(3));
    }
  }
  std::erase_if(out, [&](std::int64_t b) { return 2 * b <= 3 * v_len || b > 2 * v_len; });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// Instance starts for substitution length beta whose w_1 = [a..a+beta-1]
// covers [x..y]; appended to out.
inline void fixed_len_scan(const MatchContext& c, std::int64_t x, std::int64_t y, std::int64_t beta,
                           std::vector<Instance>& out)
{
  const auto& idx = c.idx;
  std::int64_t m = y - x + 1;
  if (beta < m || beta < c.min_sub_len)
    return;
  std::int64_t l1 = c.len[1];
  std::int64_t a_lo = std::max(1 + l1, y - beta + 1);
  std::int64_t a_hi = std::min(x, c.n - c.image_len(beta) + 1 + l1);
  if (a_lo > a_hi)
    return;
  auto vpos = [&](std::int64_t a, std::int64_t z) { return a + (z - 1) * beta + c.pre[z] - l1; };
  std::int64_t z0 = 0;
  for (std::int64_t z = 2; z < c.r && a_lo <= a_hi; ++z) {
    if (c.fwd[z]) {
      std::int64_t cz = vpos(x, z);
      if (!idx.equal(x, cz, m))
        return;
      std::int64_t left = idx.rlcp0(x - 1, cz - 1);
      std::int64_t right = idx.lcp0(y + 1, cz + m);
      a_lo = std::max(a_lo, x - left);
      a_hi = std::min(a_hi, y + right - beta + 1);
    } else if (!z0) {
      z0 = z;
    } else {
      std::int64_t core = vpos(a_hi, z0);
      std::int64_t delta = vpos(a_hi, z) - core;
      if (idx.at(core) != idx.at(core + delta))
        return;
      std::int64_t left = idx.rlcp(core, core + delta);
      std::int64_t right = idx.lcp(core, core + delta);
      std::int64_t off = vpos(0, z0);
      a_lo = std::max(a_lo, core - left + 1 - off);
      a_hi = std::min(a_hi, core + right - beta - off);
    }
  }
  if (a_lo > a_hi)
    return;
  for (std::int64_t base = a_lo; base <= a_hi; base += 64) {
    std::int64_t width = std::min<std::int64_t>(64, a_hi - base + 1);
    std::uint64_t acc = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    for (std::int64_t z = 1; z <= c.r && acc; ++z) {
      // s_z starts at a - l1 + pre[z-1] + (z-1)*beta
      std::int64_t pos = base - l1 + c.pre[z - 1] + (z - 1) * beta;
      acc &= c.D[z].bits.word_at(pos - c.D[z].base);
    }
    while (acc) {
      std::int64_t a = base + std::countr_zero(acc);
      acc &= acc - 1;
      if (z0 && !idx.equal_reversed(a, vpos(a, z0), beta))
        continue;
      out.push_back({a - l1, beta});
    }
  }
}

// Instances of s_1 x s_2 xbar s_3 with s_2 starting at g and w_1 starting in
// [a_lo..a_hi], substitution length in [b_lo..b_hi].
inline void pal_pattern_scan(const MatchContext& c, std::int64_t g, std::int64_t a_lo, std::int64_t a_hi,
                             std::int64_t b_lo, std::int64_t b_hi, std::vector<Instance>& out)
{
  if (!c.seg_at(2, g))
    return;
  std::int64_t ext = c.idx.rev0(g + c.len[2], g - 1);
  b_hi = std::min(b_hi, ext);
  b_lo = std::max(b_lo, c.min_sub_len);
  a_lo = std::max(a_lo, g - b_hi);
  a_hi = std::min(a_hi, g - b_lo);
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    std::int64_t beta = g - a;
    if (c.seg_at(1, a - c.len[1]) && c.seg_at(3, g + c.len[2] + beta))
      out.push_back({a - c.len[1], beta});
  }
}

} // namespace detail

// occ over [h2-beta-|s1|+1 .. h1-|s1|]: bit for i set iff t[i..] starts an
// instance with substitution length beta whose w_1 contains t[h1..h2].
inline OccBits fixed_len_instances(const MatchContext& c, std::int64_t h1, std::int64_t h2, std::int64_t beta)
{
  if (beta < h2 - h1 + 1)
    throw std::invalid_argument("substitution shorter than anchor");
  OccBits o;
  o.base = h2 - beta - c.len[1] + 1;
  o.bits = BitArray(static_cast<std::size_t>(h1 - c.len[1] - o.base + 1));
  if (c.r < 3)
    throw std::invalid_argument("fixed_len_instances needs two or more variables");
  std::vector<Instance> hits;
  detail::fixed_len_scan(c, h1, h2, beta, hits);
  for (auto& h : hits)
    o.bits.set(static_cast<std::size_t>(h.start - o.base + 1));
  return o;
}

// occ over [h1-|s1 v| .. h1-|s1|] for p = s1 x s2 xbar s3, given reverse(v)
// at q: bit for i set iff an instance starts at i whose w_1 contains v and
// whose w_2 holds that reversed copy.
inline OccBits pal_pattern_occ(const MatchContext& c, std::int64_t h1, std::int64_t h2, std::int64_t q)
{
  if (c.r != 3 || c.fwd[2])
    throw std::invalid_argument("pal_pattern_occ needs s1 x s2 xbar s3");
  std::int64_t m = h2 - h1 + 1;
  OccBits o;
  o.base = h1 - c.len[1] - m;
  o.bits = BitArray(static_cast<std::size_t>(m + 1));
  std::int64_t twice = h2 + 1 + q - c.len[2];
  if (twice % 2 != 0)
    return o;
  std::int64_t g = twice / 2;
  if (g <= h2)
    return o;
  std::vector<Instance> hits;
  detail::pal_pattern_scan(c, g, h1 - m, h1, 0, g, hits);
  for (auto& h : hits)
    o.bits.set(static_cast<std::size_t>(h.start - o.base + 1));
  return o;
}

// Substitution-length bands (lo, hi] and anchor geometry per scale.
struct Scale {
  std::int64_t lo, hi, anchor_len, step;
};

inline std::vector<Scale> anchor_scales(std::int64_t max_beta)
{
  std::vector<Scale> out;
  for (std::int64_t lo = 1; lo < max_beta;) {
    std::int64_t hi = std::max(lo + 1, lo * 4 / 3);
    std::int64_t L = (hi + 1) / 2;
    out.push_back({lo, hi, L, lo + 2 - L});
    lo = hi;
  }
  return out;
}

namespace detail {

// Every instance with substitution length in (s.lo..s.hi] whose w_1
// contains t[x..y], via the copies of that anchor in later substitutions.
inline void anchor_instances(const MatchContext& c, const Scale& s, std::int64_t x, std::int64_t y,
                             std::vector<Instance>& out, std::vector<std::int64_t>& hits,
                             std::vector<std::int64_t>& hits2)
{
  const auto& idx = c.idx;
  std::int64_t m = y - x + 1;
  std::int64_t lo = std::max(s.lo + 1, m);
  std::int64_t hi = s.hi;
  if (lo > hi)
    return;
  hits.clear();
  if (c.fwd[2]) {
    std::int64_t off = x + c.len[2];
    scan_forward(idx, x, m, off + lo, off + hi, hits);
    for (auto q : hits)
      fixed_len_scan(c, x, y, q - off, out);
    return;
  }
  if (c.r == 3) {
    // s1 x s2 xbar s3: each reversed copy pins the start of s2
    scan_reversed(idx, x, m, y + 1 + c.len[2], 2 * x + 2 * hi - y - 1 + c.len[2], hits);
    for (auto q : hits) {
      std::int64_t twice = y + 1 + q - c.len[2];
      if (twice % 2)
        continue;
      std::int64_t g = twice / 2;
      if (g - 1 < y)
        continue;
      pal_pattern_scan(c, g, g - hi, x, lo, hi, out);
    }
    return;
  }
  if (c.fwd[3]) {
    std::int64_t off = x + c.len[2] + c.len[3];
    scan_forward(idx, x, m, off + 2 * lo, off + 2 * hi, hits, 2);
    for (auto q : hits)
      fixed_len_scan(c, x, y, (q - off) / 2, out);
    return;
  }
  scan_reversed(idx, x, m, x + m + c.len[2], x + 2 * hi + c.len[2] - m, hits);
  std::vector<std::int64_t> betas;
  for (auto q2 : hits) {
    hits2.clear();
    scan_reversed(idx, x, m, q2 + c.len[3] + lo, q2 + c.len[3] + hi, hits2);
    for (auto q3 : hits2)
      betas.push_back(q3 - q2 - c.len[3]);
  }
  std::sort(betas.begin(), betas.end());
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
  for (auto b : betas)
    fixed_len_scan(c, x, y, b, out);
}

} // namespace detail

// All instances with substitution length >= 2 whose substitution is not
// covered by a periodic anchor's run, for the scales in [first, last).
inline void anchor_sweep(const MatchContext& c, const std::vector<Scale>& scales, std::size_t first,
                         std::size_t last, std::vector<Instance>& out)
{
  std::vector<std::int64_t> hits, hits2;
  for (std::size_t k = first; k < last; ++k) {
    const Scale& s = scales[k];
    std::int64_t L = s.anchor_len;
    for (std::int64_t q1 = 1; q1 + L - 1 <= c.n; q1 += s.step) {
      auto per = c.runs.substring_run(q1, q1 + L - 1);
      if (!per) {
        detail::anchor_instances(c, s, q1, q1 + L - 1, out, hits, hits2);
        continue;
      }
      const Run& R = c.runs.run(per->second);
      if (R.end + 1 <= c.n && R.end + 2 - q1 <= s.hi)
        detail::anchor_instances(c, s, q1, R.end + 1, out, hits, hits2);
      if (R.start >= 2 && q1 + L - R.start + 1 <= s.hi)
        detail::anchor_instances(c, s, R.start - 1, q1 + L - 1, out, hits, hits2);
    }
  }
}

} // namespace revpat
