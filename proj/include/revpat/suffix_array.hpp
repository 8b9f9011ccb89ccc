#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace revpat::sa {

// Distance for software prefetches in the scans below, which chase one
// random address per element.
inline constexpr std::int32_t kAhead = 32;

inline void prefetch(const void* p)
{
#if defined(__GNUC__) || defined(__clang__)
  __builtin_prefetch(p);
#else
  (void)p;
#endif
}

// Induced sorting. s holds symbols in [0, upper]; returns the suffix array of s.
// The top bit of T is used as scratch for the suffix type, so upper must stay
// below it.
template <class T>
inline std::vector<std::int32_t> sa_is(std::vector<T> s, std::int32_t upper)
{
  static_assert(std::is_unsigned_v<T>);
  constexpr T kS = static_cast<T>(T{1} << (std::numeric_limits<T>::digits - 1));
  const std::int32_t n = static_cast<std::int32_t>(s.size());
  if (n == 0)
    return {};
  if (n == 1)
    return {0};
  if (n == 2)
    return s[0] < s[1] ? std::vector<std::int32_t>{0, 1} : std::vector<std::int32_t>{1, 0};
  if (upper < 0 || static_cast<std::uint64_t>(upper) >= kS)
    throw std::invalid_argument("alphabet too large for symbol type");

  auto sym = [&](std::int32_t i) { return static_cast<T>(s[i] & ~kS); };
  auto is_s = [&](std::int32_t i) { return (s[i] & kS) != 0; };
  auto is_lms = [&](std::int32_t i) { return i > 0 && is_s(i) && !is_s(i - 1); };
  for (std::int32_t i = n - 2; i >= 0; --i)
    if (s[i] == sym(i + 1) ? is_s(i + 1) : s[i] < sym(i + 1))
      s[i] |= kS;

  std::vector<std::int32_t> sum_l(upper + 1), sum_s(upper + 1);
  for (std::int32_t i = 0; i < n; ++i) {
    if (!is_s(i))
      sum_s[sym(i)]++;
    else
      sum_l[sym(i) + 1]++;
  }
  for (std::int32_t i = 0; i <= upper; ++i) {
    sum_s[i] += sum_l[i];
    if (i < upper)
      sum_l[i + 1] += sum_s[i];
  }

  std::vector<std::int32_t> sa(n);
  auto induce = [&](const std::vector<std::int32_t>& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::vector<std::int32_t> buf(sum_s);
    for (auto d : lms)
      sa[buf[sym(d)]++] = d;
    std::copy(sum_l.begin(), sum_l.end(), buf.begin());
    sa[buf[sym(n - 1)]++] = n - 1;
    for (std::int32_t i = 0; i < n; ++i) {
      if (i + kAhead < n && sa[i + kAhead] >= 1)
        prefetch(&s[sa[i + kAhead] - 1]);
      std::int32_t v = sa[i];
      if (v >= 1) {
        T x = s[v - 1];
        if (!(x & kS))
          sa[buf[x]++] = v - 1;
      }
    }
    std::copy(sum_l.begin(), sum_l.end(), buf.begin());
    for (std::int32_t i = n - 1; i >= 0; --i) {
      if (i >= kAhead && sa[i - kAhead] >= 1)
        prefetch(&s[sa[i - kAhead] - 1]);
      std::int32_t v = sa[i];
      if (v >= 1) {
        T x = s[v - 1];
        if (x & kS)
          sa[--buf[(x & ~kS) + 1]] = v - 1;
      }
    }
  };

  std::vector<std::int32_t> lms;
  for (std::int32_t i = 1; i < n; ++i)
    if (is_lms(i))
      lms.push_back(i);
  const std::int32_t m = static_cast<std::int32_t>(lms.size());

  induce(lms);

  if (m) {
    std::vector<std::int32_t> sorted_lms;
    sorted_lms.reserve(m);
    for (std::int32_t v : sa)
      if (is_lms(v))
        sorted_lms.push_back(v);
    // LMS positions are at least two apart, so v/2 is a collision-free slot.
    std::vector<std::uint32_t> name(static_cast<std::size_t>(n / 2 + 1), 0);
    auto lms_end = [&](std::int32_t i) {
      do
        ++i;
      while (i < n && !is_lms(i));
      return i;
    };
    std::uint32_t cur = 0;
    name[sorted_lms[0] / 2] = 0;
    for (std::int32_t i = 1; i < m; ++i) {
      std::int32_t l = sorted_lms[i - 1], r = sorted_lms[i];
      std::int32_t end_l = lms_end(l), end_r = lms_end(r);
      bool same = end_l - l == end_r - r;
      if (same) {
        while (l < end_l && s[l] == s[r]) {
          ++l;
          ++r;
        }
        same = l < n && r < n && l == end_l && s[l] == s[r];
      }
      if (!same)
        ++cur;
      name[sorted_lms[i] / 2] = cur;
    }
    std::vector<std::uint32_t> rec_s(m);
    for (std::int32_t i = 0; i < m; ++i)
      rec_s[i] = name[lms[i] / 2];
    name = {};
    auto rec_sa = sa_is(std::move(rec_s), static_cast<std::int32_t>(cur));
    for (std::int32_t i = 0; i < m; ++i)
      sorted_lms[i] = lms[rec_sa[i]];
    induce(sorted_lms);
  }
  return sa;
}

// Kasai. lcp[k] = common prefix of suffixes sa[k-1] and sa[k]; lcp[0] = 0.
// sym(i) gives the symbol at i; the last symbol must be unique.
template <class Sym>
inline std::vector<std::int32_t> lcp_array(Sym&& sym, const std::vector<std::int32_t>& sa,
                                           const std::vector<std::int32_t>& rank)
{
  const std::int32_t n = static_cast<std::int32_t>(sa.size());
  std::vector<std::int32_t> lcp(n, 0);
  std::int32_t h = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    if (i + kAhead < n && rank[i + kAhead] > 0)
      prefetch(&sa[rank[i + kAhead] - 1]);
    if (h > 0)
      --h;
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    std::int32_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && sym(i + h) == sym(j + h))
      ++h;
    lcp[rank[i]] = h;
  }
  return lcp;
}

// Range minimum over a fixed array: sparse table on 64-element block minima,
// in-block queries through per-position stack masks.
class RangeMin {
public:
  RangeMin() = default;
  explicit RangeMin(std::vector<std::int32_t> a) : a_(std::move(a))
  {
    const std::size_t n = a_.size();
    mask_.assign(n, 0);
    for (std::size_t b = 0; b < n; b += 64) {
      std::uint64_t cur = 0;
      std::size_t e = std::min(n, b + 64);
      for (std::size_t i = b; i < e; ++i) {
        while (cur) {
          unsigned top = 63u - static_cast<unsigned>(__builtin_clzll(cur));
          if (a_[b + top] >= a_[i])
            cur &= ~(std::uint64_t{1} << top);
          else
            break;
        }
        cur |= std::uint64_t{1} << (i - b);
        mask_[i] = cur;
      }
    }
    std::size_t nb = (n + 63) / 64;
    std::size_t levels = 1;
    while ((std::size_t{1} << levels) <= nb)
      ++levels;
    table_.assign(levels, std::vector<std::int32_t>(nb));
    for (std::size_t b = 0; b < nb; ++b)
      table_[0][b] = in_block(b * 64, std::min(n, b * 64 + 64) - 1);
    for (std::size_t k = 1; k < levels; ++k)
      for (std::size_t b = 0; b + (std::size_t{1} << k) <= nb; ++b)
        table_[k][b] = std::min(table_[k - 1][b], table_[k - 1][b + (std::size_t{1} << (k - 1))]);
  }

  // Minimum of a[l..r], l <= r.
  std::int32_t query(std::size_t l, std::size_t r) const
  {
    std::size_t bl = l >> 6, br = r >> 6;
    if (bl == br)
      return in_block(l, r);
    std::int32_t res = std::min(in_block(l, bl * 64 + 63), in_block(br * 64, r));
    if (bl + 1 < br) {
      std::size_t cnt = br - bl - 1;
      unsigned k = 63u - static_cast<unsigned>(__builtin_clzll(cnt));
      res = std::min(res, std::min(table_[k][bl + 1], table_[k][br - (std::size_t{1} << k)]));
    }
    return res;
  }

private:
  std::int32_t in_block(std::size_t l, std::size_t r) const
  {
    std::uint64_t m = mask_[r] & (~std::uint64_t{0} << (l & 63));
    return a_[(r & ~std::size_t{63}) + static_cast<std::size_t>(__builtin_ctzll(m))];
  }

  std::vector<std::int32_t> a_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::vector<std::int32_t>> table_;
};

} // namespace revpat::sa
