#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bitvec.hpp"
#include "suffix_array.hpp"

namespace revpat {

// Occurrence set of one string over text positions base..base+bits.size()-1.
struct OccBits {
  std::int64_t base = 1;
  BitArray bits;

  bool contains(std::int64_t pos) const
  {
    std::int64_t k = pos - base + 1;
    return k >= 1 && k <= static_cast<std::int64_t>(bits.size()) && bits.test(static_cast<std::size_t>(k));
  }
  std::vector<std::int64_t> positions() const
  {
    std::vector<std::int64_t> out;
    bits.for_each_set([&](std::size_t k) { out.push_back(base + static_cast<std::int64_t>(k) - 1); });
    return out;
  }
};

// Suffix array, LCP and range-minimum structure over t, a separator and
// reverse(t). All positions are 1-based.
class TextIndex {
public:
  TextIndex() = default;
  explicit TextIndex(std::string text) : t_(std::move(text))
  {
    if (t_.empty())
      throw std::invalid_argument("empty text");
    n_ = static_cast<std::int64_t>(t_.size());
    std::vector<std::uint16_t> s(2 * t_.size() + 2);
    for (std::size_t i = 0; i < t_.size(); ++i) {
      s[i] = static_cast<std::uint16_t>(static_cast<unsigned char>(t_[i]) + 2);
      s[2 * t_.size() - i] = s[i];
    }
    s[t_.size()] = 1;
    s.back() = 0;
    sa_ = sa::sa_is(std::move(s), 257);
    rank_.assign(sa_.size(), 0);
    for (std::size_t k = 0; k < sa_.size(); ++k)
      rank_[sa_[k]] = static_cast<std::int32_t>(k);
    rmq_ = sa::RangeMin(sa::lcp_array([this](std::int32_t p) { return sym(p); }, sa_, rank_));
    build_fingerprints();
  }

  std::int64_t size() const { return n_; }
  const std::string& text() const { return t_; }
  unsigned char at(std::int64_t i) const { return static_cast<unsigned char>(t_[static_cast<std::size_t>(i - 1)]); }

  // Longest common prefix of t[i..n] and t[j..n].
  std::int64_t lcp(std::int64_t i, std::int64_t j) const
  {
    check(i);
    check(j);
    if (i == j)
      return n_ - i + 1;
    std::int64_t k = 0, lim = std::min(kScan, n_ - std::max(i, j) + 1);
    while (k < lim && t_[static_cast<std::size_t>(i - 1 + k)] == t_[static_cast<std::size_t>(j - 1 + k)])
      ++k;
    return k < kScan ? k : lce(i - 1, j - 1);
  }

  // Longest common suffix of t[1..i] and t[1..j].
  std::int64_t rlcp(std::int64_t i, std::int64_t j) const
  {
    check(i);
    check(j);
    if (i == j)
      return i;
    std::int64_t k = 0, lim = std::min(kScan, std::min(i, j));
    while (k < lim && t_[static_cast<std::size_t>(i - 1 - k)] == t_[static_cast<std::size_t>(j - 1 - k)])
      ++k;
    return k < kScan ? k : lce(rev_slot(i), rev_slot(j));
  }

  // Largest l with t[i..i+l-1] = reverse(t[j-l+1..j]).
  std::int64_t rev_match_len(std::int64_t i, std::int64_t j) const
  {
    check(i);
    check(j);
    std::int64_t k = 0, lim = std::min(kScan, std::min(n_ - i + 1, j));
    while (k < lim && t_[static_cast<std::size_t>(i - 1 + k)] == t_[static_cast<std::size_t>(j - 1 - k)])
      ++k;
    return k < kScan ? k : lce(i - 1, rev_slot(j));
  }

  // Bounds-tolerant variants used by the matchers: any position outside
  // 1..n yields 0.
  std::int64_t lcp0(std::int64_t i, std::int64_t j) const
  {
    return (i < 1 || j < 1 || i > n_ || j > n_) ? 0 : lcp(i, j);
  }
  std::int64_t rlcp0(std::int64_t i, std::int64_t j) const
  {
    return (i < 1 || j < 1 || i > n_ || j > n_) ? 0 : rlcp(i, j);
  }
  std::int64_t rev0(std::int64_t i, std::int64_t j) const
  {
    return (i < 1 || j < 1 || i > n_ || j > n_) ? 0 : rev_match_len(i, j);
  }

  bool equal(std::int64_t i, std::int64_t j, std::int64_t len) const
  {
    if (len <= 0)
      return true;
    if (i < 1 || j < 1 || i + len - 1 > n_ || j + len - 1 > n_)
      return false;
    return i == j || lcp(i, j) >= len;
  }
  // t[i..i+len-1] equals reverse(t[j..j+len-1]).
  bool equal_reversed(std::int64_t i, std::int64_t j, std::int64_t len) const
  {
    if (len <= 0)
      return true;
    if (i < 1 || j < 1 || i + len - 1 > n_ || j + len - 1 > n_)
      return false;
    return rev_match_len(i, j + len - 1) >= len;
  }

  // Bit i (positions 1..n+1) set iff s occurs at i.
  OccBits occurrences(std::string_view s) const
  {
    OccBits o{1, BitArray(static_cast<std::size_t>(n_ + 1))};
    if (s.empty()) {
      for (std::int64_t i = 1; i <= n_ + 1; ++i)
        o.bits.set(static_cast<std::size_t>(i));
      return o;
    }
    if (static_cast<std::int64_t>(s.size()) > n_)
      return o;
    auto cmp = [&](std::int32_t pos) {
      // <0 if suffix < s (on the first |s| symbols), 0 if s is a prefix, >0 otherwise
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::int32_t a = sym(pos + static_cast<std::int32_t>(k));
        std::int32_t b = static_cast<unsigned char>(s[k]) + 2;
        if (a != b)
          return a < b ? -1 : 1;
      }
      return 0;
    };
    std::size_t lo = 0, hi = sa_.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cmp(sa_[mid]) < 0)
        lo = mid + 1;
      else
        hi = mid;
    }
    for (std::size_t k = lo; k < sa_.size() && cmp(sa_[k]) == 0; ++k)
      if (sa_[k] < n_)
        o.bits.set(static_cast<std::size_t>(sa_[k]) + 1);
    return o;
  }

  // Polynomial fingerprints; equal fingerprints are only a filter, callers
  // confirm with lcp.
  std::uint64_t hash_fwd(std::int64_t i, std::int64_t len) const { return sub(hf_, i - 1, len); }
  // Fingerprint of reverse(t[j-len+1..j]).
  std::uint64_t hash_rev(std::int64_t j, std::int64_t len) const { return sub(hr_, n_ - j, len); }

  const std::vector<std::int32_t>& suffix_array() const { return sa_; }
  const std::vector<std::int32_t>& rank() const { return rank_; }
  // Rank of the suffix t[i..n] (with the separator tail) in the combined array.
  std::int32_t rank_fwd(std::int64_t i) const { return rank_[static_cast<std::size_t>(i - 1)]; }
  // Rank of the suffix of reverse(t) that starts with t[j], t[j-1], ...
  std::int32_t rank_rev(std::int64_t j) const { return rank_[static_cast<std::size_t>(rev_slot(j))]; }

private:
  // Short extensions are compared directly before falling back to the RMQ.
  static constexpr std::int64_t kScan = 8;
  static constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
  static constexpr std::uint64_t kBase = 0x1f3d5b79a2c4e6ULL % kMod;

  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b)
  {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kMod);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t r = lo + hi;
    return r >= kMod ? r - kMod : r;
  }

  void build_fingerprints()
  {
    std::size_t n = t_.size();
    pw_.assign(n + 1, 1);
    hf_.assign(n + 1, 0);
    hr_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      pw_[i + 1] = mulmod(pw_[i], kBase);
      std::uint64_t c = static_cast<unsigned char>(t_[i]) + 1;
      std::uint64_t cr = static_cast<unsigned char>(t_[n - 1 - i]) + 1;
      hf_[i + 1] = (mulmod(hf_[i], kBase) + c) % kMod;
      hr_[i + 1] = (mulmod(hr_[i], kBase) + cr) % kMod;
    }
  }

  std::uint64_t sub(const std::vector<std::uint64_t>& h, std::int64_t from, std::int64_t len) const
  {
    std::uint64_t a = h[static_cast<std::size_t>(from + len)];
    std::uint64_t b = mulmod(h[static_cast<std::size_t>(from)], pw_[static_cast<std::size_t>(len)]);
    return a >= b ? a - b : a + kMod - b;
  }

  std::int32_t sym(std::int32_t pos) const
  {
    std::size_t p = static_cast<std::size_t>(pos);
    std::size_t n = t_.size();
    if (p < n)
      return static_cast<unsigned char>(t_[p]) + 2;
    if (p == n)
      return 1;
    if (p <= 2 * n)
      return static_cast<unsigned char>(t_[2 * n - p]) + 2;
    return 0;
  }

  std::int64_t rev_slot(std::int64_t j) const { return 2 * n_ + 1 - j; }

  std::int64_t lce(std::int64_t u, std::int64_t v) const
  {
    std::int32_t a = rank_[static_cast<std::size_t>(u)];
    std::int32_t b = rank_[static_cast<std::size_t>(v)];
    if (a > b)
      std::swap(a, b);
    return rmq_.query(static_cast<std::size_t>(a) + 1, static_cast<std::size_t>(b));
  }

  void check(std::int64_t i) const
  {
    if (i < 1 || i > n_)
      throw std::out_of_range("text position out of range");
  }

  std::string t_;
  std::int64_t n_ = 0;
  std::vector<std::int32_t> sa_, rank_;
  sa::RangeMin rmq_;
  std::vector<std::uint64_t> pw_, hf_, hr_;
};

inline TextIndex build_index(std::string t) { return TextIndex(std::move(t)); }

} // namespace revpat
