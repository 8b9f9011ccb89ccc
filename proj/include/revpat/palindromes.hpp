#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace revpat {

// Eertree over one string, with series links; positions 1-based.
class Eertree {
public:
  Eertree() = default;
  explicit Eertree(const std::string& s)
  {
    // node 0: length -1 root, node 1: empty palindrome
    len_ = {-1, 0};
    link_ = {0, 0};
    diff_ = {0, 0};
    series_ = {0, 0};
    child_ = {-1, -1};
    sib_ = {-1, -1};
    ch_ = {0, 0};
    psuf_.assign(s.size() + 1, 1);
    std::int32_t last = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(s[i]);
      auto fits = [&](std::int32_t v) {
        std::int64_t k = static_cast<std::int64_t>(i) - len_[v] - 1;
        return k >= 0 && static_cast<unsigned char>(s[static_cast<std::size_t>(k)]) == c;
      };
      std::int32_t cur = last;
      while (!fits(cur))
        cur = link_[cur];
      std::int32_t nx = find(cur, c);
      if (nx < 0) {
        nx = static_cast<std::int32_t>(len_.size());
        len_.push_back(len_[cur] + 2);
        std::int32_t lk = 1;
        if (len_[nx] > 1) {
          std::int32_t u = link_[cur];
          while (!fits(u))
            u = link_[u];
          lk = find(u, c);
        }
        link_.push_back(lk);
        diff_.push_back(len_[nx] - len_[lk]);
        series_.push_back(diff_[nx] == diff_[lk] ? series_[lk] : lk);
        child_.push_back(-1);
        ch_.push_back(c);
        sib_.push_back(child_[cur]);
        child_[cur] = nx;
      }
      last = nx;
      psuf_[i + 1] = nx;
    }
  }

  std::size_t nodes() const { return len_.size() - 2; }
  std::int32_t node_len(std::int32_t v) const { return len_[v]; }
  std::int32_t suffix_link(std::int32_t v) const { return link_[v]; }
  std::int32_t series_link(std::int32_t v) const { return series_[v]; }
  std::int32_t psuf(std::size_t j) const { return psuf_[j]; }

  // Longest palindrome ending at j of length at most m.
  std::int64_t longest_suffix_within(std::size_t j, std::int64_t m) const
  {
    std::int32_t a = psuf_[j];
    while (len_[a] > m) {
      std::int32_t b = series_[a];
      std::int64_t smallest = len_[b] + diff_[a];
      if (smallest <= m) {
        std::int64_t over = len_[a] - m;
        std::int64_t steps = (over + diff_[a] - 1) / diff_[a];
        return len_[a] - steps * diff_[a];
      }
      a = b;
    }
    return len_[a];
  }

private:
  std::int32_t find(std::int32_t v, unsigned char c) const
  {
    for (std::int32_t u = child_[v]; u >= 0; u = sib_[u])
      if (ch_[u] == c)
        return u;
    return -1;
  }

  std::vector<std::int32_t> len_, link_, diff_, series_, child_, sib_;
  std::vector<unsigned char> ch_;
  std::vector<std::int32_t> psuf_;
};

struct PalPair {
  std::int64_t u_len = 0;
  std::int64_t v_len = 0;
  friend bool operator==(const PalPair&, const PalPair&) = default;
};

// Manacher radii plus eertrees on t and reverse(t).
class PalIndex {
public:
  PalIndex() = default;
  explicit PalIndex(const std::string& t) : n_(static_cast<std::int64_t>(t.size())), fwd_(t), bwd_(reversed(t))
  {
    // rad_[c] over the interleaved string of 2n-1 centers: maximal palindrome length
    std::size_t m = t.empty() ? 0 : 2 * t.size() - 1;
    rad_.assign(m, 0);
    std::int64_t l = 0, r = -1;
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(m); ++c) {
      // half-width in the interleaved string
      std::int64_t k = 0;
      if (c <= r)
        k = std::min(rad_[static_cast<std::size_t>(l + r - c)], r - c);
      while (c - k - 1 >= 0 && c + k + 1 < static_cast<std::int64_t>(m)) {
        std::int64_t a = c - k - 1, b = c + k + 1;
        if (a % 2 == 1) {
          ++k;
          continue;
        }
        if (t[static_cast<std::size_t>(a / 2)] != t[static_cast<std::size_t>(b / 2)])
          break;
        ++k;
      }
      rad_[static_cast<std::size_t>(c)] = k;
      if (c + k > r) {
        l = c - k;
        r = c + k;
      }
    }
  }

  std::int64_t size() const { return n_; }

  bool is_palindrome(std::int64_t i, std::int64_t j) const
  {
    check(i, j);
    std::int64_t c = (i - 1) + (j - 1);
    return rad_[static_cast<std::size_t>(c)] >= (j - i);
  }

  std::int64_t longest_pal_suffix(std::int64_t i, std::int64_t j) const
  {
    check(i, j);
    return fwd_.longest_suffix_within(static_cast<std::size_t>(j), j - i + 1);
  }

  std::int64_t longest_pal_prefix(std::int64_t i, std::int64_t j) const
  {
    check(i, j);
    return bwd_.longest_suffix_within(static_cast<std::size_t>(n_ - i + 1), j - i + 1);
  }

  // t[i..j] = uv with u, v palindromes, v non-empty.
  std::optional<PalPair> pal_pair_decompose(std::int64_t i, std::int64_t j) const
  {
    check(i, j);
    std::int64_t len = j - i + 1;
    std::int64_t sfx = longest_pal_suffix(i, j);
    if (sfx == len || is_palindrome(i, j - sfx))
      return PalPair{len - sfx, sfx};
    std::int64_t pre = longest_pal_prefix(i, j);
    if (pre < len && is_palindrome(i + pre, j))
      return PalPair{pre, len - pre};
    return std::nullopt;
  }

  const Eertree& forward_tree() const { return fwd_; }

private:
  static std::string reversed(const std::string& t) { return std::string(t.rbegin(), t.rend()); }
  void check(std::int64_t i, std::int64_t j) const
  {
    if (i < 1 || j < i || j > n_)
      throw std::out_of_range("palindrome query range");
  }

  std::int64_t n_ = 0;
  Eertree fwd_, bwd_;
  std::vector<std::int64_t> rad_;
};

// Length of u after shifting a length-d window by delta_h inside a run.
inline std::int64_t pal_pair_step(std::int64_t u_len, std::int64_t d, std::int64_t delta_h)
{
  std::int64_t r = (u_len - 2 * delta_h) % d;
  return r < 0 ? r + d : r;
}

} // namespace revpat
