#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace revpat {

// Fixed-length bit array, positions 1..size(). Bits past size() stay zero.
class BitArray {
public:
  BitArray() = default;
  explicit BitArray(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool test(std::size_t i) const
  {
    --i;
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v = true)
  {
    --i;
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }

  std::size_t count() const
  {
    std::size_t c = 0;
    for (auto x : w_)
      c += std::popcount(x);
    return c;
  }

  bool any() const
  {
    for (auto x : w_)
      if (x)
        return true;
    return false;
  }

  // Bits [from, from+len) as a new array; positions outside 1..size() read as zero.
  BitArray window(std::int64_t from, std::size_t len) const
  {
    BitArray out(len);
    for (std::size_t k = 0; k < out.w_.size(); ++k)
      out.w_[k] = word_at(from - 1 + static_cast<std::int64_t>(k) * 64);
    out.trim();
    return out;
  }

  // 64 bits starting at 0-based bit offset `off` (may be negative or past the end).
  std::uint64_t word_at(std::int64_t off) const
  {
    if (off <= -64 || off >= static_cast<std::int64_t>(len_))
      return 0;
    if (off < 0)
      return word_at(0) << static_cast<unsigned>(-off);
    std::size_t q = static_cast<std::size_t>(off) >> 6;
    unsigned sh = static_cast<unsigned>(off & 63);
    std::uint64_t lo = w_[q] >> sh;
    if (sh && q + 1 < w_.size())
      lo |= w_[q + 1] << (64 - sh);
    return lo;
  }

  BitArray& operator&=(const BitArray& o)
  {
    if (o.len_ != len_)
      throw std::invalid_argument("bit array length mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k)
      w_[k] &= o.w_[k];
    return *this;
  }

  template <class F>
  void for_each_set(F&& f) const
  {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(x)) + 1);
        x &= x - 1;
      }
    }
  }

  std::vector<std::uint64_t>& words() { return w_; }
  const std::vector<std::uint64_t>& words() const { return w_; }

  void trim()
  {
    if (len_ & 63)
      w_.back() &= (std::uint64_t{1} << (len_ & 63)) - 1;
  }

  friend bool operator==(const BitArray&, const BitArray&) = default;

private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> w_;
};

// out[i] = AND_k arrays[k][i + offset_k]; every (length - offset) must agree.
inline BitArray and_aligned(const std::vector<std::pair<const BitArray*, std::size_t>>& in)
{
  if (in.empty())
    return {};
  auto width_of = [](const std::pair<const BitArray*, std::size_t>& e) -> std::size_t {
    if (e.second > e.first->size())
      throw std::invalid_argument("offset past array end");
    return e.first->size() - e.second;
  };
  std::size_t width = width_of(in[0]);
  for (auto& e : in)
    if (width_of(e) != width)
      throw std::invalid_argument("inconsistent window widths");
  BitArray out(width);
  auto& ow = out.words();
  for (std::size_t k = 0; k < ow.size(); ++k) {
    std::uint64_t acc = ~std::uint64_t{0};
    for (auto& e : in)
      acc &= e.first->word_at(static_cast<std::int64_t>(e.second + k * 64));
    ow[k] = acc;
  }
  out.trim();
  return out;
}

namespace detail {
inline const std::array<std::uint16_t, 65536>& rev16_table()
{
  static const auto table = [] {
    std::array<std::uint16_t, 65536> t{};
    for (std::uint32_t x = 0; x < 65536; ++x) {
      std::uint16_t y = 0;
      for (int b = 0; b < 16; ++b)
        if (x >> b & 1u)
          y |= static_cast<std::uint16_t>(1u << (15 - b));
      t[x] = y;
    }
    return t;
  }();
  return table;
}

inline std::uint64_t reverse_word(std::uint64_t x)
{
  auto& t = rev16_table();
  return (std::uint64_t{t[x & 0xffff]} << 48) | (std::uint64_t{t[(x >> 16) & 0xffff]} << 32) |
         (std::uint64_t{t[(x >> 32) & 0xffff]} << 16) | std::uint64_t{t[x >> 48]};
}
} // namespace detail

inline BitArray reverse_bits(const BitArray& a)
{
  std::size_t len = a.size();
  BitArray out(len);
  if (len == 0)
    return out;
  // Reversed words are laid out from the top, then shifted into place.
  std::size_t nw = a.words().size();
  std::size_t pad = nw * 64 - len;
  BitArray tmp(nw * 64);
  for (std::size_t k = 0; k < nw; ++k)
    tmp.words()[nw - 1 - k] = detail::reverse_word(a.words()[k]);
  for (std::size_t k = 0; k < nw; ++k)
    out.words()[k] = tmp.word_at(static_cast<std::int64_t>(pad + k * 64));
  out.trim();
  return out;
}

inline BitArray clear_range(BitArray a, std::size_t lo, std::size_t hi)
{
  if (lo < 1 || lo > hi + 1 || hi > a.size())
    throw std::out_of_range("clear_range bounds");
  for (std::size_t i = lo; i <= hi;) {
    std::size_t b = i - 1;
    if ((b & 63) == 0 && i + 63 <= hi) {
      a.words()[b >> 6] = 0;
      i += 64;
    } else {
      a.set(i, false);
      ++i;
    }
  }
  return a;
}

} // namespace revpat
