#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace revpat::gen {

inline std::string random_text(std::int64_t n, int sigma, std::uint64_t seed)
{
  if (sigma < 1 || sigma > 26)
    throw std::invalid_argument("alphabet size must be in 1..26");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  std::string t(static_cast<std::size_t>(n), 'a');
  for (auto& ch : t)
    ch = static_cast<char>('a' + pick(rng));
  return t;
}

inline std::string periodic_text(std::int64_t n, std::string_view root = "abc")
{
  std::string t;
  t.reserve(static_cast<std::size_t>(n));
  while (static_cast<std::int64_t>(t.size()) < n)
    t += root;
  t.resize(static_cast<std::size_t>(n));
  return t;
}

inline std::string fibonacci_text(std::int64_t n)
{
  std::string a = "a", b = "ab";
  while (static_cast<std::int64_t>(b.size()) < n) {
    std::string c = b + a;
    a = std::move(b);
    b = std::move(c);
  }
  b.resize(static_cast<std::size_t>(n));
  return b;
}

// (root)^k sep (root)^k: two equal periodic blocks around one separator.
inline std::string two_block_text(std::int64_t n, std::string_view root = "abc", char sep = 'd')
{
  std::int64_t half = (n - 1) / 2;
  std::string t = periodic_text(half, root);
  t += sep;
  t += periodic_text(n - 1 - half, root);
  return t;
}

inline std::string generate(std::string_view name, std::int64_t n, std::uint64_t seed = 1)
{
  if (n < 1)
    throw std::invalid_argument("text length must be positive");
  if (name == "random")
    return random_text(n, 4, seed);
  if (name == "periodic")
    return periodic_text(n);
  if (name == "fibonacci")
    return fibonacci_text(n);
  if (name == "two-block")
    return two_block_text(n);
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

} // namespace revpat::gen
