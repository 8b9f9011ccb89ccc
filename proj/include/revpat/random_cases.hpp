#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matcher.hpp"
#include "oracle.hpp"

namespace revpat {

struct Case {
  std::string text;
  Pattern pattern;
  std::int64_t min_sub_len = 1;
};

struct CaseLimits {
  int max_n = 300;
  int max_sigma = 4;
  int max_segments = 6;
  int max_segment_len = 5;
};

// Mixes plain random texts, concatenated periodic blocks, and texts with a
// planted instance so every matcher path sees traffic.
inline Case random_case(std::mt19937_64& rng, const CaseLimits& lim = {})
{
  auto below = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
  Case c;
  const int sigma = 1 + below(lim.max_sigma);
  const int n = 1 + below(lim.max_n);
  const int r = 1 + below(lim.max_segments);
  auto letter = [&](int s) { return static_cast<char>('a' + below(s)); };
  for (int z = 0; z < r; ++z) {
    std::string s;
    int l = below(lim.max_segment_len + 1);
    for (int k = 0; k < l; ++k)
      s += letter(sigma);
    c.pattern.segments.push_back(s);
    if (z + 1 < r)
      c.pattern.directions.push_back(below(2) ? Direction::Forward : Direction::Reversed);
  }
  c.min_sub_len = below(2);
  std::string root;
  for (int k = 1 + below(4); k > 0; --k)
    root += letter(sigma);
  switch (below(3)) {
  case 0:
    for (int k = 0; k < n; ++k)
      c.text += letter(sigma);
    break;
  case 1:
    for (int b = 1 + below(3); b > 0 && static_cast<int>(c.text.size()) < n; --b) {
      for (int k = below(n / static_cast<int>(root.size()) + 1); k >= 0; --k)
        c.text += root;
      if (below(2))
        c.text += letter(sigma + 1);
    }
    break;
  default: {
    std::string w;
    for (int wl = 1 + below(12); static_cast<int>(w.size()) < wl;)
      w += below(3) ? root : std::string(1, letter(sigma));
    auto noise = [&] {
      std::string s;
      for (int k = below(10); k > 0; --k)
        s += below(2) ? root[static_cast<std::size_t>(k) % root.size()] : letter(sigma);
      return s;
    };
    c.text = noise();
    for (int z = 0; z < r; ++z) {
      c.text += c.pattern.segments[static_cast<std::size_t>(z)];
      if (z + 1 < r)
        c.text += c.pattern.directions[static_cast<std::size_t>(z)] == Direction::Forward
                    ? w
                    : std::string(w.rbegin(), w.rend());
    }
    c.text += noise();
  }
  }
  if (static_cast<int>(c.text.size()) > lim.max_n)
    c.text.resize(static_cast<std::size_t>(lim.max_n));
  if (c.text.empty())
    c.text = "a";
  return c;
}

using Engine = std::function<std::vector<Instance>(const Case&)>;

inline std::vector<Instance> fast_engine(const Case& c)
{
  return enumerate(find_all(c.text, c.pattern, {c.min_sub_len, 1}));
}

inline std::vector<Instance> oracle_engine(const Case& c) { return naive_find(c.text, c.pattern, c.min_sub_len); }

// Greedily drops text characters while the engines still disagree.
inline Case shrink_case(Case c, const Engine& engine)
{
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < c.text.size() && c.text.size() > 1; ++k) {
      Case d = c;
      d.text.erase(k, 1);
      if (engine(d) != oracle_engine(d)) {
        c = std::move(d);
        changed = true;
        --k;
      }
    }
  }
  return c;
}

// First disagreement between engine and oracle over `cases` random cases,
// shrunk; nullopt when none.
inline std::optional<Case> differential(std::int64_t cases, std::uint64_t seed, const Engine& engine = fast_engine,
                                        const CaseLimits& lim = {})
{
  std::mt19937_64 rng(seed);
  for (std::int64_t k = 0; k < cases; ++k) {
    Case c = random_case(rng, lim);
    if (engine(c) != oracle_engine(c))
      return shrink_case(std::move(c), engine);
  }
  return std::nullopt;
}

} // namespace revpat
