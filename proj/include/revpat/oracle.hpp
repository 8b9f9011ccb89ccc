#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pattern.hpp"

namespace revpat {

// Quadratic reference matcher: tries every start and substitution length
// with plain byte comparisons. Patterns without variables report sub_len 0.
inline std::vector<Instance> naive_find(std::string_view t, const Pattern& p, std::int64_t min_sub_len = 1)
{
  std::vector<Instance> out;
  const std::int64_t n = static_cast<std::int64_t>(t.size());
  const std::int64_t V = static_cast<std::int64_t>(p.variables());
  const std::int64_t fixed = static_cast<std::int64_t>(p.terminal_length());
  auto byte = [&](std::int64_t pos) { return t[static_cast<std::size_t>(pos - 1)]; };
  for (std::int64_t i = 1; i <= n; ++i) {
    std::int64_t lo = V == 0 ? 0 : std::max<std::int64_t>(min_sub_len, 0);
    std::int64_t hi = V == 0 ? 0 : (n - i + 1 - fixed) / V;
    for (std::int64_t beta = lo; beta <= hi; ++beta) {
      if (i + fixed + V * beta - 1 > n)
        break;
      std::int64_t pos = i, w = -1;
      bool ok = true;
      for (std::size_t z = 0; ok && z < p.segments.size(); ++z) {
        for (char ch : p.segments[z])
          if (byte(pos++) != ch) {
            ok = false;
            break;
          }
        if (!ok || z == p.variables())
          break;
        if (w < 0) {
          w = pos;
        } else {
          bool fwd = p.directions[z] == p.directions[0];
          for (std::int64_t k = 0; k < beta; ++k)
            if (byte(pos + k) != byte(fwd ? w + k : w + beta - 1 - k)) {
              ok = false;
              break;
            }
        }
        pos += beta;
      }
      if (ok)
        out.push_back({i, beta});
    }
  }
  return out;
}

} // namespace revpat
