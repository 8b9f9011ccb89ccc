#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pattern.hpp"
#include "runs.hpp"
#include "text_index.hpp"

namespace revpat {

// Arithmetic progression of instances:
// (first_start + k*start_step, first_sublen + k*len_step), k in [0, count).
struct InstanceFamily {
  std::int64_t first_start = 0;
  std::int64_t start_step = 0;
  std::int64_t first_sublen = 0;
  std::int64_t len_step = 0;
  std::int64_t count = 1;

  Instance at(std::int64_t k) const { return {first_start + k * start_step, first_sublen + k * len_step}; }
  friend bool operator==(const InstanceFamily&, const InstanceFamily&) = default;
  friend auto operator<=>(const InstanceFamily&, const InstanceFamily&) = default;
};

struct Collector {
  std::vector<Instance> singles;
  std::vector<InstanceFamily> families;

  void add(std::int64_t start, std::int64_t sub_len) { singles.push_back({start, sub_len}); }
  void add_family(const InstanceFamily& f)
  {
    if (f.count == 1)
      singles.push_back(f.at(0));
    else if (f.count > 1)
      families.push_back(f);
  }
  void merge(Collector&& o)
  {
    singles.insert(singles.end(), o.singles.begin(), o.singles.end());
    families.insert(families.end(), o.families.begin(), o.families.end());
  }
};

// Everything the matchers share for one (text, pattern) query. The pattern
// is stored normalized; segments and variables are indexed from 1.
class MatchContext {
public:
  MatchContext(const TextIndex& idx, const RunsIndex& runs, const Pattern& pattern, std::int64_t min_sub_len)
    : idx(idx), runs(runs), p(normalize(pattern)), n(idx.size()), min_sub_len(min_sub_len)
  {
    r = static_cast<std::int64_t>(p.r());
    len.assign(static_cast<std::size_t>(r + 1), 0);
    pre.assign(static_cast<std::size_t>(r + 1), 0);
    D.resize(static_cast<std::size_t>(r + 1));
    for (std::int64_t z = 1; z <= r; ++z) {
      len[z] = static_cast<std::int64_t>(p.segments[z - 1].size());
      pre[z] = pre[z - 1] + len[z];
      D[z] = idx.occurrences(p.segments[z - 1]);
    }
    fwd.assign(static_cast<std::size_t>(r), true);
    for (std::int64_t z = 1; z < r; ++z)
      fwd[z] = p.directions[z - 1] == Direction::Forward;
  }

  const TextIndex& idx;
  const RunsIndex& runs;
  Pattern p;
  std::int64_t n;
  std::int64_t min_sub_len;
  std::int64_t r = 0;
  std::vector<std::int64_t> len; // |s_z|
  std::vector<std::int64_t> pre; // |s_1..s_z|
  std::vector<OccBits> D;        // occurrences of s_z
  std::vector<bool> fwd;         // x_z is forward (fwd[1] is always true)

  std::int64_t image_len(std::int64_t beta) const { return pre[r] + (r - 1) * beta; }
  // start of s_z / w_z in the instance at i with substitution length beta
  std::int64_t seg_pos(std::int64_t i, std::int64_t z, std::int64_t beta) const { return i + pre[z - 1] + (z - 1) * beta; }
  std::int64_t var_pos(std::int64_t i, std::int64_t z, std::int64_t beta) const { return i + pre[z] + (z - 1) * beta; }
  bool seg_at(std::int64_t z, std::int64_t pos) const { return D[z].contains(pos); }

  bool verify(std::int64_t i, std::int64_t beta) const
  {
    if (i < 1 || i > n || beta < 0 || i + image_len(beta) - 1 > n)
      return false;
    for (std::int64_t z = 1; z <= r; ++z)
      if (!seg_at(z, seg_pos(i, z, beta)))
        return false;
    std::int64_t a = var_pos(i, 1, beta);
    for (std::int64_t z = 2; z < r; ++z) {
      std::int64_t b = var_pos(i, z, beta);
      if (fwd[z] ? !idx.equal(a, b, beta) : !idx.equal_reversed(a, b, beta))
        return false;
    }
    return true;
  }
};

} // namespace revpat
