#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"

namespace revpat {

namespace detail {

inline std::int64_t mod(std::int64_t a, std::int64_t d)
{
  std::int64_t m = a % d;
  return m < 0 ? m + d : m;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

// Smallest x >= lo with x = res (mod d).
inline std::int64_t align_up(std::int64_t lo, std::int64_t res, std::int64_t d) { return lo + mod(res - lo, d); }
// Largest x <= hi with x = res (mod d).
inline std::int64_t align_down(std::int64_t hi, std::int64_t res, std::int64_t d) { return hi - mod(hi - res, d); }

// Solutions x in [0, d) of 2x = k (mod d).
inline std::vector<std::int64_t> halves(std::int64_t k, std::int64_t d)
{
  std::vector<std::int64_t> out;
  k = mod(k, d);
  if (d % 2) {
    out.push_back(mod((k % 2 ? k + d : k) / 2, d));
  } else if (k % 2 == 0) {
    out.push_back(k / 2);
    out.push_back(k / 2 + d / 2);
  }
  return out;
}

} // namespace detail

// Positions where the period d of a run ending at j can break for a segment
// s following a periodic block.
inline std::vector<std::int64_t> break_candidates(const Run& run, std::int64_t s_len, std::int64_t pref_len)
{
  std::int64_t j = run.end, d = run.d;
  std::vector<std::int64_t> out{j - pref_len + 1};
  for (std::int64_t h = j + 2 - d; h <= j + 1; ++h)
    out.push_back(h);
  for (std::int64_t h = j - s_len - d + 1; h <= j - s_len; ++h)
    out.push_back(h);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Segment classes by the directions of the neighbouring variables:
// Equal (x_{z-1} = x_z), ForwardReversed (x then xbar), ReversedForward.
enum class SepClass { Equal, ForwardReversed, ReversedForward };

inline std::vector<std::int64_t> class_members(const Pattern& p, SepClass cls)
{
  std::vector<std::int64_t> out;
  for (std::int64_t z = 2; z < static_cast<std::int64_t>(p.r()); ++z) {
    Direction a = p.directions[z - 2], b = p.directions[z - 1];
    SepClass c = a == b ? SepClass::Equal : (a == Direction::Forward ? SepClass::ForwardReversed : SepClass::ReversedForward);
    if (c == cls)
      out.push_back(z);
  }
  return out;
}

namespace detail {

inline bool has_period(const std::string& s, std::int64_t d)
{
  for (std::size_t k = static_cast<std::size_t>(d); k < s.size(); ++k)
    if (s[k] != s[k - static_cast<std::size_t>(d)])
      return false;
  return true;
}

} // namespace detail

// Necessary condition for w s_{z1} w and w s_{z2} w (or their mirrored
// forms) to both have period d.
inline bool propwsw(const Pattern& p, std::int64_t z1, std::int64_t z2, std::int64_t d)
{
  const std::string& a = p.segments[static_cast<std::size_t>(z1 - 1)];
  std::string b = p.segments[static_cast<std::size_t>(z2 - 1)];
  if (detail::mod(static_cast<std::int64_t>(a.size()) - static_cast<std::int64_t>(b.size()), d) != 0)
    return false;
  if (!detail::has_period(a, d) || !detail::has_period(b, d))
    return false;
  if (p.directions[z1 - 1] != p.directions[z2 - 1])
    std::reverse(b.begin(), b.end());
  std::size_t m = std::min(a.size(), b.size());
  return a.compare(0, m, b, 0, m) == 0;
}

namespace detail {

inline std::int64_t seg_len(const Pattern& p, std::int64_t z)
{
  return static_cast<std::int64_t>(p.segments[static_cast<std::size_t>(z - 1)].size());
}

// z satisfies: every pair before z in members satisfies propwsw, and every
// member before z either fails propwsw with z or is shorter than d while s_z
// is not.
inline bool prefix_condition(const Pattern& p, const std::vector<std::int64_t>& before, std::int64_t z, std::int64_t d)
{
  for (auto z1 : before)
    for (auto z2 : before)
      if (!propwsw(p, z1, z2, d))
        return false;
  for (auto z1 : before)
    if (propwsw(p, z1, z, d) && !(seg_len(p, z1) < d && d <= seg_len(p, z)))
      return false;
  return true;
}

} // namespace detail

// Members of Z0 (ascending, one class) that can open a period break.
inline std::vector<std::int64_t> separation_candidates(const Pattern& p, const std::vector<std::int64_t>& Z0,
                                                       std::int64_t d)
{
  std::vector<std::int64_t> out;
  if (Z0.empty())
    return out;
  std::size_t k2 = Z0.size(); // index of z''; Z0.size() stands for +infinity
  for (std::size_t k = 0; k < Z0.size() && k2 == Z0.size(); ++k)
    for (std::size_t l = 0; l <= k; ++l)
      if (!propwsw(p, Z0[l], Z0[k], d)) {
        k2 = k;
        break;
      }
  std::size_t k3 = k2;
  for (std::size_t k = 0; k < k2; ++k)
    if (detail::seg_len(p, Z0[k]) >= d) {
      k3 = k;
      break;
    }
  std::vector<std::size_t> cand{0};
  if (k2 < Z0.size())
    cand.push_back(k2);
  if (k3 < Z0.size())
    cand.push_back(k3);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (auto k : cand) {
    std::vector<std::int64_t> before(Z0.begin(), Z0.begin() + static_cast<std::ptrdiff_t>(k));
    if (detail::prefix_condition(p, before, Z0[k], d))
      out.push_back(Z0[k]);
  }
  return out;
}

// Whether (z, z2) is a separation within the given class.
inline bool is_separation(const Pattern& p, const std::vector<std::int64_t>& members, std::int64_t z, std::int64_t z2,
                          std::int64_t d)
{
  if (z > z2)
    return false;
  std::vector<std::int64_t> inner;
  for (auto m : members)
    if (m < z || (m > z && m < z2))
      inner.push_back(m);
  for (auto z1 : inner)
    for (auto z3 : inner)
      if (!propwsw(p, z1, z3, d))
        return false;
  for (auto z1 : inner)
    for (auto zz : {z, z2})
      if (propwsw(p, z1, zz, d) && !(detail::seg_len(p, z1) < d && d <= detail::seg_len(p, zz)))
        return false;
  return true;
}

struct Separations {
  std::vector<std::pair<std::int64_t, std::int64_t>> equal, forward_reversed, reversed_forward;
};

inline std::vector<std::pair<std::int64_t, std::int64_t>> class_separations(const Pattern& p, SepClass cls,
                                                                           std::int64_t d)
{
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  auto members = class_members(p, cls);
  for (auto z : separation_candidates(p, members, d)) {
    out.emplace_back(z, z);
    std::vector<std::int64_t> rest;
    for (auto m : members)
      if (m != z)
        rest.push_back(m);
    for (auto z2 : separation_candidates(p, rest, d))
      if (z2 > z)
        out.emplace_back(z, z2);
  }
  std::erase_if(out, [&](const auto& s) { return !is_separation(p, members, s.first, s.second, d); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Separations separations(const Pattern& p, std::int64_t d)
{
  return {class_separations(p, SepClass::Equal, d), class_separations(p, SepClass::ForwardReversed, d),
          class_separations(p, SepClass::ReversedForward, d)};
}

// Residues of |w| mod d forced on an instance whose substitutions all lie in
// one run of period d. Empty when the pattern constrains nothing by itself.
inline std::vector<std::int64_t> w_mod_d(const Pattern& p, std::int64_t d)
{
  if (d < 1)
    throw std::invalid_argument("period must be positive");
  auto eq = class_members(p, SepClass::Equal);
  if (!eq.empty())
    return {detail::mod(-detail::seg_len(p, eq.front()), d)};
  auto fr = class_members(p, SepClass::ForwardReversed);
  auto rf = class_members(p, SepClass::ReversedForward);
  if (fr.empty() || rf.empty())
    return {};
  return detail::halves(-detail::seg_len(p, fr.front()) - detail::seg_len(p, rf.front()), d);
}

// Bits for h in [b1..b2]: an instance of an all-forward pattern with
// substitution length eta starts at h - |s_1..s_{r-1}| - (r-1)eta, no
// earlier than the run start, with s_r at h.
inline BitArray d_subarray(const MatchContext& c, const Run& run, std::int64_t b1, std::int64_t b2, std::int64_t eta)
{
  if (b2 - b1 + 1 != run.d)
    throw std::invalid_argument("segment width must equal the period");
  for (std::int64_t z = 1; z < c.r; ++z)
    if (!c.fwd[z])
      throw std::invalid_argument("d_subarray needs equal directions");
  BitArray out(static_cast<std::size_t>(run.d));
  for (std::int64_t z = 2; z < c.r; ++z)
    if (detail::mod(eta + c.len[z], run.d) != 0)
      return out;
  std::int64_t shift = c.pre[c.r - 1] + (c.r - 1) * eta; // h - i
  for (std::int64_t base = b1; base <= b2; base += 64) {
    std::int64_t width = std::min<std::int64_t>(64, b2 - base + 1);
    std::uint64_t acc = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    // i >= run.start  <=>  h >= run.start + shift
    std::int64_t first_ok = run.start + shift - base;
    if (first_ok >= 64)
      acc = 0;
    else if (first_ok > 0)
      acc &= ~std::uint64_t{0} << first_ok;
    for (std::int64_t z = 1; z <= c.r && acc; ++z) {
      std::int64_t pos = base - shift + c.pre[z - 1] + (z - 1) * eta;
      acc &= c.D[z].bits.word_at(pos - c.D[z].base);
    }
    while (acc) {
      std::int64_t k = std::countr_zero(acc);
      acc &= acc - 1;
      out.set(static_cast<std::size_t>(base - b1 + k + 1));
    }
  }
  return out;
}

// Limits for the run sweeps. h is the start of s_r; e1 is the end of the
// last substitution inside the first run.
struct SweepLimits {
  std::int64_t beta_min = 2;
  std::optional<std::int64_t> residue;                      // |w| mod d
  std::int64_t h_lo = INT64_MIN, h_hi = INT64_MAX;          // in-run
  std::optional<std::int64_t> split;                        // two-run: number of substitutions in the first run
  std::optional<std::size_t> second_run;                    // two-run
  std::int64_t e1_lo = INT64_MIN, e1_hi = INT64_MAX;        // two-run
};

namespace detail {

// Substitutions and inner segments of the instance with w_1 at a, ignoring
// s_1 and s_r.
inline bool inner_ok(const MatchContext& c, std::int64_t a, std::int64_t beta)
{
  std::int64_t l1 = c.len[1];
  for (std::int64_t z = 2; z < c.r; ++z) {
    std::int64_t spos = a + (z - 1) * beta + c.pre[z - 1] - l1;
    if (!c.seg_at(z, spos))
      return false;
    std::int64_t wpos = spos + c.len[z];
    if (c.fwd[z] ? !c.idx.equal(a, wpos, beta) : !c.idx.equal_reversed(a, wpos, beta))
      return false;
  }
  return true;
}

// Modulus-d centre C with t[x] = t[C-x] throughout the run, if the run is
// mirror-symmetric.
inline std::optional<std::int64_t> run_reflection(const MatchContext& c, std::size_t rid)
{
  const Run& R = c.runs.run(rid);
  std::int64_t l = c.runs.lyndon_root(rid);
  std::int64_t lr = c.runs.reversed_lyndon_root(rid);
  if (c.idx.equal_reversed(l, lr - R.d + 1, R.d))
    return mod(l + lr, R.d);
  return std::nullopt;
}

} // namespace detail

// Instances whose substitutions all lie in the run, as right-anchored
// families (start_step -(r-1)d, len_step d), for |w| >= lim.beta_min.
inline void in_run_families(const MatchContext& c, std::size_t rid, const SweepLimits& lim, Collector& out)
{
  const Run& R = c.runs.run(rid);
  const std::int64_t d = R.d, V = c.r - 1, l1 = c.len[1];
  if (V < 2)
    return;
  const std::int64_t K = c.pre[V] - l1;
  const std::int64_t beta_min = std::max({lim.beta_min, c.min_sub_len, std::int64_t{1}});
  if (R.length() < V * beta_min + K)
    return;
  std::vector<std::int64_t> fz, rz;
  for (std::int64_t z = 2; z <= V; ++z)
    (c.fwd[z] ? fz : rz).push_back(z);
  std::optional<std::int64_t> C;
  if (!rz.empty()) {
    C = detail::run_reflection(c, rid);
    if (!C)
      return;
  }
  for (std::int64_t rho = 0; rho < d; ++rho) {
    if (lim.residue && *lim.residue != rho)
      continue;
    bool ok = true;
    for (auto z : fz)
      ok = ok && detail::mod((z - 1) * rho + c.pre[z] - l1, d) == 0;
    if (!ok)
      continue;
    std::vector<std::int64_t> phis;
    if (rz.empty()) {
      for (std::int64_t f = 0; f < d; ++f)
        phis.push_back(f);
    } else {
      // w_z = reverse(w_1): 2a + z*beta + (pre[z] - l1) - 1 = C (mod d)
      std::int64_t z = rz.front();
      for (auto f : detail::halves(*C + 1 - z * rho - (c.pre[z] - l1), d)) {
        bool good = true;
        for (auto z2 : rz)
          good = good && detail::mod(2 * f + z2 * rho + c.pre[z2] - l1 - 1 - *C, d) == 0;
        if (good)
          phis.push_back(f);
      }
    }
    const std::int64_t beta0 = detail::align_up(beta_min, rho, d);
    for (auto phi : phis) {
      std::int64_t a0 = detail::align_up(R.start, phi, d);
      std::int64_t e_min = a0 + V * beta0 + K - 1;
      if (e_min > R.end || !detail::inner_ok(c, a0, beta0))
        continue;
      bool s1_inner = true;
      if (l1 > 0) {
        std::int64_t ai = detail::align_up(R.start + l1, phi, d);
        s1_inner = ai <= R.end && c.seg_at(1, ai - l1);
      }
      std::int64_t e_first = std::max(e_min, lim.h_lo == INT64_MIN ? e_min : lim.h_lo - 1);
      e_first = detail::align_up(e_first, e_min, d);
      std::int64_t e_last = std::min(R.end, lim.h_hi == INT64_MAX ? R.end : lim.h_hi - 1);
      for (std::int64_t e = e_first; e <= e_last; e += d) {
        if (!c.seg_at(c.r, e + 1))
          continue;
        auto a_of = [&](std::int64_t beta) { return e + 1 - K - V * beta; };
        std::int64_t bmax = detail::align_down(detail::floor_div(e + 1 - K - R.start, V), rho, d);
        if (bmax < beta0)
          continue;
        std::int64_t bint = detail::align_down(detail::floor_div(e + 1 - K - R.start - l1, V), rho, d);
        bint = std::min(bint, bmax);
        if (s1_inner && bint >= beta0)
          out.add_family({a_of(beta0) - l1, -V * d, beta0, d, (bint - beta0) / d + 1});
        for (std::int64_t b = std::max(beta0, bint + d); b <= bmax; b += d)
          if (c.seg_at(1, a_of(b) - l1))
            out.add(a_of(b) - l1, b);
      }
    }
  }
}

namespace detail {

// Second run for a break right after the substitution ending at e1: the run
// of period d holding the 2d characters after s_{z1+1}, distinct from rid.
struct Junction {
  std::int64_t B;
  std::size_t rid2;
};

inline std::optional<Junction> junction(const MatchContext& c, std::size_t rid, std::int64_t z1, std::int64_t e1)
{
  const Run& R = c.runs.run(rid);
  if (!c.seg_at(z1 + 1, e1 + 1))
    return std::nullopt;
  std::int64_t B = e1 + 1 + c.len[z1 + 1];
  if (B < 1 || B + 2 * R.d - 1 > c.n)
    return std::nullopt;
  auto sr = c.runs.substring_run(B, B + 2 * R.d - 1);
  if (!sr || sr->first != R.d || sr->second == rid)
    return std::nullopt;
  return Junction{B, sr->second};
}

} // namespace detail

// Instances with w_1..w_{z1} in the run and w_{z1+1}..w_{r-1} in one other
// run of the same period, as families (start_step -z1*d, len_step d).
inline void two_run_families(const MatchContext& c, std::size_t rid, const SweepLimits& lim, Collector& out)
{
  const Run& R1 = c.runs.run(rid);
  const std::int64_t d = R1.d, V = c.r - 1, l1 = c.len[1], lr = c.len[c.r];
  if (V < 2)
    return;
  const std::int64_t beta_min = std::max({lim.beta_min, c.min_sub_len, std::int64_t{1}});
  for (std::int64_t z1 = 1; z1 < V; ++z1) {
    if (lim.split && *lim.split != z1)
      continue;
    const std::int64_t K1 = c.pre[z1] - l1;
    const std::int64_t K2 = c.pre[V] - c.pre[z1 + 1]; // from w_{z1+1} start to w_V start, less (V-z1-1)beta
    std::int64_t e_lo = std::max({R1.start - 1 + K1 + z1 * beta_min, R1.end - c.len[z1 + 1] - d + 1, lim.e1_lo});
    std::int64_t e_hi = std::min(R1.end, lim.e1_hi);
    for (std::int64_t e1 = e_lo; e1 <= e_hi; ++e1) {
      auto j = detail::junction(c, rid, z1, e1);
      if (!j || (lim.second_run && *lim.second_run != j->rid2))
        continue;
      const Run& R2 = c.runs.run(j->rid2);
      const std::int64_t B = j->B;
      std::int64_t bmax = std::min(detail::floor_div(e1 + 1 - K1 - R1.start, z1),
                                   detail::floor_div(R2.end + 1 - B - K2, V - z1));
      if (bmax < beta_min)
        continue;
      std::int64_t bs1 = detail::floor_div(e1 + 1 - K1 - R1.start - l1, z1);
      std::int64_t bsr = detail::floor_div(R2.end + 1 - B - K2 - lr, V - z1);
      std::optional<std::int64_t> forced;
      if (c.fwd[z1 + 1] == c.fwd[z1]) {
        std::size_t r2 = j->rid2;
        std::int64_t l1r = c.runs.lyndon_root(rid), l2r = c.runs.lyndon_root(r2);
        if (!c.idx.equal(l1r, l2r, d))
          continue;
        // w_{z1} starts at e1 - beta + 1 on the phase of B
        forced = detail::mod(e1 + 1 - l1r - (B - l2r), d);
      } else if (!c.idx.equal_reversed(B, e1 - d + 1, d)) {
        continue;
      }
      auto a_of = [&](std::int64_t beta) { return e1 + 1 - K1 - z1 * beta; };
      auto end_w = [&](std::int64_t beta) { return B + (V - z1) * beta + K2 - 1; };
      if (forced && lim.residue && *forced != *lim.residue)
        continue;
      if (!forced)
        forced = lim.residue;
      std::int64_t first = forced ? detail::align_up(beta_min, *forced, d) : beta_min;
      std::int64_t top = forced ? first : std::min(beta_min + d - 1, bmax);
      for (std::int64_t beta0 = first; beta0 <= std::min(top, bmax); ++beta0) {
        std::int64_t rho = detail::mod(beta0, d);
        if (!detail::inner_ok(c, a_of(beta0), beta0))
          continue;
        std::int64_t bhi = detail::align_down(bmax, rho, d);
        std::int64_t bint = std::min(detail::align_down(std::min(bs1, bsr), rho, d), bhi);
        if (bint >= beta0 && c.seg_at(1, a_of(beta0) - l1) && c.seg_at(c.r, end_w(beta0) + 1))
          out.add_family({a_of(beta0) - l1, -z1 * d, beta0, d, (bint - beta0) / d + 1});
        for (std::int64_t b = std::max(beta0, bint + d); b <= bhi; b += d)
          if (c.seg_at(1, a_of(b) - l1) && c.seg_at(c.r, end_w(b) + 1))
            out.add(a_of(b) - l1, b);
      }
    }
  }
}

// Instances with w_1 in the run whose substitutions span three or more runs
// of its period, each found from its first two breaks. With v given, only
// instances whose w_1 contains t[v.first..v.second]; with breaks given, only
// those whose first two breaks follow w_{breaks.first} and w_{breaks.second}.
inline void multi_run_instances(const MatchContext& c, std::size_t rid, std::int64_t beta_min, Collector& out,
                                std::optional<std::pair<std::int64_t, std::int64_t>> v = std::nullopt,
                                std::optional<std::pair<std::int64_t, std::int64_t>> breaks = std::nullopt)
{
  const Run& R1 = c.runs.run(rid);
  const std::int64_t d = R1.d, V = c.r - 1, l1 = c.len[1];
  beta_min = std::max({beta_min, c.min_sub_len, std::int64_t{1}});
  for (std::int64_t z1 = 1; z1 + 1 < V; ++z1) {
    if (breaks && breaks->first != z1)
      continue;
    const std::int64_t K1 = c.pre[z1] - l1;
    std::int64_t e_lo = std::max(R1.start - 1 + K1 + z1 * beta_min, R1.end - c.len[z1 + 1] - d + 1);
    for (std::int64_t e1 = e_lo; e1 <= R1.end; ++e1) {
      auto j = detail::junction(c, rid, z1, e1);
      if (!j)
        continue;
      const Run& R2 = c.runs.run(j->rid2);
      // Same as in the two-run sweep: an equal-direction junction fixes
      // |w| mod d, a mirrored one must reverse across the break.
      std::optional<std::int64_t> rho;
      if (c.fwd[z1 + 1] == c.fwd[z1]) {
        std::int64_t l1r = c.runs.lyndon_root(rid), l2r = c.runs.lyndon_root(j->rid2);
        if (!c.idx.equal(l1r, l2r, d))
          continue;
        rho = detail::mod(e1 + 1 - l1r - (j->B - l2r), d);
      } else if (!c.idx.equal_reversed(j->B, e1 - d + 1, d)) {
        continue;
      }
      for (std::int64_t z2 = z1 + 1; z2 < V; ++z2) {
        if (breaks && breaks->second != z2)
          continue;
        std::int64_t lo = std::max(R2.end - c.len[z2 + 1] - d + 1,
                                   j->B + (z2 - z1) * beta_min + c.pre[z2] - c.pre[z1 + 1] - 1);
        std::int64_t step = 1;
        if (rho) {
          lo = detail::align_up(lo, e1 + c.pre[z2] - c.pre[z1] + (z2 - z1) * *rho, d);
          step = d;
        }
        for (std::int64_t e2 = lo; e2 <= R2.end; e2 += step) {
          if (!c.seg_at(z2 + 1, e2 + 1))
            continue;
          std::int64_t num = e2 - e1 - (c.pre[z2] - c.pre[z1]);
          if (num % (z2 - z1) != 0)
            continue;
          std::int64_t beta = num / (z2 - z1);
          std::int64_t a = e1 + 1 - K1 - z1 * beta;
          if (beta < beta_min || a < R1.start)
            continue;
          if (v && (a > v->first || a + beta - 1 < v->second))
            continue;
          if (c.verify(a - l1, beta))
            out.add(a - l1, beta);
        }
      }
    }
  }
}

// Every instance whose substitution has a period d with 2d <= |w|, found
// from the run holding w_1.
inline void periodic_run_sweep(const MatchContext& c, std::size_t rid, Collector& out)
{
  const Run& R = c.runs.run(rid);
  SweepLimits lim;
  lim.beta_min = std::max<std::int64_t>(2, 2 * R.d);
  if (R.length() < lim.beta_min)
    return;
  in_run_families(c, rid, lim, out);
  two_run_families(c, rid, lim, out);
  multi_run_instances(c, rid, lim.beta_min, out);
}

namespace detail {

inline std::vector<InstanceFamily> flatten(Collector&& col)
{
  std::vector<InstanceFamily> out = std::move(col.families);
  for (auto& s : col.singles)
    out.push_back({s.start, 0, s.sub_len, 0, 1});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace detail

// In-run instances with |w| = delta (mod d), |w| >= 3d and s_r starting in
// [b1..b2], a window of width d.
inline std::vector<InstanceFamily> in_run_segment(const MatchContext& c, std::size_t rid, std::int64_t delta,
                                                  std::int64_t b1, std::int64_t b2)
{
  const Run& R = c.runs.run(rid);
  if (b2 - b1 + 1 != R.d)
    throw std::invalid_argument("segment width must equal the period");
  SweepLimits lim;
  lim.beta_min = 3 * R.d;
  lim.residue = detail::mod(delta, R.d);
  lim.h_lo = b1;
  lim.h_hi = b2;
  Collector col;
  in_run_families(c, rid, lim, col);
  return detail::flatten(std::move(col));
}

// In-run instances of s_1 xbar s_2 x s_3 (either orientation) with s_3
// starting in [b1..b2].
inline std::vector<InstanceFamily> in_run_special_xrev(const MatchContext& c, std::size_t rid, std::int64_t b1,
                                                       std::int64_t b2)
{
  if (c.r != 3 || c.fwd[2])
    throw std::invalid_argument("pattern must have the form s1 xbar s2 x s3");
  const Run& R = c.runs.run(rid);
  if (b2 - b1 + 1 != R.d)
    throw std::invalid_argument("segment width must equal the period");
  SweepLimits lim;
  lim.beta_min = std::max<std::int64_t>(2, 2 * R.d);
  lim.h_lo = b1;
  lim.h_hi = b2;
  Collector col;
  in_run_families(c, rid, lim, col);
  return detail::flatten(std::move(col));
}

// Instances with w_1..w_z in run1, the remaining substitutions in run2,
// |w| = delta (mod d), |w| >= 3d, and w_z ending in [b1..b2].
inline std::vector<InstanceFamily> two_run_segment(const MatchContext& c, std::size_t run1, std::size_t run2,
                                                   std::int64_t z, std::int64_t delta, std::int64_t b1,
                                                   std::int64_t b2)
{
  const Run& R = c.runs.run(run1);
  if (b2 - b1 + 1 != R.d)
    throw std::invalid_argument("segment width must equal the period");
  SweepLimits lim;
  lim.beta_min = 3 * R.d;
  lim.residue = detail::mod(delta, R.d);
  lim.split = z;
  lim.second_run = run2;
  lim.e1_lo = b1;
  lim.e1_hi = b2;
  Collector col;
  two_run_families(c, run1, lim, col);
  return detail::flatten(std::move(col));
}

// Instances whose w_1 contains the periodic v = t[h1..h2] (minimal period d,
// 2d <= |v|) and whose substitutions break period d first between w_{z-1}
// and w_z and next between w_{z2-1} and w_{z2}.
inline std::vector<InstanceFamily> separate_lemma_instances(const MatchContext& c, std::int64_t h1, std::int64_t h2,
                                                            std::int64_t d, std::int64_t z, std::int64_t z2)
{
  auto sr = c.runs.substring_run(h1, h2);
  if (!sr || sr->first != d)
    throw std::invalid_argument("anchor is not periodic with the given period");
  if (!(1 < z && z < z2 && z2 < c.r))
    throw std::invalid_argument("break indices out of order");
  Collector col;
  multi_run_instances(c, sr->second, std::max<std::int64_t>(2, 2 * d), col, std::make_pair(h1, h2),
                      std::make_pair(z - 1, z2 - 1));
  return detail::flatten(std::move(col));
}

} // namespace revpat
