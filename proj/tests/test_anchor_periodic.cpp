#include <gtest/gtest.h>

#include <revpat/anchor_periodic.hpp>
#include <revpat/oracle.hpp>

#include <random>
#include <set>

using namespace revpat;

namespace {

struct Fixture {
  TextIndex idx;
  RunsIndex runs;
  MatchContext c;
  Fixture(const std::string& t, const Pattern& p, std::int64_t msl = 1)
    : idx(t), runs(idx), c(idx, runs, p, msl)
  {
  }
};

std::string random_text(std::mt19937_64& rng, std::size_t n, int sigma)
{
  std::string t;
  for (std::size_t i = 0; i < n; ++i)
    t += static_cast<char>('a' + rng() % sigma);
  return t;
}

// Blocks of one periodic root (rotated at random) split by single bytes.
std::string block_text(std::mt19937_64& rng, std::string& root)
{
  root = random_text(rng, 1 + rng() % 3, 2);
  std::string t;
  int blocks = 1 + static_cast<int>(rng() % 4);
  for (int b = 0; b < blocks; ++b) {
    std::size_t rot = rng() % root.size();
    std::string rr = root.substr(rot) + root.substr(0, rot);
    if (rng() % 3 == 0)
      rr = std::string(rr.rbegin(), rr.rend());
    for (int k = 2 + static_cast<int>(rng() % 9); k > 0; --k)
      t += rr;
    t += rng() % 4 ? root.substr(0, rng() % root.size()) : std::string();
    if (b + 1 < blocks)
      t += static_cast<char>('c' + rng() % 2);
  }
  return t;
}

Pattern block_pattern(std::mt19937_64& rng, const std::string& root, int r)
{
  std::string rr = root + root;
  Pattern p;
  for (int z = 0; z < r; ++z) {
    std::string s;
    switch (rng() % 4) {
    case 0: break;
    case 1: s = rr.substr(rng() % root.size(), rng() % (root.size() + 1)); break;
    case 2: s = std::string(1, static_cast<char>('c' + rng() % 2)); break;
    default: s = random_text(rng, 1 + rng() % 2, 2);
    }
    p.segments.push_back(s);
    if (z + 1 < r)
      p.directions.push_back(rng() % 3 ? Direction::Forward : Direction::Reversed);
  }
  return p;
}

std::set<Instance> expand(const std::vector<InstanceFamily>& fams)
{
  std::set<Instance> out;
  for (auto& f : fams)
    for (std::int64_t k = 0; k < f.count; ++k)
      EXPECT_TRUE(out.insert(f.at(k)).second) << "duplicate instance";
  return out;
}

// Substitution k (1-based) of the instance as [from, to].
std::pair<std::int64_t, std::int64_t> sub(const MatchContext& c, const Instance& x, std::int64_t k)
{
  std::int64_t a = c.var_pos(x.start, k, x.sub_len);
  return {a, a + x.sub_len - 1};
}

bool inside(const revpat::Run& R, std::int64_t from, std::int64_t to) { return from >= R.start && to <= R.end; }

// Run of period d containing [from..to], if any.
std::optional<std::size_t> run_with(const RunsIndex& runs, std::int64_t d, std::int64_t from, std::int64_t to)
{
  for (auto id : runs.with_period(d))
    if (inside(runs.run(id), from, to))
      return id;
  return std::nullopt;
}

} // namespace

TEST(BreakCandidates, Examples)
{
  EXPECT_EQ(break_candidates(revpat::Run{1, 4, 1}, 2, 1), (std::vector<std::int64_t>{2, 4, 5}));
  // s_len = 0: (j+1-d..j+1] and (j-d..j] differ by one shift only
  auto v = break_candidates(revpat::Run{1, 6, 2}, 0, 6);
  EXPECT_EQ(v, (std::vector<std::int64_t>{1, 5, 6, 7}));
  auto w = break_candidates(revpat::Run{3, 9, 1}, 3, 2);
  EXPECT_EQ(w, (std::vector<std::int64_t>{6, 8, 10}));
}

TEST(Propwsw, Examples)
{
  auto p = parse_pattern("{x}a{x}a{x}");
  EXPECT_TRUE(propwsw(p, 2, 3, 1));
  auto q = parse_pattern("{x}ab{x}abc{x}");
  EXPECT_FALSE(propwsw(q, 2, 3, 2));
  auto s = parse_pattern("{x}aba{x}ab{x}");
  EXPECT_FALSE(propwsw(s, 2, 3, 1));
  // mixed directions compare against the reversed segment
  auto m = parse_pattern("{x}ab{~x}c{~x}ba{x}");
  EXPECT_TRUE(propwsw(m, 2, 4, 2));
}

TEST(SeparationCandidates, Examples)
{
  auto p = parse_pattern("{x}a{x}a{x}");
  EXPECT_EQ(separation_candidates(p, {2, 3}, 1), std::vector<std::int64_t>{2});
  EXPECT_TRUE(separation_candidates(p, {}, 1).empty());
  auto q = parse_pattern("{x}a{x}a{x}bb{x}");
  auto got = separation_candidates(q, {2, 3, 4}, 1);
  EXPECT_TRUE(std::find(got.begin(), got.end(), 4) != got.end());
  EXPECT_LE(got.size(), 3u);
}

TEST(Separations, Examples)
{
  auto uniform = parse_pattern("{x}a{x}a{x}a{x}");
  auto s = separations(uniform, 1);
  // (2,3) qualifies vacuously: no member lies strictly before 2 or between 2 and 3
  EXPECT_EQ(s.equal, (std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 2}, {2, 3}}));
  EXPECT_TRUE(s.forward_reversed.empty());
  auto single = parse_pattern("{x}ab{~x}");
  EXPECT_TRUE(separations(single, 2).equal.empty());
  EXPECT_EQ(separations(single, 2).forward_reversed, (std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 2}}));
}

TEST(Separations, MatchQuadraticEnumerator)
{
  std::mt19937_64 rng(61);
  const std::vector<std::string> pool = {"", "a", "aa", "ab", "ba", "aba", "abab", "b", "bb", "aaa"};
  for (int round = 0; round < 3000; ++round) {
    Pattern p;
    int r = 3 + static_cast<int>(rng() % 11);
    for (int z = 0; z < r; ++z) {
      p.segments.push_back(pool[rng() % pool.size()]);
      if (z + 1 < r)
        p.directions.push_back(rng() % 3 ? Direction::Forward : Direction::Reversed);
    }
    std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 3);
    auto got = separations(p, d);
    for (auto cls : {SepClass::Equal, SepClass::ForwardReversed, SepClass::ReversedForward}) {
      auto members = class_members(p, cls);
      std::vector<std::pair<std::int64_t, std::int64_t>> want;
      for (auto z : members)
        for (auto z2 : members)
          if (z <= z2 && is_separation(p, members, z, z2, d))
            want.emplace_back(z, z2);
      auto& have = cls == SepClass::Equal ? got.equal
                   : cls == SepClass::ForwardReversed ? got.forward_reversed
                                                      : got.reversed_forward;
      ASSERT_EQ(have, want) << render_pattern(p) << " d=" << d;
      ASSERT_LE(have.size(), 12u);
    }
  }
}

TEST(WModD, Examples)
{
  EXPECT_EQ(w_mod_d(parse_pattern("{x}a{x}"), 3), std::vector<std::int64_t>{2});
  EXPECT_EQ(w_mod_d(parse_pattern("{x}{x}"), 2), std::vector<std::int64_t>{0});
  EXPECT_EQ(w_mod_d(parse_pattern("{~x}a{x}b{~x}"), 2), (std::vector<std::int64_t>{0, 1}));
  EXPECT_TRUE(w_mod_d(parse_pattern("{x}a{~x}"), 2).empty());
  // "bcabc" = w a w with w = "bc" inside (abc)^3
  auto inst = naive_find("abcabcabc", parse_pattern("{x}a{x}"));
  EXPECT_TRUE(std::find(inst.begin(), inst.end(), Instance{2, 2}) != inst.end());
}

TEST(WModD, HoldsForInRunInstances)
{
  std::mt19937_64 rng(62);
  int checked = 0;
  for (int round = 0; round < 3000; ++round) {
    std::string root;
    auto t = block_text(rng, root);
    auto p = block_pattern(rng, root, 3 + static_cast<int>(rng() % 3));
    Fixture f(t, p);
    for (auto& x : naive_find(t, p)) {
      auto w1 = sub(f.c, x, 1);
      auto sr = f.runs.substring_run(w1.first, w1.second);
      if (!sr)
        continue;
      const revpat::Run& R = f.runs.run(sr->second);
      if (!inside(R, w1.first, sub(f.c, x, f.c.r - 1).second))
        continue;
      auto res = w_mod_d(f.c.p, R.d);
      if (res.empty())
        continue;
      ++checked;
      ASSERT_TRUE(std::find(res.begin(), res.end(), x.sub_len % R.d) != res.end())
          << t << " " << render_pattern(p) << " " << x.start << "," << x.sub_len;
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(DSubarray, Examples)
{
  std::string t(10, 'a');
  {
    Fixture f(t, parse_pattern("{x}b{x}"));
    for (std::int64_t eta = 1; eta <= 4; ++eta)
      EXPECT_FALSE(d_subarray(f.c, f.runs.run(0), 11, 11, eta).any());
  }
  {
    Fixture f(t, parse_pattern("{x}{x}"));
    EXPECT_TRUE(d_subarray(f.c, f.runs.run(0), 11, 11, 3).test(1));
    EXPECT_TRUE(d_subarray(f.c, f.runs.run(0), 7, 7, 3).test(1));
    EXPECT_FALSE(d_subarray(f.c, f.runs.run(0), 6, 6, 3).test(1));
  }
  {
    Fixture f("abababababab", parse_pattern("{x}a{x}"));
    EXPECT_FALSE(d_subarray(f.c, f.runs.run(0), 9, 10, 2).any());
    EXPECT_THROW(d_subarray(f.c, f.runs.run(0), 9, 11, 1), std::invalid_argument);
  }
  {
    Fixture f("abba", parse_pattern("{x}{~x}"));
    EXPECT_THROW(d_subarray(f.c, revpat::Run{2, 3, 1}, 3, 3, 1), std::invalid_argument);
  }
}

TEST(DSubarray, MatchesOracle)
{
  std::mt19937_64 rng(63);
  for (int round = 0; round < 400; ++round) {
    std::string root;
    auto t = block_text(rng, root);
    auto p = block_pattern(rng, root, 2 + static_cast<int>(rng() % 3));
    for (auto& dir : p.directions)
      dir = Direction::Forward;
    Fixture f(t, p, 0);
    const auto& c = f.c;
    for (std::size_t id = 0; id < f.runs.size(); ++id) {
      const revpat::Run& R = f.runs.run(id);
      for (std::int64_t eta = R.d; eta <= c.n / std::max<std::int64_t>(1, c.r - 1); ++eta) {
        bool gate = true;
        for (std::int64_t z = 2; z < c.r; ++z)
          gate = gate && (eta + c.len[z]) % R.d == 0;
        for (std::int64_t b1 = R.start; b1 + R.d - 1 <= R.end + 1; b1 += R.d) {
          auto bits = d_subarray(c, R, b1, b1 + R.d - 1, eta);
          for (std::int64_t h = b1; h < b1 + R.d; ++h) {
            std::int64_t i = h - c.pre[c.r - 1] - (c.r - 1) * eta;
            bool want = gate && i >= R.start && c.verify(i, eta);
            ASSERT_EQ(bits.test(static_cast<std::size_t>(h - b1 + 1)), want) << t << " " << render_pattern(p);
          }
        }
      }
    }
  }
}

TEST(InRunSegment, SquaresInAbPowers)
{
  std::string t;
  for (int k = 0; k < 8; ++k)
    t += "ab";
  Fixture f(t, parse_pattern("{x}{x}"));
  std::int64_t total = 0;
  for (std::int64_t b1 = 1; b1 <= 17; b1 += 2)
    for (auto& fam : in_run_segment(f.c, 0, 0, b1, b1 + 1))
      total += fam.count;
  EXPECT_EQ(total, 6);
  EXPECT_THROW(in_run_segment(f.c, 0, 0, 1, 3), std::invalid_argument);
}

TEST(InRunSegment, NoFinalSegmentInRange)
{
  std::string t = "abababababab";
  Fixture f(t, parse_pattern("{x}{x}c"));
  for (std::int64_t b1 = 1; b1 <= 13; b1 += 2)
    EXPECT_TRUE(in_run_segment(f.c, 0, 0, b1, b1 + 1).empty());
}

TEST(InRunSegment, MatchesOracleSubset)
{
  std::mt19937_64 rng(64);
  std::int64_t found = 0;
  for (int round = 0; round < 2500; ++round) {
    std::string root;
    auto t = block_text(rng, root);
    auto p = block_pattern(rng, root, 3 + static_cast<int>(rng() % 3));
    Fixture f(t, p);
    const auto& c = f.c;
    auto all = naive_find(t, p);
    for (std::size_t id = 0; id < f.runs.size(); ++id) {
      const revpat::Run& R = f.runs.run(id);
      std::set<Instance> got;
      for (std::int64_t delta = 0; delta < R.d; ++delta)
        for (std::int64_t b1 = R.start; b1 <= R.end + 1; b1 += R.d) {
          auto fams = in_run_segment(c, id, delta, b1, b1 + R.d - 1);
          for (auto& fam : fams) {
            ASSERT_TRUE(fam.count == 1 || (fam.start_step == -(c.r - 1) * R.d && fam.len_step == R.d));
            for (std::int64_t k = 0; k < fam.count; ++k) {
              auto x = fam.at(k);
              ASSERT_TRUE(c.verify(x.start, x.sub_len));
              ASSERT_TRUE(got.insert(x).second);
            }
          }
        }
      std::set<Instance> want;
      for (auto& x : all)
        if (x.sub_len >= 3 * R.d && inside(R, sub(c, x, 1).first, sub(c, x, c.r - 1).second))
          want.insert(x);
      ASSERT_EQ(got, want) << t << " " << render_pattern(p) << " run " << R.start << ".." << R.end;
      found += static_cast<std::int64_t>(want.size());
    }
  }
  EXPECT_GT(found, 200);
}

TEST(InRunSpecialXrev, Examples)
{
  {
    std::string t = "abaabaabaabaabaaba";
    auto p = parse_pattern("{~x}b{x}");
    Fixture f(t, p);
    std::set<Instance> got;
    for (std::size_t id = 0; id < f.runs.size(); ++id) {
      const revpat::Run& R = f.runs.run(id);
      for (std::int64_t b1 = R.start; b1 <= R.end + 1; b1 += R.d)
        for (auto& x : expand(in_run_special_xrev(f.c, id, b1, b1 + R.d - 1)))
          got.insert(x);
    }
    std::set<Instance> want;
    for (auto& x : naive_find(t, p))
      if (auto sr = f.runs.substring_run(x.start, x.start + x.sub_len - 1); sr && 2 * sr->first <= x.sub_len) {
        const revpat::Run& R = f.runs.run(sr->second);
        if (inside(R, x.start, sub(f.c, x, 2).second))
          want.insert(x);
      }
    EXPECT_FALSE(want.empty());
    EXPECT_EQ(got, want);
  }
  {
    std::string t(8, 'a');
    auto p = parse_pattern("{~x}{x}");
    Fixture f(t, p);
    auto got = expand(in_run_special_xrev(f.c, 0, 9, 9));
    std::set<Instance> want;
    for (auto& x : naive_find(t, p))
      if (x.sub_len >= 2 && x.start + 2 * x.sub_len == 9)
        want.insert(x);
    EXPECT_EQ(got, want);
    EXPECT_EQ(want.size(), 3u);
  }
  {
    Fixture f("abab", parse_pattern("{x}{x}"));
    EXPECT_THROW(in_run_special_xrev(f.c, 0, 1, 2), std::invalid_argument);
  }
}

TEST(TwoRunSegment, WorkedBlocks)
{
  // (abc)^4 d (abc)^4 with x x d x abc x x
  std::string t = "abcabcabcabcdabcabcabcabc";
  auto p = parse_pattern("{x}{x}d{x}abc{x}{x}");
  Fixture f0(t, p, 0), f1(t, p, 1);
  EXPECT_EQ(naive_find(t, p, 0).size(), 2u);
  EXPECT_EQ(naive_find(t, p, 1).size(), 1u);
  // only |w| >= 3d = 9 is in scope, which leaves nothing here
  for (std::int64_t b1 = 1; b1 <= 12; b1 += 3)
    for (std::int64_t delta = 0; delta < 3; ++delta)
      EXPECT_TRUE(two_run_segment(f1.c, 0, 1, 2, delta, b1, b1 + 2).empty());
}

TEST(TwoRunSegment, MatchesOracleSubset)
{
  std::mt19937_64 rng(65);
  std::int64_t found = 0;
  for (int round = 0; round < 2500; ++round) {
    std::string root;
    auto t = block_text(rng, root);
    auto p = block_pattern(rng, root, 3 + static_cast<int>(rng() % 3));
    Fixture f(t, p);
    const auto& c = f.c;
    const std::int64_t V = c.r - 1;
    auto all = naive_find(t, p);
    for (std::size_t id = 0; id < f.runs.size(); ++id) {
      const revpat::Run& R = f.runs.run(id);
      std::set<Instance> got, want;
      for (auto id2 : f.runs.with_period(R.d)) {
        if (id2 == id)
          continue;
        for (std::int64_t z = 1; z < V; ++z)
          for (std::int64_t delta = 0; delta < R.d; ++delta)
            for (std::int64_t b1 = R.start; b1 <= R.end; b1 += R.d)
              for (auto& x : expand(two_run_segment(c, id, id2, z, delta, b1, b1 + R.d - 1))) {
                ASSERT_TRUE(c.verify(x.start, x.sub_len));
                ASSERT_TRUE(got.insert(x).second);
              }
        for (auto& x : all) {
          if (x.sub_len < 3 * R.d)
            continue;
          for (std::int64_t z = 1; z < V; ++z)
            if (inside(R, sub(c, x, 1).first, sub(c, x, z).second) &&
                inside(f.runs.run(id2), sub(c, x, z + 1).first, sub(c, x, V).second))
              want.insert(x);
        }
      }
      ASSERT_EQ(got, want) << t << " " << render_pattern(p) << " run " << R.start << ".." << R.end;
      found += static_cast<std::int64_t>(want.size());
    }
  }
  EXPECT_GT(found, 50);
}

TEST(SeparateLemma, ThreeUnaryBlocks)
{
  std::string t = "aaacaaacaaa";
  auto p = parse_pattern("{x}c{x}c{x}");
  Fixture f(t, p);
  auto got = expand(separate_lemma_instances(f.c, 1, 3, 1, 2, 3));
  auto want = naive_find(t, p);
  EXPECT_EQ(want, (std::vector<Instance>{{1, 3}}));
  EXPECT_EQ(got, (std::set<Instance>{{1, 3}}));
  EXPECT_THROW(separate_lemma_instances(f.c, 1, 3, 2, 2, 3), std::invalid_argument);
  EXPECT_THROW(separate_lemma_instances(f.c, 1, 3, 1, 3, 3), std::invalid_argument);
}

TEST(SeparateLemma, NoSecondRun)
{
  std::string t = "aaacbbbcaaa";
  Fixture f(t, parse_pattern("{x}c{x}c{x}"));
  EXPECT_TRUE(separate_lemma_instances(f.c, 1, 3, 1, 2, 3).empty());
}

TEST(SeparateLemma, MatchesOracleSubset)
{
  std::mt19937_64 rng(66);
  std::int64_t found = 0;
  for (int round = 0; round < 3000; ++round) {
    // three or four blocks of one root split by 'c', and patterns whose
    // segments are mostly separators or root pieces
    std::string root = random_text(rng, 1 + rng() % 2, 2), t;
    for (int b = 3 + static_cast<int>(rng() % 2); b > 0; --b) {
      for (int k = 2 + static_cast<int>(rng() % 6); k > 0; --k)
        t += root;
      t += b > 1 ? "c" : "";
    }
    Pattern p;
    int r = 4 + static_cast<int>(rng() % 2);
    for (int z = 0; z < r; ++z) {
      const std::vector<std::string> pool = {"", "c", "c", root, root + "c", "c" + root};
      p.segments.push_back(z == 0 || z + 1 == r ? (rng() % 2 ? "" : root.substr(0, 1)) : pool[rng() % pool.size()]);
      if (z + 1 < r)
        p.directions.push_back(rng() % 4 ? Direction::Forward : Direction::Reversed);
    }
    Fixture f(t, p);
    const auto& c = f.c;
    const std::int64_t V = c.r - 1;
    auto all = naive_find(t, p);
    for (std::size_t id = 0; id < f.runs.size(); ++id) {
      const revpat::Run& R = f.runs.run(id);
      const std::int64_t d = R.d;
      for (std::int64_t h1 = R.start; h1 + 2 * d - 1 <= R.end; h1 += 1 + static_cast<std::int64_t>(rng() % 3)) {
        std::int64_t h2 = h1 + 2 * d - 1;
        for (std::int64_t z = 2; z < c.r; ++z)
          for (std::int64_t z2 = z + 1; z2 < c.r; ++z2) {
            auto got = expand(separate_lemma_instances(c, h1, h2, d, z, z2));
            std::set<Instance> want;
            for (auto& x : all) {
              if (x.sub_len < std::max<std::int64_t>(2, 2 * d))
                continue;
              auto w1 = sub(c, x, 1);
              if (w1.first > h1 || w1.second < h2 || !inside(R, w1.first, w1.second))
                continue;
              std::vector<std::size_t> ids;
              for (std::int64_t k = 1; k <= V; ++k) {
                auto w = sub(c, x, k);
                ids.push_back(*run_with(f.runs, d, w.first, w.second));
              }
              std::int64_t b1 = 0, b2 = 0;
              for (std::int64_t k = 2; k <= V; ++k)
                if (ids[k - 1] != ids[k - 2]) {
                  if (!b1)
                    b1 = k;
                  else if (!b2)
                    b2 = k;
                }
              if (b1 == z && b2 == z2)
                want.insert(x);
            }
            ASSERT_EQ(got, want) << t << " " << render_pattern(p) << " v=" << h1 << ".." << h2 << " z=" << z
                                 << " z2=" << z2;
            found += static_cast<std::int64_t>(want.size());
          }
      }
    }
  }
  EXPECT_GT(found, 20);
}
