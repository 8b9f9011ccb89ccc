#include <gtest/gtest.h>

#include <revpat/matcher.hpp>
#include <revpat/oracle.hpp>
#include <revpat/random_cases.hpp>

#include <random>
#include <set>

using namespace revpat;

namespace {

const std::string kWorked = "aabcababcbccbaaaabbbabaaabbbbcbbbaaa";

std::string repeat(const std::string& s, int k)
{
  std::string out;
  for (int i = 0; i < k; ++i)
    out += s;
  return out;
}

void expect_same(const std::string& t, const Pattern& p, std::int64_t msl, unsigned threads = 1)
{
  auto got = enumerate(find_all(t, p, {msl, threads}));
  auto want = naive_find(t, p, msl);
  ASSERT_EQ(got, want) << "text=" << t << " pattern=" << render_pattern(p) << " msl=" << msl;
}

} // namespace

TEST(FindAll, WorkedExample)
{
  auto rep = find_all(kWorked, parse_pattern("a{x}ab{x}bc{~x}"));
  EXPECT_EQ(enumerate(rep), (std::vector<Instance>{{1, 3}, {14, 6}}));
  EXPECT_EQ(rep.total, 2);
  EXPECT_EQ(rep.n, 36);
}

TEST(FindAll, SmallExamples)
{
  EXPECT_EQ(enumerate(find_all("abba", parse_pattern("{x}{~x}"))), (std::vector<Instance>{{1, 2}, {2, 1}}));
  EXPECT_EQ(enumerate(find_all("aa", parse_pattern("{x}{x}"))), (std::vector<Instance>{{1, 1}}));
  EXPECT_TRUE(enumerate(find_all("abc", parse_pattern("{x}{x}"))).empty());
  EXPECT_TRUE(enumerate(find_all("ab", parse_pattern("abc{x}"))).empty());
  EXPECT_EQ(enumerate(find_all("abab", parse_pattern("ab"))), (std::vector<Instance>{{1, 0}, {3, 0}}));
  EXPECT_EQ(enumerate(find_all("abab", parse_pattern(""))).size(), 4u);
}

TEST(FindAll, ZeroLengthSubstitutions)
{
  auto p = parse_pattern("a{x}b");
  EXPECT_EQ(enumerate(find_all("abab", p, {0, 1})),
            (std::vector<Instance>{{1, 0}, {1, 2}, {3, 0}}));
  EXPECT_EQ(enumerate(find_all("abab", p, {1, 1})), (std::vector<Instance>{{1, 2}}));
}

TEST(FindAll, InRunProgressionMatchesOracle)
{
  auto p = parse_pattern("{x}c{x}cabc{x}c{x}c{x}ca");
  for (int m = 8; m <= 16; ++m) {
    std::string t = repeat("abc", m);
    auto got = enumerate(find_all(t, p));
    ASSERT_EQ(got, naive_find(t, p));
    std::vector<Instance> want;
    for (int h = 0; h <= m - 7; ++h)
      for (int k = 0; h + 5 * k <= m - 7; ++k)
        want.push_back({1 + 3 * h, 2 + 3 * k});
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << "m=" << m;
  }
}

TEST(FindAll, PeriodicInstancesAreCompressed)
{
  std::string t = repeat("abc", 2000);
  auto rep = find_all(t, parse_pattern("{x}c{x}cabc{x}c{x}c{x}ca"));
  std::int64_t h = 2000 - 7, want = 0;
  for (std::int64_t k = 0; 5 * k <= h; ++k)
    want += h - 5 * k + 1;
  EXPECT_EQ(rep.total, want);
  EXPECT_LT(static_cast<std::int64_t>(rep.families.size()) * 50, rep.total);
}

TEST(FindAll, TwoRunProgressionMatchesOracle)
{
  auto p = parse_pattern("{x}{x}d{x}abc{x}{x}");
  for (int l = 3; l <= 8; ++l)
    for (int m = 3; m <= 8; ++m) {
      std::string t = repeat("abc", l) + "d" + repeat("abc", m);
      for (std::int64_t msl : {0, 1}) {
        auto got = enumerate(find_all(t, p, {msl, 1}));
        ASSERT_EQ(got, naive_find(t, p, msl));
        std::vector<Instance> want;
        for (int k = msl; 2 * k <= l && 3 * k + 1 <= m; ++k)
          want.push_back({1 + 3 * l - 6 * k, 3 * k});
        std::sort(want.begin(), want.end());
        EXPECT_EQ(got, want) << "l=" << l << " m=" << m << " msl=" << msl;
      }
    }
}

TEST(FindAll, RandomDifferential)
{
  CaseLimits lim{300, 4, 6, 5};
  auto bad = differential(10000, 20261016, fast_engine, lim);
  if (bad)
    FAIL() << "text=" << bad->text << " pattern=" << render_pattern(bad->pattern) << " msl=" << bad->min_sub_len;
}

TEST(FindAll, ExhaustiveTinyTexts)
{
  const std::vector<std::string> patterns = {
      "",           "a",          "{x}",          "{x}{x}",      "{x}{~x}",        "{~x}{x}",
      "a{x}",       "{x}b",       "{x}a{x}",      "{x}a{~x}",    "a{x}{~x}b",      "{x}{x}{x}",
      "{x}{~x}{x}", "{x}{x}{~x}", "{~x}{x}{x}",   "{x}ab{x}",    "{x}{x}{x}{x}",   "{x}{~x}{~x}{x}",
      "b{x}a{x}",   "{x}{x}b",    "{x}a{x}b{x}",  "{x}{~x}a{x}", "{x}{x}{~x}{x}{x}"};
  std::vector<Pattern> ps;
  for (auto& s : patterns)
    ps.push_back(parse_pattern(s));
  for (int n = 1; n <= 12; ++n) {
    int sigma = n <= 7 ? 3 : 2;
    std::int64_t total = 1;
    for (int k = 0; k < n; ++k)
      total *= sigma;
    for (std::int64_t code = 0; code < total; ++code) {
      std::string t;
      for (std::int64_t c = code, k = 0; k < n; ++k, c /= sigma)
        t += static_cast<char>('a' + c % sigma);
      Indexes ix(t);
      for (auto& p : ps)
        for (std::int64_t msl : {0, 1}) {
          auto got = enumerate(find_all(ix, p, {msl, 1}));
          auto want = naive_find(t, p, msl);
          ASSERT_EQ(got, want) << "text=" << t << " pattern=" << render_pattern(p) << " msl=" << msl;
        }
    }
  }
}

TEST(FindAll, StructuredTexts)
{
  std::mt19937_64 rng(71);
  const std::vector<std::string> patterns = {"{x}{x}{x}", "{x}{~x}{x}", "{x}a{~x}b{x}", "{x}{x}a{x}{~x}",
                                             "ab{x}{~x}{~x}ba", "{x}b{x}{x}"};
  auto fib = [](int n) {
    std::string a = "a", b = "ab";
    while (static_cast<int>(b.size()) < n) {
      std::string c = b + a;
      a = b;
      b = c;
    }
    return b.substr(0, n);
  };
  for (auto& ps : patterns) {
    auto p = parse_pattern(ps);
    expect_same(fib(400), p, 1);
    expect_same(repeat("ab", 150), p, 0);
    expect_same(repeat("aba", 100), p, 1);
    expect_same(repeat("abaab", 40) + "b" + repeat("abaab", 40), p, 1);
    std::string t = repeat("a", 300);
    expect_same(t, p, 0);
  }
}

TEST(FindAll, NoDuplicatesAndSorted)
{
  std::mt19937_64 rng(72);
  for (int k = 0; k < 500; ++k) {
    auto c = random_case(rng);
    auto rep = find_all(c.text, c.pattern, {c.min_sub_len, 1});
    auto xs = enumerate(rep);
    ASSERT_EQ(static_cast<std::int64_t>(xs.size()), rep.total);
    for (std::size_t i = 1; i < xs.size(); ++i)
      ASSERT_LT(xs[i - 1], xs[i]);
    for (auto& f : rep.families) {
      ASSERT_GE(f.count, 1);
      for (std::int64_t j = 0; j < f.count; ++j)
        ASSERT_GE(f.at(j).sub_len, normalize(c.pattern).variables() ? c.min_sub_len : 0);
    }
  }
}

TEST(FindAll, DeterministicAcrossThreadCounts)
{
  std::mt19937_64 rng(73);
  for (int k = 0; k < 200; ++k) {
    auto c = random_case(rng);
    auto one = find_all(c.text, c.pattern, {c.min_sub_len, 1});
    for (unsigned th : {2u, 4u, 8u}) {
      auto many = find_all(c.text, c.pattern, {c.min_sub_len, th});
      ASSERT_EQ(many.families, one.families);
      ASSERT_EQ(many.total, one.total);
    }
  }
  std::string t = repeat("abc", 3000);
  auto p = parse_pattern("{x}c{x}cabc{x}c{x}c{x}ca");
  EXPECT_EQ(find_all(t, p, {1, 4}).families, find_all(t, p, {1, 1}).families);
}

TEST(Enumerate, Examples)
{
  MatchReport empty;
  EXPECT_TRUE(enumerate(empty).empty());
  MatchReport one;
  one.families = {{13, -3, 0, 3, 4}};
  one.total = 4;
  EXPECT_EQ(enumerate(one), (std::vector<Instance>{{4, 9}, {7, 6}, {10, 3}, {13, 0}}));
}

TEST(VerifyInstance, Examples)
{
  Indexes ix(kWorked);
  auto p = parse_pattern("a{x}ab{x}bc{~x}");
  EXPECT_TRUE(verify_instance(ix, p, 1, 3));
  EXPECT_TRUE(verify_instance(ix, p, 14, 6));
  EXPECT_FALSE(verify_instance(ix, p, 14, 7));
  EXPECT_FALSE(verify_instance(ix, p, 30, 3));
  EXPECT_FALSE(verify_instance(ix, p, 0, 3));
}

TEST(VerifyInstance, AgreesWithOracle)
{
  std::mt19937_64 rng(74);
  for (int k = 0; k < 300; ++k) {
    auto c = random_case(rng, {60, 3, 5, 3});
    Indexes ix(c.text);
    auto want = naive_find(c.text, c.pattern, 0);
    std::set<Instance> yes(want.begin(), want.end());
    std::int64_t n = ix.text().size();
    for (std::int64_t i = 1; i <= n; ++i)
      for (std::int64_t b = 0; b <= n; ++b) {
        if (c.pattern.variables() == 0 && b > 0)
          continue;
        ASSERT_EQ(verify_instance(ix, c.pattern, i, b), yes.count({i, b}) > 0);
      }
  }
}
