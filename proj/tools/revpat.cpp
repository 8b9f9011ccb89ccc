// revpat: find instances of one-variable patterns with mirrored copies.
#include <CLI11.hpp>

#include <revpat/generators.hpp>
#include <revpat/matcher.hpp>
#include <revpat/oracle.hpp>
#include <revpat/random_cases.hpp>
#include <revpat/report_io.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;

struct FindArgs {
  std::string pattern;
  std::string text;
  std::string file;
  bool expand = false;
  std::string format;
  bool oracle = false;
  std::int64_t min_sub_len = 1;
  unsigned threads = 1;
};

int cmd_find(const FindArgs& a)
{
  std::string t = a.text;
  if (!a.file.empty()) {
    std::ifstream in(a.file, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << a.file << "\n";
      return kUsage;
    }
    t.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  if (t.empty()) {
    std::cerr << "error: empty text\n";
    return kUsage;
  }
  revpat::Pattern p;
  try {
    p = revpat::parse_pattern(a.pattern);
  } catch (const revpat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  auto rep = revpat::find_all(t, p, {a.min_sub_len, a.threads});
  std::vector<revpat::Instance> xs;
  if (a.expand || a.oracle)
    xs = revpat::enumerate(rep);
  if (a.oracle && xs != revpat::naive_find(t, p, a.min_sub_len)) {
    std::cerr << "error: matcher and reference disagree\n";
    return kMismatch;
  }
  std::string fmt = a.format.empty() ? (a.expand ? "tsv" : "json") : a.format;
  if (!a.expand)
    std::cout << (fmt == "json" ? revpat::report_json(rep).dump() + "\n" : revpat::families_tsv(rep));
  else
    std::cout << (fmt == "json" ? revpat::instances_json(rep.n, p, xs).dump() + "\n" : revpat::instances_tsv(p, xs));
  return kOk;
}

struct BenchArgs {
  std::string generator = "random";
  std::string pattern = "ab{x}ca{x}b{~x}ac";
  std::int64_t min_log = 14;
  std::int64_t max_log = 20;
  std::int64_t naive_max = 4096;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

int cmd_bench(const BenchArgs& a)
{
  revpat::Pattern p;
  try {
    p = revpat::parse_pattern(a.pattern);
  } catch (const revpat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::cout << "n,r,engine,wall_time_s,P\n";
  for (std::int64_t lg = a.min_log; lg <= a.max_log; ++lg) {
    std::int64_t n = std::int64_t{1} << lg;
    std::string t;
    try {
      t = revpat::gen::generate(a.generator, n, a.seed);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    }
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    auto rep = revpat::find_all(t, p, {1, a.threads});
    double fast = std::chrono::duration<double>(clock::now() - t0).count();
    std::cout << n << ',' << p.r() << ",fast," << fast << ',' << rep.total << "\n";
    if (n <= a.naive_max) {
      t0 = clock::now();
      auto xs = revpat::naive_find(t, p, 1);
      double slow = std::chrono::duration<double>(clock::now() - t0).count();
      std::cout << n << ',' << p.r() << ",naive," << slow << ',' << xs.size() << "\n";
    }
  }
  return kOk;
}

int cmd_selftest(std::int64_t cases, std::uint64_t seed)
{
  auto bad = revpat::differential(cases, seed);
  if (!bad) {
    std::cout << "selftest: " << cases << " cases passed\n";
    return kOk;
  }
  std::cerr << "selftest: mismatch\n  text: " << bad->text << "\n  pattern: " << revpat::render_pattern(bad->pattern)
            << "\n  min_sub_len: " << bad->min_sub_len << "\n";
  return kMismatch;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Find instances of one-variable patterns with reversed copies"};
  app.require_subcommand(1);

  FindArgs fa;
  auto* find = app.add_subcommand("find", "Report all instances of a pattern in a text");
  find->add_option("-p,--pattern", fa.pattern, "Pattern, e.g. a{x}ab{x}bc{~x}")->required();
  auto* text_opt = find->add_option("-t,--text", fa.text, "Text given inline");
  auto* file_opt = find->add_option("-f,--file", fa.file, "Text file (raw bytes)");
  text_opt->excludes(file_opt);
  find->add_flag("--expand", fa.expand, "List every instance instead of families");
  find->add_option("--format", fa.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  find->add_flag("--oracle", fa.oracle, "Cross-check against the quadratic reference; exit 2 on mismatch");
  find->add_option("--min-sub-len", fa.min_sub_len, "Shortest substitution")->check(CLI::Range(0, 1));
  find->add_option("--threads", fa.threads, "Worker threads")->check(CLI::PositiveNumber);

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time the matcher on generated texts; CSV output");
  bench->add_option("-g,--generator", ba.generator, "random, periodic, fibonacci or two-block");
  bench->add_option("-p,--pattern", ba.pattern, "Pattern");
  bench->add_option("--min-log", ba.min_log, "Smallest size as a power of two")->check(CLI::Range(1, 30));
  bench->add_option("--max-log", ba.max_log, "Largest size as a power of two")->check(CLI::Range(1, 30));
  bench->add_option("--naive-max", ba.naive_max, "Also time the reference up to this size");
  bench->add_option("--seed", ba.seed, "Random seed");
  bench->add_option("--threads", ba.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::int64_t cases = 1000;
  std::uint64_t seed = 1;
  auto* self = app.add_subcommand("selftest", "Randomized comparison against the reference matcher");
  self->add_option("--cases", cases, "Number of random cases")->check(CLI::NonNegativeNumber);
  self->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (*find) {
    if (fa.text.empty() && fa.file.empty() && !*text_opt) {
      std::cerr << "error: give the text with -t or -f\n";
      return kUsage;
    }
    return cmd_find(fa);
  }
  if (*bench)
    return cmd_bench(ba);
  return cmd_selftest(cases, seed);
}
