#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "matcher.hpp"

namespace revpat {

inline nlohmann::json report_json(const MatchReport& rep)
{
  nlohmann::json fam = nlohmann::json::array();
  for (const auto& f : rep.families)
    fam.push_back({{"start", f.first_start},
                   {"start_step", f.start_step},
                   {"sub_len", f.first_sublen},
                   {"len_step", f.len_step},
                   {"count", f.count}});
  return {{"n", rep.n}, {"total", rep.total}, {"families", std::move(fam)}};
}

// end = last text position covered by the instance
inline std::int64_t instance_end(const Pattern& p, const Instance& x)
{
  return x.start + image_length(p, x.sub_len) - 1;
}

inline nlohmann::json instances_json(std::int64_t n, const Pattern& p, const std::vector<Instance>& xs)
{
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : xs)
    arr.push_back({{"start", x.start}, {"sub_len", x.sub_len}, {"end", instance_end(p, x)}});
  return {{"n", n}, {"total", xs.size()}, {"instances", std::move(arr)}};
}

inline std::string instances_tsv(const Pattern& p, const std::vector<Instance>& xs)
{
  std::string out;
  for (const auto& x : xs) {
    out += std::to_string(x.start);
    out += '\t';
    out += std::to_string(x.sub_len);
    out += '\t';
    out += std::to_string(instance_end(p, x));
    out += '\n';
  }
  return out;
}

inline std::string families_tsv(const MatchReport& rep)
{
  std::string out = "start\tstart_step\tsub_len\tlen_step\tcount\n";
  for (const auto& f : rep.families)
    out += std::to_string(f.first_start) + '\t' + std::to_string(f.start_step) + '\t' +
           std::to_string(f.first_sublen) + '\t' + std::to_string(f.len_step) + '\t' + std::to_string(f.count) + '\n';
  return out;
}

} // namespace revpat
