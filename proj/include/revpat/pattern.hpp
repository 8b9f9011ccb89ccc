#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace revpat {

enum class Direction : std::uint8_t { Forward, Reversed };

inline Direction flip(Direction d)
{
  return d == Direction::Forward ? Direction::Reversed : Direction::Forward;
}

// s_1 x_1 s_2 ... x_{r-1} s_r, every x_z being x or its reversal.
struct Pattern {
  std::vector<std::string> segments;
  std::vector<Direction> directions;

  std::size_t r() const { return segments.size(); }
  std::size_t variables() const { return directions.size(); }

  std::size_t terminal_length() const
  {
    std::size_t s = 0;
    for (auto& seg : segments)
      s += seg.size();
    return s;
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct Instance {
  std::int64_t start = 0;
  std::int64_t sub_len = 0;

  friend bool operator==(const Instance&, const Instance&) = default;
  friend auto operator<=>(const Instance&, const Instance&) = default;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t offset)
    : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset_(offset)
  {
  }
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

inline Pattern parse_pattern(std::string_view syntax)
{
  Pattern p;
  std::string cur;
  std::size_t i = 0;
  while (i < syntax.size()) {
    char c = syntax[i];
    if (c == '\\') {
      if (i + 1 >= syntax.size())
        throw ParseError("dangling escape", i);
      char e = syntax[i + 1];
      if (e != '{' && e != '}' && e != '\\')
        throw ParseError("unknown escape", i);
      cur.push_back(e);
      i += 2;
    } else if (c == '{') {
      if (syntax.substr(i, 3) == "{x}") {
        p.directions.push_back(Direction::Forward);
        i += 3;
      } else if (syntax.substr(i, 4) == "{~x}") {
        p.directions.push_back(Direction::Reversed);
        i += 4;
      } else {
        throw ParseError("malformed variable token", i);
      }
      p.segments.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
      ++i;
    }
  }
  p.segments.push_back(std::move(cur));
  return p;
}

inline std::string render_pattern(const Pattern& p)
{
  std::string out;
  for (std::size_t z = 0; z < p.segments.size(); ++z) {
    for (char c : p.segments[z]) {
      if (c == '{' || c == '\\')
        out.push_back('\\');
      out.push_back(c);
    }
    if (z < p.directions.size())
      out += p.directions[z] == Direction::Forward ? "{x}" : "{~x}";
  }
  return out;
}

// Makes the first variable forward. Substituting w-bar for w maps instances
// one-to-one, so starts and lengths are unchanged.
inline Pattern normalize(Pattern p)
{
  if (!p.directions.empty() && p.directions[0] == Direction::Reversed)
    for (auto& d : p.directions)
      d = flip(d);
  return p;
}

inline std::int64_t image_length(const Pattern& p, std::int64_t beta)
{
  return static_cast<std::int64_t>(p.terminal_length()) +
         static_cast<std::int64_t>(p.variables()) * beta;
}

} // namespace revpat
