// Layout certificates as line-oriented text:
//
//   civitas-layout v1
//   problem <quadrangula|triangula|rotunda|custom>
//   container polygon x1 y1 x2 y2 ...      or   container circle cx cy r
//   house <length> <width>
//   count <n>
//   <cx> <cy> <theta_rad>                  (n lines)
//
// Every real is printed with exactly nine fractional digits and no exponent;
// theta lies in [0, pi). Files written by `serialize` are canonical: parsing
// and re-serializing reproduces them byte for byte.
#pragma once

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "civitas/alcuin.hpp"
#include "civitas/geometry.hpp"
#include "civitas/layout.hpp"

namespace civitas {

inline constexpr std::string_view kLayoutMagic = "civitas-layout v1";

class LayoutParseError : public std::runtime_error {
 public:
  LayoutParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Nine fractional digits, never "-0.000000000".
inline std::string format_fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  std::string s(buf);
  if (s == "-0.000000000") s.erase(0, 1);
  return s;
}

inline std::string serialize(const Layout& layout) {
  const auto& inst = layout.instance;
  std::string out;
  out.reserve(64 + layout.houses.size() * 48);
  out += kLayoutMagic;
  out += "\nproblem ";
  out += to_string(inst.id);
  out += "\ncontainer ";
  if (inst.container.is_circle()) {
    const auto& c = inst.container.as_circle();
    out += "circle " + format_fixed9(c.center.x) + " " + format_fixed9(c.center.y) + " " +
           format_fixed9(c.radius);
  } else {
    out += "polygon";
    for (const auto& p : inst.container.vertices()) {
      out += " " + format_fixed9(p.x) + " " + format_fixed9(p.y);
    }
  }
  out += "\nhouse " + format_fixed9(inst.house.length) + " " + format_fixed9(inst.house.width);
  out += "\ncount " + std::to_string(layout.houses.size()) + "\n";
  for (const auto& h : layout.houses) {
    out += format_fixed9(h.center().x);
    out += ' ';
    out += format_fixed9(h.center().y);
    out += ' ';
    out += format_fixed9(h.theta());
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

inline double parse_real(std::string_view word, std::size_t line) {
  double v = 0.0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, v, std::chars_format::fixed);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw LayoutParseError(line, "expected a decimal number, got '" + std::string(word) + "'");
  }
  return v;
}

}  // namespace detail

inline Layout parse_layout(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  auto line_at = [&](std::size_t i) -> std::string_view {
    if (i >= lines.size()) throw LayoutParseError(i + 1, "unexpected end of file");
    return lines[i];
  };
  auto keyword = [&](std::size_t i, std::string_view key) {
    auto w = detail::split_words(line_at(i));
    if (w.empty() || w[0] != key) {
      throw LayoutParseError(i + 1, "expected '" + std::string(key) + "' line");
    }
    return w;
  };

  if (line_at(0) != kLayoutMagic) throw LayoutParseError(1, "missing 'civitas-layout v1' header");

  auto w = keyword(1, "problem");
  if (w.size() != 2) throw LayoutParseError(2, "expected 'problem <id>'");
  const auto id = parse_problem_id(w[1]);
  if (!id) throw LayoutParseError(2, "unknown problem '" + std::string(w[1]) + "'");

  w = keyword(2, "container");
  if (w.size() < 2) throw LayoutParseError(3, "expected container kind");
  std::optional<ConvexContainer> container;
  try {
    if (w[1] == "circle") {
      if (w.size() != 5) throw LayoutParseError(3, "circle needs cx cy r");
      container = ConvexContainer::circle({detail::parse_real(w[2], 3), detail::parse_real(w[3], 3)},
                                          detail::parse_real(w[4], 3));
    } else if (w[1] == "polygon") {
      if (w.size() < 8 || (w.size() - 2) % 2 != 0) {
        throw LayoutParseError(3, "polygon needs at least three x y pairs");
      }
      std::vector<Point> v;
      for (std::size_t k = 2; k < w.size(); k += 2) {
        v.push_back({detail::parse_real(w[k], 3), detail::parse_real(w[k + 1], 3)});
      }
      container = ConvexContainer::polygon(std::move(v));
    } else {
      throw LayoutParseError(3, "unknown container kind '" + std::string(w[1]) + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw LayoutParseError(3, e.what());
  }

  w = keyword(3, "house");
  if (w.size() != 3) throw LayoutParseError(4, "expected 'house <length> <width>'");
  HouseDimensions house;
  try {
    house = HouseDimensions(detail::parse_real(w[1], 4), detail::parse_real(w[2], 4));
  } catch (const std::invalid_argument& e) {
    throw LayoutParseError(4, e.what());
  }

  w = keyword(4, "count");
  std::size_t count = 0;
  {
    const auto* end = w.size() == 2 ? w[1].data() + w[1].size() : nullptr;
    if (w.size() != 2 || std::from_chars(w[1].data(), end, count).ptr != end) {
      throw LayoutParseError(5, "expected 'count <n>'");
    }
  }
  const std::size_t present = lines.size() - 5;
  if (present != count) {
    throw LayoutParseError(5, "count header says " + std::to_string(count) + " but the file has " +
                                  std::to_string(present) + " house lines");
  }

  Layout layout{{*id, *container, house, *id == ProblemId::custom ? std::nullopt : make_instance(*id).dims},
                {},
                {}};
  layout.houses.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t ln = 6 + i;
    const auto hw = detail::split_words(lines[5 + i]);
    if (hw.size() != 3) throw LayoutParseError(ln, "expected '<cx> <cy> <theta>'");
    const double cx = detail::parse_real(hw[0], ln);
    const double cy = detail::parse_real(hw[1], ln);
    const double theta = detail::parse_real(hw[2], ln);
    if (!(theta >= 0.0 && theta < kPi)) throw LayoutParseError(ln, "theta must lie in [0, pi)");
    layout.houses.emplace_back(Point{cx, cy}, house.length, house.width, theta);
  }
  return layout;
}

/// Equality of everything a layout file records.
inline bool same_certificate(const Layout& a, const Layout& b) {
  return a.instance.id == b.instance.id && a.instance.container == b.instance.container &&
         a.instance.house == b.instance.house && a.houses == b.houses;
}

}  // namespace civitas
