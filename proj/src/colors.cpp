#include "gridramsey/colors.hpp"

#include <cctype>
#include <string>

namespace gridramsey {

std::string StructuredColor::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    const Part& p = parts_[i];
    if (p.is_set) {
      s += '{';
      s += std::to_string(p.lo);
      if (p.hi != p.lo) {
        s += ',';
        s += std::to_string(p.hi);
      }
      s += '}';
    } else {
      s += std::to_string(p.lo);
    }
  }
  s += ')';
  return s;
}

namespace {

bool parse_int(const std::string& s, size_t& pos, int& out) {
  size_t start = pos;
  if (pos < s.size() && s[pos] == '-') ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == start || (s[start] == '-' && pos == start + 1)) return false;
  out = std::stoi(s.substr(start, pos - start));
  return true;
}

}  // namespace

std::optional<StructuredColor> StructuredColor::parse(const std::string& text) {
  size_t pos = 0;
  if (pos >= text.size() || text[pos] != '(') return std::nullopt;
  ++pos;
  StructuredColor c;
  bool first = true;
  while (pos < text.size() && text[pos] != ')') {
    if (!first) {
      if (text[pos] != ',') return std::nullopt;
      ++pos;
    }
    first = false;
    if (pos < text.size() && text[pos] == '{') {
      ++pos;
      int a, b;
      if (!parse_int(text, pos, a)) return std::nullopt;
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        if (!parse_int(text, pos, b)) return std::nullopt;
      } else {
        b = a;
      }
      if (pos >= text.size() || text[pos] != '}') return std::nullopt;
      ++pos;
      c.push_set(a, b);
    } else {
      int a;
      if (!parse_int(text, pos, a)) return std::nullopt;
      c.push_int(a);
    }
  }
  if (pos >= text.size() || text[pos] != ')') return std::nullopt;
  ++pos;
  if (pos != text.size()) return std::nullopt;
  return c;
}

}  // namespace gridramsey
