#include "genii/svg.hpp"

#include <charconv>
#include <cmath>

namespace genii::svg {

std::string number(double v) {
  if (!std::isfinite(v)) v = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 4);
  std::string s(buf, res.ptr);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string comment_safe(std::string_view json_text) {
  std::string out;
  out.reserve(json_text.size());
  for (std::size_t i = 0; i < json_text.size(); ++i) {
    const char c = json_text[i];
    const bool next_dash = i + 1 < json_text.size() && json_text[i + 1] == '-';
    const bool prev_dash = !out.empty() && out.back() == '-';
    if (c == '-' && (next_dash || prev_dash)) out += "\\u002d";
    else out += c;
  }
  return out;
}

namespace {

void append_ring(std::string& d, const Ring& ring, const Affine& affine, bool close) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point p = affine.apply(ring[i]);
    if (!d.empty()) d += ' ';
    d += i == 0 ? "M" : "L";
    d += number(p.x);
    d += ' ';
    d += number(p.y);
  }
  if (close && !ring.empty()) d += " Z";
}

}  // namespace

std::string path_data(const Region& region, const Affine& affine) {
  std::string d;
  for (const auto& poly : region) {
    append_ring(d, poly.outer, affine, true);
    for (const auto& hole : poly.holes) append_ring(d, hole, affine, true);
  }
  return d;
}

std::string polyline_data(const Ring& line, const Affine& affine) {
  std::string d;
  append_ring(d, line, affine, false);
  return d;
}

}  // namespace genii::svg
