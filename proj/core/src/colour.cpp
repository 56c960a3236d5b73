#include "genii/colour.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "genii/errors.hpp"

namespace genii {
namespace {

struct Named {
  std::string_view name;
  Colour colour;
};

constexpr std::array<Named, 18> kNamed{{
    {"black", {0, 0, 0}},        {"white", {255, 255, 255}}, {"red", {255, 0, 0}},
    {"green", {0, 128, 0}},      {"blue", {0, 0, 255}},      {"yellow", {255, 255, 0}},
    {"orange", {255, 165, 0}},   {"purple", {128, 0, 128}},  {"gray", {128, 128, 128}},
    {"grey", {128, 128, 128}},   {"silver", {192, 192, 192}}, {"maroon", {128, 0, 0}},
    {"olive", {128, 128, 0}},    {"lime", {0, 255, 0}},      {"aqua", {0, 255, 255}},
    {"teal", {0, 128, 128}},     {"navy", {0, 0, 128}},      {"fuchsia", {255, 0, 255}},
}};

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::BadColour, "cannot parse colour '" + std::string(text) + "'");
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string Colour::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "#";
  for (std::uint8_t c : {r, g, b}) {
    out += kDigits[c >> 4];
    out += kDigits[c & 0xF];
  }
  return out;
}

Colour parse_colour(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) bad(text);
  if (s.front() == '#') {
    const std::string_view digits = s.substr(1);
    std::array<int, 6> d{};
    if (digits.size() != 3 && digits.size() != 6) bad(text);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      d[i] = hex_digit(digits[i]);
      if (d[i] < 0) bad(text);
    }
    if (digits.size() == 3)
      return {static_cast<std::uint8_t>(d[0] * 17), static_cast<std::uint8_t>(d[1] * 17),
              static_cast<std::uint8_t>(d[2] * 17)};
    return {static_cast<std::uint8_t>(d[0] * 16 + d[1]),
            static_cast<std::uint8_t>(d[2] * 16 + d[3]),
            static_cast<std::uint8_t>(d[4] * 16 + d[5])};
  }
  if (s.starts_with("rgb(") && s.ends_with(")")) {
    std::string_view body = s.substr(4, s.size() - 5);
    std::array<int, 3> v{};
    for (int k = 0; k < 3; ++k) {
      body = trim(body);
      const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v[k]);
      if (ec != std::errc{} || v[k] < 0 || v[k] > 255) bad(text);
      body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
      body = trim(body);
      if (k < 2) {
        if (body.empty() || body.front() != ',') bad(text);
        body.remove_prefix(1);
      }
    }
    if (!trim(body).empty()) bad(text);
    return {static_cast<std::uint8_t>(v[0]), static_cast<std::uint8_t>(v[1]),
            static_cast<std::uint8_t>(v[2])};
  }
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& n : kNamed)
    if (n.name == lower) return n.colour;
  bad(text);
}

Colour Gradient::at(double t) const {
  if (stops.empty()) return {};
  t = std::clamp(t, 0.0, 1.0);
  if (t <= stops.front().offset) return stops.front().colour;
  if (t >= stops.back().offset) return stops.back().colour;
  for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
    const auto& a = stops[i];
    const auto& b = stops[i + 1];
    if (t < a.offset || t > b.offset) continue;
    if (t == b.offset) return b.colour;
    const double span = b.offset - a.offset;
    const double u = span > 0 ? (t - a.offset) / span : 0.0;
    const auto mix = [u](std::uint8_t x, std::uint8_t y) {
      return static_cast<std::uint8_t>(std::lround(x + (y - x) * u));
    };
    return {mix(a.colour.r, b.colour.r), mix(a.colour.g, b.colour.g), mix(a.colour.b, b.colour.b)};
  }
  return stops.back().colour;
}

const std::vector<Colour>& default_palette() {
  static const std::vector<Colour> palette = {
      {0x00, 0x72, 0xB2}, {0xE6, 0x9F, 0x00}, {0x56, 0xB4, 0xE9}, {0x00, 0x9E, 0x73},
      {0xF0, 0xE4, 0x42}, {0xD5, 0x5E, 0x00}, {0xCC, 0x79, 0xA7}, {0x00, 0x00, 0x00},
  };
  return palette;
}

}  // namespace genii
