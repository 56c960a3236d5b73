#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace genii {

struct Colour {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  // "#rrggbb", lower case.
  std::string hex() const;
  bool operator==(const Colour&) const = default;
};

// Accepts "#rgb", "#rrggbb", "rgb(r, g, b)" and CSS basic colour names.
// Throws Error(BadColour) otherwise.
Colour parse_colour(std::string_view text);

struct GradientStop {
  double offset = 0.0;  // in [0, 1], non-decreasing along the list
  Colour colour;
  bool operator==(const GradientStop&) const = default;
};

struct Gradient {
  std::vector<GradientStop> stops;

  // Linear interpolation in sRGB between the stops that bracket t; t is
  // clamped to [0, 1].
  Colour at(double t) const;
  bool operator==(const Gradient&) const = default;
};

// Okabe-Ito qualitative palette: eight colours distinguishable under the
// common colour-vision deficiencies.
const std::vector<Colour>& default_palette();

}  // namespace genii
