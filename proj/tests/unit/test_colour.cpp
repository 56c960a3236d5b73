#include <gtest/gtest.h>

#include "genii/colour.hpp"
#include "genii/errors.hpp"

using namespace genii;

TEST(Colour, ParsesForms) {
  EXPECT_EQ(parse_colour("#0072B2"), (Colour{0x00, 0x72, 0xB2}));
  EXPECT_EQ(parse_colour("#fa0"), (Colour{0xFF, 0xAA, 0x00}));
  EXPECT_EQ(parse_colour("rgb(1, 2, 3)"), (Colour{1, 2, 3}));
  EXPECT_EQ(parse_colour(" Blue "), (Colour{0, 0, 255}));
  EXPECT_EQ(parse_colour("yellow"), (Colour{255, 255, 0}));
  EXPECT_EQ(parse_colour("orange"), (Colour{255, 165, 0}));
}

TEST(Colour, RejectsGarbage) {
  for (const char* bad : {"", "#12", "#gggggg", "rgb(1,2)", "rgb(1,2,300)", "chartreuse-ish",
                          "rgb(1,2,3) x"}) {
    try {
      parse_colour(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadColour) << bad;
    }
  }
}

TEST(Colour, HexIsLowerCase) { EXPECT_EQ(parse_colour("#ABCDEF").hex(), "#abcdef"); }

TEST(Gradient, InterpolatesBetweenStops) {
  Gradient g{{{0, parse_colour("blue")}, {0.5, parse_colour("yellow")}, {1, parse_colour("orange")}}};
  EXPECT_EQ(g.at(0), (Colour{0, 0, 255}));
  EXPECT_EQ(g.at(0.5), (Colour{255, 255, 0}));
  EXPECT_EQ(g.at(1), (Colour{255, 165, 0}));
  EXPECT_EQ(g.at(0.25), (Colour{128, 128, 128}));
  EXPECT_EQ(g.at(-3), g.at(0));
  EXPECT_EQ(g.at(7), g.at(1));
}

TEST(Palette, EightDistinctColours) {
  const auto& p = default_palette();
  ASSERT_EQ(p.size(), 8u);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) EXPECT_NE(p[i], p[j]);
}
