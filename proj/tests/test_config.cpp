#include "lleq/config.hpp"

#include <gtest/gtest.h>

using namespace lleq;

TEST(Config, ParsesFreeSpec)
{
    const LLESpec s = spec_from_text(R"({"name": "mine", "time": "QII", "space": ["XYI"]})");
    EXPECT_EQ(s.name(), "mine");
    EXPECT_EQ(s.time_word().str(), "QII");
    ASSERT_EQ(s.space_words().size(), 1u);
    EXPECT_EQ(s.space_words()[0].str(), "XYI");
    EXPECT_TRUE(s.is_free());
}

TEST(Config, ParsesPotentialTerms)
{
    const LLESpec s =
        spec_from_text(R"({"time": "QI", "space": ["XY"], "potential": [{"word": "XA", "fn": "g*x^-1"}]})", "file.json");
    EXPECT_EQ(s.name(), "file.json");
    ASSERT_EQ(s.potential().size(), 1u);
    EXPECT_EQ(s.potential()[0].word.str(), "XA");
    EXPECT_EQ(s.potential()[0].fn, OperatorPoly::g() * OperatorPoly::x(-1));
}

TEST(Config, RoundTripsThroughJson)
{
    for (const auto& spec : catalog()) {
        const LLESpec back = spec_from_json(to_json(spec));
        EXPECT_EQ(back.name(), spec.name());
        EXPECT_EQ(back.words(), spec.words());
    }
    const LLESpec p = spec_from_text(R"({"time": "QI", "space": ["XY"], "potential": [{"word": "XA", "fn": "f^2 + f'"}]})");
    const LLESpec back = spec_from_json(to_json(p));
    EXPECT_EQ(back.potential()[0].fn, p.potential()[0].fn);
}

TEST(Config, Errors)
{
    EXPECT_THROW(spec_from_text("{"), ConfigError);
    EXPECT_THROW(spec_from_text("[]"), ConfigError);
    EXPECT_THROW(spec_from_text(R"({"space": ["XY"]})"), ConfigError);
    EXPECT_THROW(spec_from_text(R"({"time": "QI", "space": "XY"})"), ConfigError);
    EXPECT_THROW(spec_from_text(R"({"time": "QI", "space": ["XYZ"]})"), ConfigError);
    EXPECT_THROW(spec_from_text(R"({"time": "QI", "space": ["XYI"]})"), ConfigError);
    EXPECT_THROW(spec_from_text(R"({"time": "QI", "colour": 1})"), ConfigError);
    EXPECT_THROW(spec_from_text(R"({"time": "QI", "potential": [{"word": "XA", "fn": "x +"}]})"), ConfigError);
    EXPECT_THROW(spec_from_text(R"({"time": "QI", "potential": [{"word": "XA"}]})"), ConfigError);
    EXPECT_THROW(spec_from_text(R"({"time": 3})"), ConfigError);
    EXPECT_THROW(load_spec("/nonexistent/spec.json"), ConfigError);
}
