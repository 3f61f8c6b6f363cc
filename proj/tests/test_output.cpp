#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "cli/output.hpp"
#include "json.hpp"

using namespace ptrig::cli;

namespace {

Document sample() {
  Document d;
  d.config["command"] = "demo";
  d.seed = 7;
  d.columns = {"x", "value", "note"};
  d.rows.push_back({Number{0.5}, Number{INFINITY}, std::string("a,\"b\"")});
  d.rows.push_back({Number{-1e-9}, Number{1.25e-7, Style::automatic}, std::monostate{}});
  return d;
}

}  // namespace

TEST(FormatNumber, FixedAndScientific) {
  EXPECT_EQ(format_number(0.505469, Style::fixed, 5), "0.50547");
  EXPECT_EQ(format_number(1234.5, Style::scientific, 3), "1.234e+03");
  EXPECT_EQ(format_number(-1e-9, Style::fixed, 5), "0.00000");
  EXPECT_EQ(format_number(INFINITY, Style::fixed, 5), "∞");
  EXPECT_EQ(format_number(-INFINITY, Style::fixed, 5), "-∞");
  EXPECT_EQ(format_number(NAN, Style::fixed, 5), "nan");
  EXPECT_EQ(format_number(2e-7, Style::automatic, 2), "2.00e-07");
  EXPECT_EQ(format_number(0.25, Style::automatic, 2), "0.25");
}

TEST(FormatNumber, TiesFollowTheBinaryValue) {
  // 0.125 is exact in binary, so the tie rounds to even.
  EXPECT_EQ(format_number(0.125, Style::fixed, 2), "0.12");
  EXPECT_EQ(format_number(0.375, Style::fixed, 2), "0.38");
}

TEST(Render, Csv) {
  const std::string csv = render(sample(), {Format::csv, 5, ""});
  EXPECT_EQ(csv, "x,value,note\n0.50000,,\"a,\"\"b\"\"\"\n0.00000,1.25000e-07,\n");
}

TEST(Render, Text) {
  const std::string text = render(sample(), {Format::text, 3, ""});
  EXPECT_EQ(text, "x\tvalue\tnote\n0.500\t∞\ta,\"b\"\n0.000\t1.250e-07\t-\n");
}

TEST(Render, TextBlocks) {
  Document d = sample();
  d.text_blocks = {{0, 1}, {0, 2}};
  const std::string text = render(d, {Format::text, 1, ""});
  EXPECT_EQ(text, "x\tvalue\n0.5\t∞\n0.0\t1.2e-07\n\nx\tnote\n0.5\ta,\"b\"\n0.0\t-\n");
}

TEST(Render, Json) {
  const auto j = nlohmann::json::parse(render(sample(), {Format::json, 5, ""}));
  EXPECT_EQ(j["meta"]["seed"], 7);
  EXPECT_EQ(j["meta"]["schema"], 1);
  EXPECT_TRUE(j["meta"].contains("version"));
  EXPECT_EQ(j["meta"]["config"]["command"], "demo");
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_DOUBLE_EQ(j["rows"][0]["x"].get<double>(), 0.5);
  EXPECT_TRUE(j["rows"][0]["value"].is_null());
  EXPECT_EQ(j["rows"][0]["note"], "a,\"b\"");
  EXPECT_TRUE(j["rows"][1]["note"].is_null());
  EXPECT_DOUBLE_EQ(j["rows"][1]["value"].get<double>(), 1.25e-7);
}

TEST(Render, JsonWithoutSeed) {
  Document d = sample();
  d.seed.reset();
  const auto j = nlohmann::json::parse(render(d, {Format::json, 5, ""}));
  EXPECT_TRUE(j["meta"]["seed"].is_null());
}

TEST(Emit, UnwritableDestination) {
  std::ostringstream out;
  EXPECT_THROW(emit(sample(), {Format::csv, 5, "/nonexistent/dir/out.csv"}, out), std::exception);
}
