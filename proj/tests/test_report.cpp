#include <gtest/gtest.h>

#include <cmath>

#include "json.hpp"
#include "ksl/report.hpp"

using namespace ksl::report;

TEST(Format, Numbers) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0 / 3), "0.333333333333333");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
  EXPECT_EQ(format_value(true), "true");
  EXPECT_EQ(format_value(42LL), "42");
}

TEST(Report, ChecksAndOrder) {
  Report r("demo");
  r.set("b", 2.0);
  r.set("a", 1LL);
  r.set("b", 3.0);
  r.check("x", true);
  EXPECT_TRUE(r.passed());
  r.check("y", false);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.check_count(), 2u);
  EXPECT_EQ(r.failure_count(), 1u);
  ASSERT_EQ(r.results().size(), 4u);
  EXPECT_EQ(r.results()[0].first, "b");
  EXPECT_EQ(std::get<double>(r.results()[0].second), 3.0);
  EXPECT_EQ(std::get<std::string>(*r.find("y.status")), "fail");
}

TEST(Report, JsonLayout) {
  Report r("demo");
  r.config("n", 2LL);
  r.set("v", 1.0 / 3);
  r.error("demo", "bad input");
  const auto j = nlohmann::json::parse(r.to_json("2020-01-01T00:00:00Z"));
  EXPECT_EQ(j["header"]["tool"], "ksl");
  EXPECT_EQ(j["header"]["timestamp"], "2020-01-01T00:00:00Z");
  EXPECT_EQ(j["results"]["demo.error"], "bad input");
  EXPECT_EQ(j["status"], "fail");
  EXPECT_DOUBLE_EQ(j["results"]["v"].get<double>(), 0.333333333333333);
  EXPECT_EQ(r.payload_json().find("timestamp"), std::string::npos);
}

TEST(Report, CsvRowsAndKeyValues) {
  Report rows("t");
  rows.add_row({{"n", 2LL}, {"q", 2.0}});
  rows.add_row({{"n", 3LL}, {"q", 1.5}, {"note", std::string("a,b")}});
  EXPECT_EQ(rows.to_csv("T"), "# ksl 0.1.0 t T\nn,q,note\n2,2,\n3,1.5,\"a,b\"\n");
  Report kv("t");
  kv.set("x", 1.5);
  EXPECT_EQ(kv.to_csv("T"), "# ksl 0.1.0 t T\nkey,value\nx,1.5\nstatus,pass\n");
}
