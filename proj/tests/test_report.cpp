#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "stickylab/report.hpp"

using namespace stickylab;

TEST_CASE("dump sorts keys and prints 17 significant digits") {
  const json j{{"b", 0.1}, {"a", 1}, {"c", {{"z", 1.0 / 3.0}, {"y", "s"}}}};
  const std::string s = report::dump(j);
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(s.find("\"y\"") < s.find("\"z\""));
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  // Round trip is exact.
  const json back = json::parse(s);
  CHECK(back.at("b").get<double>() == 0.1);
  CHECK(back.at("c").at("z").get<double>() == 1.0 / 3.0);
}

TEST_CASE("non-finite numbers become null") {
  const json j{{"nan", std::nan("")}, {"inf", std::numeric_limits<double>::infinity()}, {"ok", 2.5}};
  const json back = json::parse(report::dump(j));
  CHECK(back.at("nan").is_null());
  CHECK(back.at("inf").is_null());
  CHECK(back.at("ok").get<double>() == 2.5);
}

TEST_CASE("csv layout") {
  report::Table t{{"name", "value"}, {{"plain", 1.5}, {"with,comma", 2}, {"quote\"d", 0.1}}};
  const std::string csv = report::to_csv(t);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "name,value");
  std::getline(in, line);
  CHECK(line == "plain,1.5");
  std::getline(in, line);
  CHECK(line == "\"with,comma\",2");
  std::getline(in, line);
  CHECK(line == "\"quote\"\"d\",0.10000000000000001");
}

TEST_CASE("files are written byte for byte") {
  const json j{{"x", 1}};
  report::write_json("report_test.json", j);
  std::ifstream in("report_test.json");
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == report::dump(j));
}
