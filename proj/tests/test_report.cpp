#include "symdom/report.hpp"
#include <cmath>

#include <doctest.h>

using namespace symdom;

TEST_SUITE("report") {

TEST_CASE("deterministic serialization") {
  auto build = [] {
    RunReport r;
    r.check = "radial-check";
    r.add_param("r", "2");
    r.add_param("a", "2");
    r.seed = 0;
    r.add_case("mu=(1)", 0.6666666666, 2.0 / 3, 1e-8);
    r.add_flag("probability", true, 1.0);
    r.finalize();
    r.runtime_ms = 1234;  // not emitted unless timing was requested
    return r;
  };
  auto a = build().to_json();
  auto b = build().to_json();
  CHECK(a == b);
  CHECK(a.find("\"schema_version\":\"1\"") != std::string::npos);
  CHECK(a.find("\"runtime_ms\":0") != std::string::npos);
  CHECK(a.find("e-01") != std::string::npos);  // %.12e floats
  auto timed = build();
  timed.with_timing = true;
  CHECK(timed.to_json().find("\"runtime_ms\":1234") != std::string::npos);
}

TEST_CASE("pass is the conjunction of case passes") {
  RunReport r;
  r.check = "x";
  r.add_case("good", 1.0, 1.0, 1e-12);
  r.finalize();
  CHECK(r.pass);
  r.add_case("bad", 1.0, 2.0, 1e-12);
  r.finalize();
  CHECK(!r.pass);
}

TEST_CASE("csv rendering") {
  RunReport r;
  r.check = "moments";
  r.add_case("nu=2", 1.0, 1.0, 1e-12);
  r.finalize();
  auto csv = r.to_csv();
  CHECK(csv.find("check,case,value,target,rel_err,pass") == 0);
  CHECK(csv.find("moments,\"nu=2\"") != std::string::npos);
}

TEST_CASE("float formatting") {
  CHECK(format_double(0.5) == "5.000000000000e-01");
  CHECK(format_double(-0.125) == "-1.250000000000e-01");
  CHECK(format_double(std::nan("")) == "null");
}

}  // TEST_SUITE
