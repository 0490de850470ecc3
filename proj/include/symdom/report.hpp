#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symdom {

// One verification case inside a check run.
struct CaseResult {
  std::string name;
  double value = 0;
  double target = 0;
  double rel_err = 0;
  bool pass = false;
};

// Machine-readable report of one CLI check. Serialization is deterministic:
// fixed field order and %.12e floats, so identical invocations produce
// byte-identical JSON (timing is reported only when requested).
struct RunReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;  // name -> rendered value
  std::uint64_t seed = 0;
  std::vector<CaseResult> results;
  bool pass = false;
  std::int64_t runtime_ms = 0;
  bool with_timing = false;
  std::vector<std::string> notes;

  void add_param(const std::string& name, const std::string& value);
  void add_case(const std::string& name, double value, double target, double tol);
  // bare pass/fail case without a numeric target
  void add_flag(const std::string& name, bool ok, double value = 0);
  void finalize();  // pass = conjunction of case passes

  std::string to_json() const;
  std::string to_csv() const;
};

std::string format_double(double v);  // %.12e

}  // namespace symdom
