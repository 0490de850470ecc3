#include "symdom/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace symdom {

std::string format_double(double v) {
  char buf[48];
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

namespace {
std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}
}  // namespace

void RunReport::add_param(const std::string& name, const std::string& value) {
  params.emplace_back(name, value);
}

void RunReport::add_case(const std::string& name, double value, double target, double tol) {
  CaseResult c;
  c.name = name;
  c.value = value;
  c.target = target;
  c.rel_err = (target != 0) ? std::abs(value - target) / std::abs(target)
                            : std::abs(value - target);
  c.pass = std::isfinite(c.rel_err) && c.rel_err <= tol;
  results.push_back(std::move(c));
}

void RunReport::add_flag(const std::string& name, bool ok, double value) {
  CaseResult c;
  c.name = name;
  c.value = value;
  c.target = 0;
  c.rel_err = 0;
  c.pass = ok;
  results.push_back(std::move(c));
}

void RunReport::finalize() {
  pass = true;
  for (const auto& c : results) pass = pass && c.pass;
}

std::string RunReport::to_json() const {
  std::ostringstream os;
  os << "{\"schema_version\":\"1\",\"check\":\"" << json_escape(check) << "\",\"params\":{";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) os << ",";
    os << "\"" << json_escape(params[i].first) << "\":\"" << json_escape(params[i].second)
       << "\"";
  }
  os << "},\"seed\":" << seed << ",\"results\":[";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& c = results[i];
    if (i) os << ",";
    os << "{\"case\":\"" << json_escape(c.name) << "\",\"value\":" << format_double(c.value)
       << ",\"target\":" << format_double(c.target)
       << ",\"rel_err\":" << format_double(c.rel_err)
       << ",\"pass\":" << (c.pass ? "true" : "false") << "}";
  }
  os << "],\"pass\":" << (pass ? "true" : "false")
     << ",\"runtime_ms\":" << (with_timing ? runtime_ms : 0) << ",\"notes\":[";
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) os << ",";
    os << "\"" << json_escape(notes[i]) << "\"";
  }
  os << "]}";
  return os.str();
}

std::string RunReport::to_csv() const {
  std::ostringstream os;
  os << "check,case,value,target,rel_err,pass\n";
  for (const auto& c : results) {
    os << check << ",\"" << c.name << "\"," << format_double(c.value) << ","
       << format_double(c.target) << "," << format_double(c.rel_err) << ","
       << (c.pass ? "1" : "0") << "\n";
  }
  return os.str();
}

}  // namespace symdom
