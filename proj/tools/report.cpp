#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace kdef::cli {

std::size_t Report::failed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += !c.pass;
  return n;
}

namespace {

std::string seconds_str(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

void text_value(std::ostringstream& out, const std::string& key, const Json& v, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) text_value(out, k, x, indent + 2);
  } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
    out << pad << key << ": " << v.size() << " entries\n";
    for (std::size_t i = 0; i < v.size(); ++i) text_value(out, "[" + std::to_string(i) + "]", v[i], indent + 2);
  } else if (v.is_string()) {
    out << pad << key << ": " << v.get<std::string>() << "\n";
  } else {
    out << pad << key << ": " << v.dump() << "\n";
  }
}

}  // namespace

std::string Report::render(Format f) const {
  if (f == Format::Json) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json r;
      r["name"] = c.name;
      r["status"] = c.pass ? "pass" : "fail";
      r["detail"] = c.detail;
      if (timing) r["seconds"] = seconds_str(c.seconds);
      arr.push_back(std::move(r));
    }
    j["checks"] = std::move(arr);
    j["result"] = result;
    j["summary"] = {{"total", checks.size()}, {"passed", checks.size() - failed()}, {"failed", failed()}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "command: " << command << "\n";
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    if (timing) out << "  (" << seconds_str(c.seconds) << " s)";
    out << "\n";
  }
  for (const auto& [k, v] : result.items()) text_value(out, k, v, 0);
  out << "summary: " << checks.size() - failed() << "/" << checks.size() << " passed\n";
  return out.str();
}

}  // namespace kdef::cli
