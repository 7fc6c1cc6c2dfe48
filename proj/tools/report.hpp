#ifndef KDEF_TOOLS_REPORT_HPP
#define KDEF_TOOLS_REPORT_HPP

#include <chrono>
#include <exception>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace kdef::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Text };

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  Json result = Json::object();
  bool timing = false;

  // Runs f, which returns pass/fail and may fill detail; an exception is a
  // failure whose detail is the message.
  template <class F>
  void run(const std::string& name, F&& f) {
    Check c{name};
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.pass = f(c.detail);
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("error: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    checks.push_back(std::move(c));
  }

  std::size_t failed() const;
  int exit_code() const { return failed() == 0 ? 0 : 1; }
  std::string render(Format f) const;
};

}  // namespace kdef::cli

#endif  // KDEF_TOOLS_REPORT_HPP
