// Prints one line per acceptance criterion and compares each status with the
// recorded expectation file; exits nonzero when any status differs.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kdef/deformation.hpp"
#include "kdef/reference.hpp"
#include "suites.hpp"

using namespace kdef;
using namespace kdef::cli;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void note(const std::string& s) { notes.push_back(s); }
  void require(bool ok, const std::string& s) {
    pass = pass && ok;
    notes.push_back((ok ? "" : "FAILED ") + s);
  }
};

// Folds the checks of a report whose names start with prefix into the outcome.
void absorb(Outcome& o, const Report& r, const std::string& prefix = "") {
  std::size_t n = 0, failed = 0;
  for (const auto& c : r.checks) {
    if (c.name.rfind(prefix, 0) != 0) continue;
    ++n;
    if (!c.pass) {
      ++failed;
      o.require(false, c.name + ": " + c.detail);
    }
  }
  o.note(r.command + (prefix.empty() ? "" : " [" + prefix + "*]") + ": " + std::to_string(n - failed) + "/" +
         std::to_string(n) + " checks pass");
}

double seconds_of(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.seconds;
  return 0;
}

void within(Outcome& o, double seconds, double limit) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.2f s (limit %.0f s)", seconds, limit);
  o.require(seconds < limit, buf);
}

ConditionIdeal ideal_upto(const std::vector<Condition>& conds, int order) {
  ConditionIdeal id;
  for (const auto& c : conds)
    if (c.order <= order) id.add(c.poly);
  return id;
}

// Number of order-m conditions lying in the ideal.
std::size_t contained(const std::vector<Condition>& conds, int order, const ConditionIdeal& ideal) {
  std::size_t n = 0;
  for (const auto& c : conds) n += c.order == order && ideal.contains(c.poly);
  return n;
}

std::size_t count_order(const std::vector<Condition>& conds, int order) {
  std::size_t n = 0;
  for (const auto& c : conds) n += c.order == order;
  return n;
}

std::string fingerprint_of(const Report& r) {
  std::string s;
  for (const auto& c : r.checks) s += c.name + (c.pass ? ":pass:" : ":fail:") + c.detail + "\n";
  return s + r.result.dump();
}

Outcome criterion1() {
  Outcome o;
  Report r = verify_algebra(6, 0);
  absorb(o, r, "contact.jacobi");
  within(o, seconds_of(r, "contact.jacobi"), 5);
  return o;
}

Outcome criterion2() {
  Outcome o;
  Report r = verify_algebra(0, 5);
  absorb(o, r, "density.representation");
  within(o, seconds_of(r, "density.representation"), 10);
  return o;
}

Outcome criterion3() {
  Outcome o;
  Report r = verify_transvectants(-1);
  absorb(o, r, "J");
  double t = 0;
  for (const auto& c : r.checks) t += c.seconds;
  within(o, t, 10);
  return o;
}

Outcome criterion4() {
  Outcome o;
  Report r = verify_transvectants(13);
  absorb(o, r, "SJ_");
  double t = 0;
  for (const auto& c : r.checks)
    if (c.name.rfind("SJ_", 0) == 0) t += c.seconds;
  within(o, t, 60);
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  Report r = verify_cocycles("all");
  for (const auto& c : r.checks)
    if (c.name.rfind("B", 0) != 0 && !c.pass) o.require(false, c.name + ": " + c.detail);
  std::size_t n = 0;
  for (const auto& c : r.checks) n += c.name.rfind("B", 0) != 0;
  o.note(std::to_string(n) + " first-cohomology and proportionality checks");
  within(o, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 60);
  return o;
}

Outcome criterion6() {
  Outcome o;
  Report r = verify_lemmas("th2", 0);
  absorb(o, r);
  double t = 0;
  for (const auto& c : r.checks) t += c.seconds;
  within(o, t, 60);
  return o;
}

Outcome criterion7() {
  Outcome o;
  Report r = verify_lemmas("lth2", 0);
  absorb(o, r);
  double t = 0;
  for (const auto& c : r.checks) t += c.seconds;
  within(o, t, 60);
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const char* name : {"benfraj1", "benfraj2", "benfraj3", "benfraj4", "benfraj5"}) absorb(o, verify_lemmas(name, 0));
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (int n2 : {10, 11, 12}) absorb(o, deform_conditions(n2, 2), "order2");
  MaurerCartan e(SymbolSpace::generic(21));
  e.solve_to(4);
  std::vector<Condition> printed;
  for (int m = 2; m <= 4; ++m)
    for (const auto& c : reference_conditions(m, 21)) printed.push_back(c);
  const auto& mine = e.conditions();
  for (int m = 2; m <= 4; ++m) {
    std::size_t a = contained(printed, m, ideal_upto(mine, m)), b = contained(mine, m, ideal_upto(printed, m));
    std::size_t na = count_order(printed, m), nb = count_order(mine, m);
    o.require(a == na && b == nb, "n = 21/2 order " + std::to_string(m) + ": " + std::to_string(a) + "/" +
                                      std::to_string(na) + " printed generators in the computed ideal, " +
                                      std::to_string(b) + "/" + std::to_string(nb) +
                                      " computed generators in the printed ideal");
  }
  o.note("order 5 at n = 21/2 not attempted: the order-5 step did not finish in 40 minutes");
  return o;
}

Outcome criterion10() {
  Outcome o;
  const struct {
    int n2;
    std::size_t families;
    int free;
  } printed[] = {{10, 6, 18}, {11, 36, 17}};
  for (const auto& p : printed) {
    Report r = deform_enumerate(p.n2, 5);
    absorb(o, r);
    std::size_t fam = r.result["families"].get<std::size_t>();
    int free = r.result["free_parameters"].get<int>();
    o.require(fam == p.families && free == p.free,
              "n = " + half_str(p.n2) + ": " + std::to_string(fam) + " families / " + std::to_string(free) +
                  " free parameters, printed " + std::to_string(p.families) + " / " + std::to_string(p.free));
  }
  bool empty = true;
  for (int n2 = 0; n2 <= 9; ++n2) empty = empty && deform_conditions(n2, 5).result["generators"].empty();
  o.require(empty, "n < 5: empty ideal");
  return o;
}

Outcome criterion11(const std::string& fixtures) {
  Outcome o;
  Report good = deform_check(10, fixtures + "/family_n5.json", 8, 0);
  absorb(o, good);
  Report bad = deform_check(10, fixtures + "/violates_order2_n5.json", 8, 0);
  bool witnessed = false;
  for (const auto& c : bad.checks)
    if (c.name == "homomorphism") witnessed = !c.pass && !c.detail.empty() && c.detail.rfind("error", 0) != 0;
  o.require(bad.failed() == bad.checks.size() && witnessed, "assignment violating the order-2 ideal fails with a witness");
  return o;
}

Outcome criterion12(const std::string& fixtures) {
  Outcome o;
  auto same = [&](const std::string& what, const Report& a, const Report& b) {
    o.require(fingerprint_of(a) == fingerprint_of(b), what + " unchanged with bump 2");
  };
  same("supertransvectant invariance", verify_transvectants(13, 0), verify_transvectants(13, 2));
  same("lemma ranks and identities", verify_lemmas("all", 0), verify_lemmas("all", 2));
  for (const char* omega : {"B[l,l+3]", "B[l,l+7/2]", "B[l,l+4]", "B[l,l+9/2]", "B[l,l+5]"}) {
    Report a = cohomology_solve(omega, 12, "l", 0), b = cohomology_solve(omega, 12, "l", 2);
    o.require(a.result["solvable"] == b.result["solvable"] && a.failed() == 0 && b.failed() == 0,
              std::string(omega) + " verdict unchanged with bump 2");
  }
  for (int n2 : {10, 11}) {
    MaurerCartan plain(SymbolSpace::generic(n2)), bumped(SymbolSpace::generic(n2), EngineOptions{2});
    plain.solve_to(4);
    bumped.solve_to(4);
    bool eq = plain.conditions().size() == bumped.conditions().size();
    for (std::size_t i = 0; eq && i < plain.conditions().size(); ++i)
      eq = plain.conditions()[i].poly == bumped.conditions()[i].poly;
    o.require(eq, "conditions to order 4 at n = " + half_str(n2) + " unchanged with bump 2");
  }
  Report a = deform_check(10, fixtures + "/family_n5.json", 8, 0), b = deform_check(10, fixtures + "/family_n5.json", 8, 2);
  o.require(a.failed() == 0 && b.failed() == 0, "homomorphism check for the n = 5 family unchanged with bump 2");
  return o;
}

std::map<int, bool> read_expected(const std::string& path) {
  std::map<int, bool> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int id;
    std::string status;
    if (ss >> id >> status) out[id] = status == "pass";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <expected-status-file> <fixtures-dir> [criterion...]\n";
    return 2;
  }
  const std::string fixtures = argv[2];
  std::map<int, bool> expected = read_expected(argv[1]);
  std::vector<std::pair<int, std::function<Outcome()>>> all = {
      {1, criterion1},
      {2, criterion2},
      {3, criterion3},
      {4, criterion4},
      {5, criterion5},
      {6, criterion6},
      {7, criterion7},
      {8, criterion8},
      {9, criterion9},
      {10, criterion10},
      {11, [&] { return criterion11(fixtures); }},
      {12, [&] { return criterion12(fixtures); }},
  };
  std::vector<int> only;
  for (int i = 3; i < argc; ++i) only.push_back(std::stoi(argv[i]));

  int mismatches = 0;
  for (const auto& [id, f] : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.require(false, std::string("error: ") + e.what());
    }
    bool want = expected.count(id) ? expected[id] : true;
    bool matches = o.pass == want;
    mismatches += !matches;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL")
              << (matches ? "" : want ? "  (regression: recorded as pass)" : "  (unexpected pass: update the record)")
              << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  return mismatches == 0 ? 0 : 1;
}
