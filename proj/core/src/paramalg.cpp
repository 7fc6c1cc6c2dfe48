#include "kdef/paramalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "kdef/errors.hpp"
#include "kdef/linalg.hpp"

namespace kdef {

namespace {

constexpr std::size_t kMaxClosureRows = 20000;

int parse_offset(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty() || t[0] != 'l') throw ParseError("parameter weight must start with l: " + s);
  t = t.substr(1);
  if (t.empty()) return 0;
  int sign = 1;
  if (t[0] == '+') {
    t = t.substr(1);
  } else if (t[0] == '-') {
    sign = -1;
    t = t.substr(1);
  } else {
    throw ParseError("bad parameter weight: " + s);
  }
  try {
    std::size_t slash = t.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      int v = std::stoi(t, &used);
      if (used != t.size()) throw ParseError("bad parameter weight: " + s);
      return sign * 2 * v;
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    int v = std::stoi(num, &used);
    if (used != num.size() || den != "2") throw ParseError("bad parameter weight: " + s);
    if (v % 2 == 0) throw ParseError("non-reduced half weight: " + s);
    return sign * v;
  } catch (const std::logic_error&) {
    throw ParseError("bad parameter weight: " + s);
  }
}

// b / a for a | b.
ParamMonomial quotient(const ParamMonomial& b, const ParamMonomial& a) {
  ParamMonomial r;
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(r));
  return r;
}

}  // namespace

std::string offset_weight_str(int offset2) {
  if (offset2 == 0) return "l";
  std::string sign = offset2 > 0 ? "+" : "-";
  int a = offset2 > 0 ? offset2 : -offset2;
  if (a % 2 == 0) return "l" + sign + std::to_string(a / 2);
  return "l" + sign + std::to_string(a) + "/2";
}

std::string ParamName::str() const {
  return "t[" + offset_weight_str(src2) + "," + offset_weight_str(dst2) + "]";
}

ParamName ParamName::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 5 || t.rfind("t[", 0) != 0 || t.back() != ']')
    throw ParseError("bad parameter name: " + text);
  std::string body = t.substr(2, t.size() - 3);
  std::size_t comma = body.find(',');
  if (comma == std::string::npos) throw ParseError("bad parameter name: " + text);
  ParamName p{parse_offset(body.substr(0, comma)), parse_offset(body.substr(comma + 1))};
  if (p.shift2() <= 0) throw ParseError("parameter must raise the weight: " + text);
  return p;
}

int canonicalize(ParamMonomial& m) {
  int sign = 1;
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (std::size_t j = i; j > 0 && m[j] < m[j - 1]; --j) {
      if (m[j].parity() && m[j - 1].parity()) sign = -sign;
      std::swap(m[j], m[j - 1]);
    }
  }
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] == m[i - 1] && m[i].parity()) return 0;
  return sign;
}

int monomial_parity(const ParamMonomial& m) {
  int p = 0;
  for (const auto& v : m) p ^= v.parity();
  return p;
}

bool divides(const ParamMonomial& a, const ParamMonomial& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string monomial_str(const ParamMonomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!s.empty()) s += "*";
    s += m[i].str();
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s.empty() ? "1" : s;
}

SuperParamPoly::SuperParamPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(ParamMonomial{}, c);
}

SuperParamPoly SuperParamPoly::variable(const ParamName& p) {
  SuperParamPoly r;
  r.terms_.emplace(ParamMonomial{p}, Scalar(1));
  return r;
}

SuperParamPoly SuperParamPoly::monomial(ParamMonomial factors, const Scalar& c) {
  SuperParamPoly r;
  int s = canonicalize(factors);
  if (s != 0) r.add_term(factors, s > 0 ? c : -c);
  return r;
}

void SuperParamPoly::add_term(const ParamMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int SuperParamPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

bool SuperParamPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d >= 0 && static_cast<int>(m.size()) != d) return false;
    d = static_cast<int>(m.size());
  }
  return true;
}

int SuperParamPoly::parity() const {
  if (terms_.empty()) return 0;
  int p = monomial_parity(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (monomial_parity(m) != p) throw NonHomogeneous("parameter polynomial of mixed parity");
  return p;
}

std::set<ParamName> SuperParamPoly::variables() const {
  std::set<ParamName> vs;
  for (const auto& [m, c] : terms_) vs.insert(m.begin(), m.end());
  return vs;
}

Scalar SuperParamPoly::coeff(const ParamMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

SuperParamPoly SuperParamPoly::operator-() const { return scaled(Scalar(-1)); }

SuperParamPoly& SuperParamPoly::operator+=(const SuperParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperParamPoly& SuperParamPoly::operator-=(const SuperParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperParamPoly operator*(const SuperParamPoly& a, const SuperParamPoly& b) {
  SuperParamPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ParamMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      int s = canonicalize(m);
      if (s == 0) continue;
      Scalar c = ca * cb;
      r.add_term(m, s > 0 ? c : -c);
    }
  }
  return r;
}

SuperParamPoly SuperParamPoly::scaled(const Scalar& s) const {
  return map_coeffs([&](const Scalar& c) { return c * s; });
}

SuperParamPoly SuperParamPoly::truncated(int max_degree) const {
  SuperParamPoly r;
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) <= max_degree) r.terms_.emplace(m, c);
  return r;
}

SuperParamPoly SuperParamPoly::substituted(const std::map<ParamName, Scalar>& values) const {
  for (const auto& [p, v] : values)
    if (p.parity() && !v.is_zero())
      throw std::invalid_argument("odd parameter " + p.str() + " can only be assigned 0");
  SuperParamPoly r;
  for (const auto& [m, c] : terms_) {
    ParamMonomial rest;
    Scalar k = c;
    for (const auto& v : m) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest.push_back(v);
      } else {
        k *= it->second;
      }
    }
    // Only even parameters are removed, so the relative order of odd ones is kept.
    r.add_term(rest, k);
  }
  return r;
}

SuperParamPoly SuperParamPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.rbegin()->second.inverse());
}

std::string SuperParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-' && c.is_rational();
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = cs == "1";
    if (m.empty()) {
      os << cs;
      continue;
    }
    if (!unit) {
      if (c.is_rational())
        os << cs << "*";
      else
        os << "(" << cs << ")*";
    }
    os << monomial_str(m);
  }
  return os.str();
}

ConditionIdeal::ConditionIdeal(std::vector<SuperParamPoly> generators) {
  for (auto& g : generators) add(g);
}

void ConditionIdeal::add(const SuperParamPoly& g) {
  if (g.is_zero()) return;
  if (!g.is_homogeneous()) throw NonHomogeneous("ideal generator must be homogeneous: " + g.str());
  SuperParamPoly n = g.monic();
  for (const auto& h : gens_)
    if (h == n) return;
  gens_.push_back(n);
  if (n.terms().size() == 1) monomial_gens_.push_back(n.terms().begin()->first);
}

SuperParamPoly ConditionIdeal::reduce_monomials(const SuperParamPoly& f) const {
  SuperParamPoly r;
  for (const auto& [m, c] : f.terms()) {
    bool killed = false;
    for (const auto& g : monomial_gens_) {
      if (divides(g, m)) {
        killed = true;
        break;
      }
    }
    if (!killed) r += SuperParamPoly::monomial(m, c);
  }
  return r;
}

bool ConditionIdeal::contains(const SuperParamPoly& f) const {
  SuperParamPoly target = reduce_monomials(f);
  if (target.is_zero()) return true;

  std::vector<const SuperParamPoly*> others;
  for (const auto& g : gens_)
    if (g.terms().size() > 1) others.push_back(&g);
  if (others.empty()) return false;

  // Rows u*g reachable from the monomials of the target: only rows sharing a
  // monomial with the span of the target can take part in a representation.
  std::map<ParamMonomial, std::size_t> index;
  std::vector<ParamMonomial> pending;
  auto note = [&](const ParamMonomial& m) {
    if (index.emplace(m, index.size()).second) pending.push_back(m);
  };
  for (const auto& [m, c] : target.terms()) note(m);

  std::vector<SuperParamPoly> rows;
  std::set<std::pair<std::size_t, ParamMonomial>> seen;
  while (!pending.empty()) {
    ParamMonomial m = pending.back();
    pending.pop_back();
    for (std::size_t gi = 0; gi < others.size(); ++gi) {
      for (const auto& [gm, gc] : others[gi]->terms()) {
        if (!divides(gm, m)) continue;
        ParamMonomial u = quotient(m, gm);
        if (!seen.emplace(gi, u).second) continue;
        SuperParamPoly row = reduce_monomials(SuperParamPoly::monomial(u) * *others[gi]);
        if (row.is_zero()) continue;
        for (const auto& [rm, rc] : row.terms()) note(rm);
        rows.push_back(std::move(row));
        if (rows.size() > kMaxClosureRows)
          throw std::runtime_error("ideal membership closure exceeds the row cap");
      }
    }
  }
  if (rows.empty()) return false;

  Matrix a(index.size(), rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (const auto& [m, c] : rows[j].terms()) a(index.at(m), j) = c;
  Vector b(index.size());
  for (const auto& [m, c] : target.terms()) b[index.at(m)] = c;
  return solve_linear(a, b).consistent;
}

bool ConditionIdeal::annihilated_by(const std::map<ParamName, Scalar>& values) const {
  for (const auto& g : gens_)
    if (!g.substituted(values).is_zero()) return false;
  return true;
}

}  // namespace kdef
